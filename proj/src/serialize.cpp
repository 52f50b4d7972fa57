#include "eacode/serialize.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "eacode/error.hpp"

namespace eacode {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::BadFormat, std::string("missing key '") + key + "'");
    return j.at(key);
}

int need_int(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (!v.is_number_integer()) throw Error(ErrorCode::BadFormat, std::string("'") + key + "' must be an integer");
    return v.get<int>();
}

Rational need_rational(const Json& j, const char* key) {
    const Json& v = need(j, key);
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    throw Error(ErrorCode::BadFormat, std::string("'") + key + "' must be a fraction string");
}

Json pattern_json(const ErasurePattern& p) { return to_string(p); }

}  // namespace

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (auto& r : m.to_rows()) rows.push_back(r);
    return rows;
}

Matrix matrix_from_json(const Field& f, const Json& j, std::size_t cols_if_empty) {
    if (!j.is_array()) throw Error(ErrorCode::BadFormat, "matrix must be an array of rows");
    std::vector<std::vector<Elem>> rows;
    for (auto& r : j) {
        if (!r.is_array()) throw Error(ErrorCode::BadFormat, "matrix row must be an array");
        std::vector<Elem> row;
        for (auto& e : r) {
            if (!e.is_number_integer() || e.get<std::int64_t>() < 0 || e.get<std::uint64_t>() >= f.q())
                throw Error(ErrorCode::BadFormat, "matrix entry outside the field");
            row.push_back(static_cast<Elem>(e.get<std::uint64_t>()));
        }
        rows.push_back(std::move(row));
    }
    return Matrix::from_rows(f, rows, cols_if_empty);
}

Json to_json(const CodeSpec& s) {
    return Json{{"N", s.N},   {"K", s.K},         {"NB", s.NB},
                {"KB", s.KB}, {"q", s.q},         {"kappa", s.kappa},
                {"lambda0", to_string(s.lambda0)}, {"lambdaB", to_string(s.lambdaB)}, {"L", s.L}};
}

CodeSpec spec_from_json(const Json& j) {
    CodeSpec s;
    s.N = need_int(j, "N");
    s.K = need_int(j, "K");
    s.NB = need_int(j, "NB");
    s.KB = need_int(j, "KB");
    int q = need_int(j, "q");
    if (q < 2) throw Error(ErrorCode::BadFormat, "q must be at least 2");
    s.q = static_cast<std::uint32_t>(q);
    s.kappa = need_int(j, "kappa");
    s.lambda0 = need_rational(j, "lambda0");
    s.lambdaB = need_rational(j, "lambdaB");
    s.L = need_int(j, "L");
    s.validate();
    return s;
}

Json to_json(const LinearScheme& s) {
    return Json{{"format_version", kFormatVersion},
                {"label", s.label},
                {"spec", to_json(s.spec)},
                {"A", to_json(s.A)},
                {"B", to_json(s.B)},
                {"Z", to_json(s.Z)}};
}

LinearScheme scheme_from_json(const Json& j) {
    if (need_int(j, "format_version") != kFormatVersion) throw Error(ErrorCode::BadFormat, "unsupported format_version");
    const Json& lab = need(j, "label");
    if (!lab.is_string()) throw Error(ErrorCode::BadFormat, "label must be a string");
    CodeSpec spec = spec_from_json(need(j, "spec"));
    Field f = Field::make(spec.q);
    std::size_t cols = spec.storage_len();
    return LinearScheme(lab.get<std::string>(), spec, f, matrix_from_json(f, need(j, "A"), cols),
                        matrix_from_json(f, need(j, "B"), cols), matrix_from_json(f, need(j, "Z"), cols));
}

Json to_json(const AuditReport& r, const std::string& label) {
    Json pats = Json::array();
    for (auto& v : r.patterns)
        pats.push_back({{"pattern", pattern_json(v.pattern)}, {"decodable", v.decodable}, {"secure", v.secure}});
    return Json{{"format_version", kFormatVersion},
                {"label", label},
                {"pass", r.pass},
                {"sr_recovery", r.sr_recovery},
                {"failures", r.failures()},
                {"patterns", pats}};
}

Json to_json(const std::vector<OracleVerdict>& v, const std::vector<ErasurePattern>& ps, bool sr_recovery) {
    Json pats = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        pats.push_back({{"pattern", pattern_json(ps[i])}, {"decodable", v[i].decodable}, {"secure", v[i].secure}});
    return Json{{"sr_recovery", sr_recovery}, {"patterns", pats}};
}

Json to_json(const RegionParams& p, const std::vector<BoundarySample>& samples) {
    Json bps = Json::array();
    for (auto& b : breakpoints(p)) bps.push_back(to_string(b));
    Json ext = Json::array();
    for (auto& e : extreme_points(p))
        ext.push_back({{"lambda0", to_string(e.point.lambda0)},
                       {"lambdaB", to_string(e.point.lambdaB)},
                       {"label", e.label},
                       {"conjectured_segment", e.conjectured_segment}});
    Json pts = Json::array();
    for (auto& s : samples)
        pts.push_back({{"lambdaB", to_string(s.lambdaB)},
                       {"inner_lambda0", to_string(s.inner)},
                       {"outer_lambda0", to_string(s.outer)},
                       {"lambdaB_decimal", to_decimal(s.lambdaB)},
                       {"inner_decimal", to_decimal(s.inner)},
                       {"outer_decimal", to_decimal(s.outer)},
                       {"breakpoint", s.breakpoint}});
    return Json{{"format_version", kFormatVersion},
                {"params", {{"N", p.N}, {"K", p.K}, {"NB", p.NB}, {"KB", p.KB}}},
                {"case", to_string(case_of(p))},
                {"breakpoints", bps},
                {"extreme_points", ext},
                {"samples", pts}};
}

Json to_json(const SimReport& r) {
    Json pats = Json::array();
    for (auto& p : r.patterns)
        pats.push_back({{"pattern", pattern_json(p.pattern)}, {"attempts", p.attempts}, {"successes", p.successes}});
    Json fails = Json::array();
    for (auto& f : r.failures)
        fails.push_back({{"trial", f.trial}, {"pattern", pattern_json(f.pattern)}, {"reason", f.reason}});
    return Json{{"format_version", kFormatVersion},
                {"label", r.label},
                {"pass", r.pass()},
                {"trials", r.trials},
                {"seed", r.seed},
                {"policy", to_string(r.policy)},
                {"payload_bytes", r.payload_bytes},
                {"chunks", r.chunks},
                {"attempts", r.attempts},
                {"successes", r.successes},
                {"payload_roundtrip", r.payload_roundtrip},
                {"sr_checks", r.sr_checks},
                {"sr_failures", r.sr_failures},
                {"dits_stored", r.dits_stored},
                {"failure_count", r.failure_count},
                {"failures", fails},
                {"patterns", pats}};
}

Json to_json(const LabelUnitary& u, const SubsystemLayout& layout) {
    Json targets = Json::array();
    for (auto t : u.targets) targets.push_back(layout.parts.at(t).name);
    return Json{{"description", u.description}, {"targets", targets}, {"matrix", to_json(u.matrix)}};
}

Json to_json(const std::vector<QuantumVerdict>& v, const SubsystemLayout& layout, const std::string& label,
             bool with_transcripts) {
    Json lay = Json::array();
    for (auto& p : layout.parts) lay.push_back({{"name", p.name}, {"dits", p.dits}});
    Json pats = Json::array();
    bool pass = true;
    for (auto& x : v) {
        Json e{{"pattern", pattern_json(x.pattern)}, {"synthesized", x.synthesized}, {"factorizes", x.factorizes}};
        if (with_transcripts) {
            Json steps = Json::array();
            for (auto& u : x.transcript) steps.push_back(to_json(u, layout));
            e["transcript"] = steps;
        }
        pass = pass && x.factorizes;
        pats.push_back(std::move(e));
    }
    return Json{{"format_version", kFormatVersion}, {"label", label}, {"pass", pass}, {"layout", lay}, {"patterns", pats}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadFormat, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out || !(out << text)) throw Error(ErrorCode::BadFormat, "cannot write " + path);
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::BadFormat, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace eacode
