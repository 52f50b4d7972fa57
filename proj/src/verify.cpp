#include "eacode/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "eacode/error.hpp"

namespace eacode {

namespace {

std::size_t sz(int x) { return static_cast<std::size_t>(x); }

// Next k-subset of [0, n) in lexicographic order; false after the last one.
bool next_subset(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[sz(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++c[sz(i)];
    for (int j = i + 1; j < k; ++j) c[sz(j)] = c[sz(j - 1)] + 1;
    return true;
}

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(sz(k));
    for (int i = 0; i < k; ++i) c[sz(i)] = i;
    do out.push_back(c);
    while (next_subset(c, n));
    return out;
}

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * sz(n - k + i) / sz(i);
    return r;
}

// Generator columns of the given nodes, then selector columns for the given SR nodes.
Matrix view_matrix(const LinearScheme& s, const std::vector<int>& nodes, const std::vector<int>& srs) {
    const CodeSpec& sp = s.spec;
    std::vector<std::size_t> cols;
    for (int n : nodes)
        for (std::size_t c : s.node_columns(n)) cols.push_back(c);
    Matrix m = s.generator().select_cols(cols);
    Matrix sel(s.field, sp.input_len(), srs.size() * sp.sr_len());
    for (std::size_t i = 0; i < srs.size(); ++i)
        for (std::size_t j = 0; j < sp.sr_len(); ++j) sel(sp.b_offset(srs[i]) + j, i * sp.sr_len() + j) = 1;
    return Matrix::hconcat(m, sel);
}

Matrix message_projection(const LinearScheme& s) {
    Matrix p(s.field, s.spec.input_len(), s.spec.msg_len());
    for (std::size_t j = 0; j < s.spec.msg_len(); ++j) p(j, j) = 1;
    return p;
}

AuditReport run_audit(const LinearScheme& s, const AuditOptions& opt, bool parallel) {
    AuditReport rep;
    auto ps = enumerate_patterns(s.spec, opt.pattern_cap);
    rep.patterns.resize(ps.size());
    const long n = static_cast<long>(ps.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < n; ++i) {
        auto& v = rep.patterns[static_cast<std::size_t>(i)];
        v.pattern = ps[static_cast<std::size_t>(i)];
        v.decodable = check_decodability(s, v.pattern);
        v.secure = check_security(s, v.pattern);
    }
    rep.sr_recovery = check_sr_recovery(s);
    rep.pass = rep.sr_recovery && rep.failures() == 0;
    return rep;
}

}  // namespace

std::string to_string(const ErasurePattern& p) {
    std::ostringstream os;
    os << "K=";
    for (std::size_t i = 0; i < p.storage.size(); ++i) os << (i ? "," : "") << p.storage[i] + 1;
    os << ";KB=";
    for (std::size_t i = 0; i < p.sr.size(); ++i) os << (i ? "," : "") << p.sr[i] + 1;
    return os.str();
}

ErasurePattern parse_pattern(const std::string& s) {
    auto bad = [&] { return Error(ErrorCode::BadFormat, "pattern must look like 'K=1,3;KB=1,2', got '" + s + "'"); };
    auto semi = s.find(';');
    if (semi == std::string::npos || s.rfind("K=", 0) != 0 || s.compare(semi + 1, 3, "KB=") != 0) throw bad();
    auto parse_list = [&](const std::string& t) {
        std::vector<int> out;
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            try {
                std::size_t used = 0;
                int v = std::stoi(item, &used);
                if (used != item.size() || v < 1) throw bad();
                out.push_back(v - 1);
            } catch (const std::logic_error&) {
                throw bad();
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    ErasurePattern p;
    p.storage = parse_list(s.substr(2, semi - 2));
    p.sr = parse_list(s.substr(semi + 4));
    return p;
}

std::size_t pattern_count(const CodeSpec& spec) {
    return static_cast<std::size_t>(binom(spec.N, spec.K) * binom(spec.NB, spec.KB));
}

std::vector<ErasurePattern> enumerate_patterns(const CodeSpec& spec, std::size_t cap) {
    std::uint64_t total = binom(spec.N, spec.K) * binom(spec.NB, spec.KB);
    if (total > cap)
        throw Error(ErrorCode::TooManyPatterns,
                    std::to_string(total) + " patterns exceed the cap of " + std::to_string(cap));
    std::vector<ErasurePattern> out;
    out.reserve(static_cast<std::size_t>(total));
    auto ks = subsets(spec.N, spec.K);
    auto kbs = subsets(spec.NB, spec.KB);
    for (auto& k : ks)
        for (auto& kb : kbs) out.push_back({k, kb});
    return out;
}

void check_pattern(const CodeSpec& spec, const ErasurePattern& p) {
    auto ok = [](const std::vector<int>& v, int n, int k) {
        if (v.size() != sz(k)) return false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= n) return false;
            if (i && v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!ok(p.storage, spec.N, spec.K) || !ok(p.sr, spec.NB, spec.KB))
        throw Error(ErrorCode::PatternMismatch, "pattern " + to_string(p) + " does not fit (N,K,N_B,K_B) = (" +
                                                    std::to_string(spec.N) + "," + std::to_string(spec.K) + "," +
                                                    std::to_string(spec.NB) + "," + std::to_string(spec.KB) + ")");
}

ErasurePattern erased_part(const CodeSpec& spec, const ErasurePattern& p) {
    ErasurePattern e;
    for (int n = 0; n < spec.N; ++n)
        if (!std::binary_search(p.storage.begin(), p.storage.end(), n)) e.storage.push_back(n);
    for (int n = 0; n < spec.NB; ++n)
        if (!std::binary_search(p.sr.begin(), p.sr.end(), n)) e.sr.push_back(n);
    return e;
}

Matrix observation_matrix(const LinearScheme& s, const ErasurePattern& p) {
    check_pattern(s.spec, p);
    return view_matrix(s, p.storage, p.sr);
}

Matrix erased_matrix(const LinearScheme& s, const ErasurePattern& p) {
    check_pattern(s.spec, p);
    auto e = erased_part(s.spec, p);
    return view_matrix(s, e.storage, e.sr);
}

bool check_decodability(const LinearScheme& s, const ErasurePattern& p) {
    Matrix obs = observation_matrix(s, p);
    if (s.spec.msg_len() == 0) return true;
    return rank(Matrix::hconcat(obs, message_projection(s))) == rank(obs);
}

bool check_security(const LinearScheme& s, const ErasurePattern& p) {
    Matrix era = erased_matrix(s, p);
    const std::size_t m = s.spec.msg_len();
    if (m == 0 || era.cols() == 0) return true;
    Matrix bz = era.block(m, era.rows() - m, 0, era.cols());
    // rowspace(M_a) ⊆ rowspace(M_bz)  <=>  adding the message rows keeps the rank.
    return rank(era) == rank(bz);
}

bool check_sr_recovery(const LinearScheme& s) {
    const CodeSpec& sp = s.spec;
    if (sp.b_len() == 0) return true;
    Matrix g = s.generator();
    Matrix pb(s.field, sp.input_len(), sp.b_len());
    for (std::size_t j = 0; j < sp.b_len(); ++j) pb(sp.msg_len() + j, j) = 1;
    return rank(Matrix::hconcat(g, pb)) == rank(g);
}

std::size_t AuditReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(patterns.begin(), patterns.end(), [](auto& v) { return !v.decodable || !v.secure; }));
}

AuditReport audit(const LinearScheme& s, const AuditOptions& opt) { return run_audit(s, opt, true); }
AuditReport audit_serial(const LinearScheme& s, const AuditOptions& opt) { return run_audit(s, opt, false); }

Observation observe(const LinearScheme& s, const ErasurePattern& p, const StorageWord& word, const Vector& b) {
    check_pattern(s.spec, p);
    if (word.size() != sz(s.spec.N) || b.size() != s.spec.b_len())
        throw Error(ErrorCode::LengthMismatch, "storage word or SR vector has the wrong length");
    Observation o;
    for (int n : p.storage) o.storage.push_back(word[sz(n)]);
    for (int i : p.sr) {
        auto start = b.begin() + static_cast<long>(s.spec.b_offset(i) - s.spec.msg_len());
        o.sr.emplace_back(start, start + static_cast<long>(s.spec.sr_len()));
    }
    return o;
}

PatternDecoder::PatternDecoder(const LinearScheme& s, const ErasurePattern& p)
    : field_(s.field),
      pattern_(p),
      kappa_(sz(s.spec.kappa)),
      sr_len_(s.spec.sr_len()),
      d_(s.field, 0, 0),
      checks_(s.field, 0, 0) {
    Matrix obs = observation_matrix(s, p);
    const std::size_t m = s.spec.msg_len();
    // Column i of D solves M_obs d = e_i, so that (x M_obs) d = x_i.
    Matrix ot = obs.transpose();
    d_ = Matrix(field_, obs.cols(), m);
    for (std::size_t i = 0; i < m; ++i) {
        Vector e(obs.rows(), 0);
        e[i] = 1;
        auto sol = try_solve(ot, e);
        if (!sol) throw Error(ErrorCode::Infeasible, "message not decodable from pattern " + to_string(p));
        for (std::size_t j = 0; j < sol->size(); ++j) d_(j, i) = (*sol)[j];
    }
    // The image of M_obs is annihilated exactly by its right kernel.
    checks_ = kernel(ot).basis().transpose();
}

Vector PatternDecoder::flatten(const Observation& obs) const {
    if (obs.storage.size() != pattern_.storage.size() || obs.sr.size() != pattern_.sr.size())
        throw Error(ErrorCode::LengthMismatch, "observation block count does not match the pattern");
    Vector v;
    for (auto& blk : obs.storage) {
        if (blk.size() != kappa_) throw Error(ErrorCode::LengthMismatch, "storage block length");
        v.insert(v.end(), blk.begin(), blk.end());
    }
    for (auto& blk : obs.sr) {
        if (blk.size() != sr_len_) throw Error(ErrorCode::LengthMismatch, "SR block length");
        v.insert(v.end(), blk.begin(), blk.end());
    }
    for (Elem e : v)
        if (!field_.contains(e)) throw Error(ErrorCode::BadFormat, "observed symbol outside field");
    return v;
}

Vector PatternDecoder::decode(const Observation& obs) const {
    Vector v = flatten(obs);
    for (Elem e : mul(v, checks_))
        if (e != 0) throw Error(ErrorCode::InconsistentObservation, "observation is not a codeword restriction");
    return mul(v, d_);
}

Vector decode(const LinearScheme& s, const ErasurePattern& p, const Observation& obs) {
    return PatternDecoder(s, p).decode(obs);
}

// ---- entropy oracle -------------------------------------------------------

namespace {

Matrix var_columns(const LinearScheme& s, const VarSet& vars) {
    const CodeSpec& sp = s.spec;
    const std::size_t r = sp.input_len();
    Matrix g = s.generator();
    Matrix out(s.field, r, 0);
    for (const Var& v : vars) {
        Matrix part(s.field, r, 0);
        switch (v.kind) {
            case Var::Message:
                part = Matrix(s.field, r, sp.msg_len());
                for (std::size_t j = 0; j < sp.msg_len(); ++j) part(j, j) = 1;
                break;
            case Var::Storage:
                if (v.index < 0 || v.index >= sp.N) throw Error(ErrorCode::PatternMismatch, "storage index");
                part = g.select_cols(s.node_columns(v.index));
                break;
            case Var::SR:
                if (v.index < 0 || v.index >= sp.NB) throw Error(ErrorCode::PatternMismatch, "SR index");
                part = Matrix(s.field, r, sp.sr_len());
                for (std::size_t j = 0; j < sp.sr_len(); ++j) part(sp.b_offset(v.index) + j, j) = 1;
                break;
            case Var::Local:
                part = Matrix(s.field, r, sz(sp.L));
                for (std::size_t j = 0; j < sz(sp.L); ++j) part(sp.z_offset() + j, j) = 1;
                break;
        }
        out = Matrix::hconcat(out, part);
    }
    return out;
}

// Exact log_q of a count that must be a power of q.
Rational log_q(std::uint64_t count, std::uint32_t q) {
    std::int64_t e = 0;
    while (count > 1) {
        if (count % q != 0) throw Error(ErrorCode::BadFormat, "support size is not a power of q");
        count /= q;
        ++e;
    }
    return Rational(e);
}

}  // namespace

std::vector<Rational> joint_entropies(const LinearScheme& s, const std::vector<VarSet>& sets,
                                      const OracleOptions& opt) {
    const Field& f = s.field;
    const std::size_t r = s.spec.input_len();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        total *= f.q();
        if (total > opt.input_cap)
            throw Error(ErrorCode::TooLarge, "input space q^" + std::to_string(r) + " exceeds the oracle cap");
    }

    std::vector<Matrix> proj;
    for (auto& vs : sets) proj.push_back(var_columns(s, vs));

    // Inputs are enumerated digit by digit over F_p: bumping digit k of
    // coordinate i adds p^k to x_i, i.e. adds step[i][k] = p^k * row_i to each
    // projection. Wrapping a digit from p-1 to 0 adds the same step once more.
    const std::uint32_t p = f.p(), m = f.m();
    struct Step {
        std::vector<Vector> per_set;
    };
    std::vector<Step> steps;
    for (std::size_t i = 0; i < r; ++i) {
        Elem unit = 1;
        for (std::uint32_t k = 0; k < m; ++k) {
            Step st;
            for (auto& pm : proj) {
                Vector v(pm.cols());
                for (std::size_t c = 0; c < pm.cols(); ++c) v[c] = f.mul(unit, pm(i, c));
                st.per_set.push_back(std::move(v));
            }
            steps.push_back(std::move(st));
            unit *= p;  // next base-p digit of the integer representation
        }
    }

    // Projections whose values fit a 64-bit mixed-radix integer are keyed
    // that way; wider ones fall back to byte strings.
    std::vector<bool> narrow(proj.size());
    for (std::size_t t = 0; t < proj.size(); ++t) {
        long double bits = static_cast<long double>(proj[t].cols()) * std::log2(static_cast<long double>(f.q()));
        narrow[t] = bits < 63;
    }

    // One pass over the inputs records every projected value of a batch;
    // sorting then gives support sizes and multiplicities.
    auto tabulate = [&](const std::vector<std::size_t>& batch) {
        std::vector<Vector> cur;
        for (auto t : batch) cur.emplace_back(proj[t].cols(), 0);
        std::vector<std::vector<std::uint64_t>> ints(batch.size());
        std::vector<std::vector<std::string>> strs(batch.size());
        for (std::size_t b = 0; b < batch.size(); ++b) {
            if (narrow[batch[b]])
                ints[b].reserve(total);
            else
                strs[b].reserve(total);
        }
        std::vector<std::uint32_t> digits(steps.size(), 0);
        auto record = [&] {
            for (std::size_t b = 0; b < batch.size(); ++b) {
                const Vector& v = cur[b];
                if (narrow[batch[b]]) {
                    std::uint64_t k = 0;
                    for (Elem x : v) k = k * f.q() + x;
                    ints[b].push_back(k);
                } else {
                    std::string k(v.size() * 2, '\0');
                    for (std::size_t c = 0; c < v.size(); ++c) {
                        k[2 * c] = static_cast<char>(v[c] & 0xff);
                        k[2 * c + 1] = static_cast<char>(v[c] >> 8);
                    }
                    strs[b].push_back(std::move(k));
                }
            }
        };
        auto apply = [&](std::size_t d) {
            for (std::size_t b = 0; b < batch.size(); ++b) {
                auto& v = cur[b];
                const auto& w = steps[d].per_set[batch[b]];
                for (std::size_t c = 0; c < v.size(); ++c)
                    if (w[c]) v[c] = f.add(v[c], w[c]);
            }
        };
        record();
        for (std::uint64_t n = 1; n < total; ++n) {
            std::size_t d = 0;
            while (true) {
                apply(d);
                if (++digits[d] < p) break;
                digits[d] = 0;  // p additions of the same step cancel
                ++d;
            }
            record();
        }

        // Support size of each projection; throws unless every value in the
        // support is equally likely (a linear image of a uniform input is).
        auto support = [](auto& keys) {
            std::sort(keys.begin(), keys.end());
            std::uint64_t distinct = 0, run = 0, first_run = 0;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                ++run;
                if (i + 1 == keys.size() || keys[i + 1] != keys[i]) {
                    if (distinct++ == 0) first_run = run;
                    if (run != first_run) throw Error(ErrorCode::BadFormat, "projected distribution is not uniform");
                    run = 0;
                }
            }
            return distinct;
        };
        std::vector<std::uint64_t> sizes;
        for (std::size_t b = 0; b < batch.size(); ++b)
            sizes.push_back(narrow[batch[b]] ? support(ints[b]) : support(strs[b]));
        return sizes;
    };

    // Batches keep the recorded values within opt.table_budget entries.
    std::vector<Rational> out(sets.size());
    const std::uint64_t per_batch = std::max<std::uint64_t>(1, opt.table_budget / total);
    for (std::size_t first = 0; first < sets.size(); first += per_batch) {
        std::vector<std::size_t> batch;
        for (std::size_t t = first; t < sets.size() && batch.size() < per_batch; ++t) batch.push_back(t);
        auto sizes = tabulate(batch);
        for (std::size_t b = 0; b < batch.size(); ++b) out[batch[b]] = log_q(sizes[b], f.q());
    }
    return out;
}

Rational entropy_oracle(const LinearScheme& s, const VarSet& target, const VarSet& conditioning,
                        const OracleOptions& opt) {
    VarSet joint = target;
    joint.insert(joint.end(), conditioning.begin(), conditioning.end());
    auto h = joint_entropies(s, {joint, conditioning}, opt);
    return h[0] - h[1];
}

std::vector<OracleVerdict> oracle_pattern_verdicts(const LinearScheme& s, const std::vector<ErasurePattern>& ps,
                                                   const OracleOptions& opt) {
    std::vector<VarSet> sets{{Var{Var::Message}}};
    for (auto& p : ps) {
        check_pattern(s.spec, p);
        auto e = erased_part(s.spec, p);
        VarSet obs, era;
        for (int n : p.storage) obs.push_back({Var::Storage, n});
        for (int i : p.sr) obs.push_back({Var::SR, i});
        for (int n : e.storage) era.push_back({Var::Storage, n});
        for (int i : e.sr) era.push_back({Var::SR, i});
        VarSet obs_m = obs, era_m = era;
        obs_m.push_back({Var::Message});
        era_m.push_back({Var::Message});
        sets.push_back(obs);
        sets.push_back(obs_m);
        sets.push_back(era);
        sets.push_back(era_m);
    }
    auto h = joint_entropies(s, sets, opt);
    std::vector<OracleVerdict> out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        const Rational &h_obs = h[1 + 4 * i], &h_obs_m = h[2 + 4 * i], &h_era = h[3 + 4 * i],
                       &h_era_m = h[4 + 4 * i];
        OracleVerdict v;
        v.decodable = (h_obs_m - h_obs) == Rational(0);  // H(Y0 | obs)
        v.secure = (h[0] + h_era - h_era_m) == Rational(0);  // I(Y0 ; era)
        out.push_back(v);
    }
    return out;
}

bool oracle_sr_recovery(const LinearScheme& s, const OracleOptions& opt) {
    VarSet ys, bs;
    for (int n = 0; n < s.spec.N; ++n) ys.push_back({Var::Storage, n});
    for (int i = 0; i < s.spec.NB; ++i) bs.push_back({Var::SR, i});
    return entropy_oracle(s, bs, ys, opt) == Rational(0);
}

}  // namespace eacode
