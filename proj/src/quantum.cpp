#include "eacode/quantum.hpp"

#include <exception>
#include <numeric>

#include "eacode/error.hpp"

namespace eacode {

namespace {

Matrix row_matrix(const Field& f, const Vector& v) {
    Matrix m(f, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

Vector column(const Matrix& m, std::size_t c) {
    Vector v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) v[i] = m(i, c);
    return v;
}

Vector pick(const Vector& v, const std::vector<std::size_t>& idx) {
    Vector out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(v[i]);
    return out;
}

// Rows of [P_a | G | P_b] for input coordinates [first, last).
Matrix state_rows(const LinearScheme& s, std::size_t first, std::size_t last) {
    const CodeSpec& sp = s.spec;
    const std::size_t m = sp.msg_len(), nq = sp.storage_len();
    Matrix g = s.generator();
    Matrix out(s.field, last - first, m + nq + sp.b_len());
    for (std::size_t i = first; i < last; ++i) {
        if (i < m) out(i - first, i) = 1;
        for (std::size_t c = 0; c < nq; ++c) out(i - first, m + c) = g(i, c);
        if (i >= m && i < m + sp.b_len()) out(i - first, m + nq + (i - m)) = 1;
    }
    return out;
}

void require_isometry(const LinearScheme& s) {
    const CodeSpec& sp = s.spec;
    Matrix g = s.generator();
    Matrix sel(s.field, sp.input_len(), sp.msg_len() + sp.b_len());
    for (std::size_t i = 0; i < sp.msg_len() + sp.b_len(); ++i) sel(i, i) = 1;
    if (rank(Matrix::hconcat(g, sel)) != rank(g))
        throw Error(ErrorCode::InfeasibleScheme, "message and SR are not recoverable from all storage nodes");
}

std::vector<LabelUnitary> synthesize(const LinearScheme& s, const ErasurePattern& p, const CosetState& state) {
    if (!check_decodability(s, p))
        throw Error(ErrorCode::InfeasibleScheme, "message not decodable from pattern " + to_string(p));
    const Field& f = s.field;
    const CodeSpec& sp = s.spec;
    const SubsystemLayout& lay = state.layout();
    auto avail = available_subsystems(lay, p);
    auto coords = lay.coordinates(avail);
    const std::size_t m = coords.size();
    const std::size_t nq = p.storage.size() * static_cast<std::size_t>(sp.kappa);
    std::vector<LabelUnitary> steps;

    // Step 1: remove the contribution of the surviving SR nodes from Q_K.
    Matrix c(f, m - nq, nq);
    for (std::size_t bi = 0; bi < p.sr.size(); ++bi)
        for (std::size_t j = 0; j < sp.sr_len(); ++j) {
            std::size_t row = static_cast<std::size_t>(p.sr[bi]) * sp.sr_len() + j;
            std::size_t col = 0;
            for (int n : p.storage)
                for (auto gc : s.node_columns(n)) c(bi * sp.sr_len() + j, col++) = s.B(row, gc);
        }
    CosetState cur = state;
    if (!c.is_zero()) {
        Matrix t1 = Matrix::identity(f, m);
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) t1(nq + i, j) = f.neg(c(i, j));
        steps.push_back({"subtract surviving SR contributions from storage", avail, t1});
        cur = apply_label_unitary(cur, steps.back());
    }

    // Step 2: new coordinates carry, in order, the message, a basis of the
    // part shared with the erased view, the rest of the observed span, and
    // zero functionals. Functionals are columns of the state generator.
    const Matrix& g = cur.generator();
    Matrix sv = g.select_cols(coords);
    std::vector<std::size_t> erased;
    {
        std::vector<bool> kept(lay.total(), false);
        for (auto x : coords) kept[x] = true;
        for (std::size_t x = lay.offset(1); x < lay.total(); ++x)
            if (!kept[x]) erased.push_back(x);
    }
    Matrix st = sv.transpose();
    Subspace obs_span = Subspace::span(st);
    Subspace era_span = Subspace::span(g.select_cols(erased).transpose());
    Subspace shared = intersection(obs_span, era_span);

    std::vector<Vector> targets;
    Subspace chosen(f, g.rows());
    auto take = [&](const Vector& v) {
        if (chosen.contains(v)) return false;
        targets.push_back(v);
        chosen = sum(chosen, Subspace::span(row_matrix(f, v)));
        return true;
    };
    const std::size_t msg = sp.msg_len();
    for (std::size_t i = 0; i < msg; ++i) targets.push_back(column(g, lay.offset(0) + i));
    chosen = Subspace::span(g.select_cols(lay.coordinates({0})).transpose());
    std::size_t n_shared = 0, n_rest = 0;
    for (auto& row : shared.basis().to_rows()) n_shared += take(row);
    for (auto& row : obs_span.basis().to_rows()) n_rest += take(row);

    Matrix t2(f, m, m);
    std::size_t col = 0;
    for (auto& tgt : targets) {
        Vector t = solve(st, tgt);
        for (std::size_t i = 0; i < m; ++i) t2(i, col) = t[i];
        ++col;
    }
    Subspace null = kernel(st);
    for (auto& row : null.basis().to_rows()) {
        for (std::size_t i = 0; i < m; ++i) t2(i, col) = row[i];
        ++col;
    }
    steps.push_back({"relabel survivors as (message " + std::to_string(msg) + ", shared " + std::to_string(n_shared) +
                         ", private " + std::to_string(n_rest) + ", null " + std::to_string(null.dim()) + ")",
                     avail, t2});
    return steps;
}

}  // namespace

SubsystemLayout SubsystemLayout::for_spec(const CodeSpec& spec) {
    SubsystemLayout l;
    l.parts.push_back({"R", spec.msg_len()});
    for (int n = 0; n < spec.N; ++n) l.parts.push_back({"Q" + std::to_string(n + 1), static_cast<std::size_t>(spec.kappa)});
    for (int i = 0; i < spec.NB; ++i) l.parts.push_back({"B" + std::to_string(i + 1), spec.sr_len()});
    return l;
}

std::size_t SubsystemLayout::total() const {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0}, [](std::size_t a, auto& s) { return a + s.dits; });
}

std::size_t SubsystemLayout::offset(std::size_t i) const {
    if (i > parts.size()) throw Error(ErrorCode::LayoutMismatch, "subsystem index out of range");
    std::size_t o = 0;
    for (std::size_t j = 0; j < i; ++j) o += parts[j].dits;
    return o;
}

std::size_t SubsystemLayout::index(const std::string& name) const {
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].name == name) return i;
    throw Error(ErrorCode::LayoutMismatch, "no subsystem named " + name);
}

std::vector<std::size_t> SubsystemLayout::coordinates(const std::vector<std::size_t>& subsystems) const {
    std::vector<std::size_t> out;
    for (auto i : subsystems) {
        if (i >= parts.size()) throw Error(ErrorCode::LayoutMismatch, "subsystem index out of range");
        std::size_t o = offset(i);
        for (std::size_t d = 0; d < parts[i].dits; ++d) out.push_back(o + d);
    }
    return out;
}

CosetState::CosetState(SubsystemLayout layout, const Matrix& generator, Vector offset)
    : layout_(std::move(layout)), gen_(generator.field(), 0, generator.cols()), offset_(std::move(offset)) {
    if (generator.cols() != layout_.total() || offset_.size() != layout_.total())
        throw Error(ErrorCode::LayoutMismatch, "state width does not match the layout");
    auto e = rref(generator);
    gen_ = e.reduced.block(0, e.rank(), 0, generator.cols());
    const Field& f = generator.field();
    for (std::size_t i = 0; i < e.rank(); ++i) {
        Elem k = offset_[e.pivots[i]];
        if (!k) continue;
        for (std::size_t j = 0; j < offset_.size(); ++j)
            if (gen_(i, j)) offset_[j] = f.sub(offset_[j], f.mul(k, gen_(i, j)));
    }
}

CosetState css_encode_state(const LinearScheme& s) {
    require_isometry(s);
    auto lay = SubsystemLayout::for_spec(s.spec);
    std::size_t n = lay.total();
    return CosetState(std::move(lay), state_rows(s, 0, s.spec.input_len()), Vector(n, 0));
}

CosetState css_encode_basis_state(const LinearScheme& s, const Vector& a) {
    const CodeSpec& sp = s.spec;
    if (a.size() != sp.msg_len()) throw Error(ErrorCode::LengthMismatch, "basis label length");
    require_isometry(s);
    auto lay = SubsystemLayout::for_spec(sp);
    Vector off(lay.total(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) off[i] = a[i];
    Vector ya = mul(a, s.A);
    for (std::size_t c = 0; c < ya.size(); ++c) off[sp.msg_len() + c] = ya[c];
    return CosetState(std::move(lay), state_rows(s, sp.msg_len(), sp.input_len()), std::move(off));
}

CosetState apply_label_unitary(const CosetState& state, const LabelUnitary& u) {
    auto coords = state.layout().coordinates(u.targets);
    if (u.matrix.rows() != coords.size() || u.matrix.cols() != coords.size())
        throw Error(ErrorCode::LayoutMismatch, "unitary size does not match its targets");
    if (rank(u.matrix) != coords.size()) throw Error(ErrorCode::NonInvertible, u.description);
    Matrix g = state.generator();
    Matrix moved = g.select_cols(coords) * u.matrix;
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j) g(i, coords[j]) = moved(i, j);
    Vector off = state.offset();
    Vector oc = mul(pick(off, coords), u.matrix);
    for (std::size_t j = 0; j < coords.size(); ++j) off[coords[j]] = oc[j];
    return CosetState(state.layout(), g, std::move(off));
}

CosetState apply_all(CosetState state, const std::vector<LabelUnitary>& steps) {
    for (auto& u : steps) state = apply_label_unitary(state, u);
    return state;
}

std::vector<std::size_t> available_subsystems(const SubsystemLayout& layout, const ErasurePattern& p) {
    std::vector<std::size_t> out;
    for (int k : p.storage) out.push_back(layout.index("Q" + std::to_string(k + 1)));
    for (int i : p.sr) out.push_back(layout.index("B" + std::to_string(i + 1)));
    return out;
}

std::vector<LabelUnitary> synthesize_decoder(const LinearScheme& s, const ErasurePattern& p) {
    check_pattern(s.spec, p);
    return synthesize(s, p, css_encode_state(s));
}

OutputRegisters output_registers(const SubsystemLayout& layout, const ErasurePattern& p) {
    OutputRegisters o;
    o.r = layout.coordinates({layout.index("R")});
    auto avail = layout.coordinates(available_subsystems(layout, p));
    if (avail.size() < o.r.size()) throw Error(ErrorCode::LayoutMismatch, "survivors are smaller than the message");
    o.qhat.assign(avail.begin(), avail.begin() + static_cast<std::ptrdiff_t>(o.r.size()));
    return o;
}

bool factorization_check(const CosetState& state, const ErasurePattern& p) {
    auto reg = output_registers(state.layout(), p);
    for (Elem e : state.offset())
        if (e) return false;
    const Matrix& g = state.generator();
    Matrix gr = g.select_cols(reg.r), gq = g.select_cols(reg.qhat);
    if (gr != gq) return false;
    if (rank(gr) != reg.r.size()) return false;
    Subspace w = Subspace::span(g);
    for (std::size_t i = 0; i < reg.r.size(); ++i) {
        Vector d(g.cols(), 0);
        d[reg.r[i]] = 1;
        d[reg.qhat[i]] = 1;
        if (!w.contains(d)) return false;
    }
    return true;
}

bool basis_state_check(const CosetState& state, const ErasurePattern& p, const Vector& a) {
    auto reg = output_registers(state.layout(), p);
    if (!state.generator().select_cols(reg.qhat).is_zero()) return false;
    return pick(state.offset(), reg.qhat) == a;
}

namespace {

std::vector<QuantumVerdict> check_patterns(const LinearScheme& s, const std::vector<ErasurePattern>& patterns,
                                           bool parallel) {
    for (auto& p : patterns) check_pattern(s.spec, p);
    CosetState state = css_encode_state(s);
    std::vector<QuantumVerdict> out(patterns.size());
    std::vector<std::exception_ptr> errors(patterns.size());
    const auto n = static_cast<std::ptrdiff_t>(patterns.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto& v = out[static_cast<std::size_t>(i)];
        v.pattern = patterns[static_cast<std::size_t>(i)];
        try {
            v.transcript = synthesize(s, v.pattern, state);
            v.synthesized = true;
            v.factorizes = factorization_check(apply_all(state, v.transcript), v.pattern);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InfeasibleScheme) errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

std::vector<QuantumVerdict> quantum_check(const LinearScheme& s, const std::vector<ErasurePattern>& patterns) {
    return check_patterns(s, patterns, true);
}

std::vector<QuantumVerdict> quantum_check_serial(const LinearScheme& s, const std::vector<ErasurePattern>& patterns) {
    return check_patterns(s, patterns, false);
}

}  // namespace eacode
