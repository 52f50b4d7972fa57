#include "eacode/harness.hpp"

#include <exception>
#include <optional>
#include <random>

#include "eacode/error.hpp"

namespace eacode {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

unsigned bits_per_dit(const CodeSpec& spec) {
    auto [p, m] = prime_power_decompose(spec.q);
    if (p != 2) throw Error(ErrorCode::UnsupportedAlphabet, "byte payloads need q = 2^m, got q = " + std::to_string(spec.q));
    if (spec.msg_len() == 0) throw Error(ErrorCode::Infeasible, "scheme carries no message");
    return m;
}

Vector random_vector(std::mt19937_64& rng, std::size_t n, std::uint32_t q) {
    Vector v(n);
    for (auto& x : v) x = static_cast<Elem>(rng() % q);
    return v;
}

struct Attempt {
    std::size_t pattern;
    bool ok;
    std::string reason;
};

struct TrialOutcome {
    std::vector<Attempt> attempts;
    bool roundtrip = true;
    bool sr_checked = false, sr_ok = true;
};

class Simulator {
public:
    Simulator(const LinearScheme& s, const SimConfig& cfg)
        : s_(s), cfg_(cfg), patterns_(enumerate_patterns(s.spec)), gen_(s.generator()) {
        if (!cfg.payload.empty()) chunks_ = chunk_payload(cfg.payload, s.spec);
        for (auto& p : patterns_) {
            try {
                decoders_.emplace_back(PatternDecoder(s, p));
            } catch (const Error& e) {
                if (e.code() != ErrorCode::Infeasible) throw;
                decoders_.emplace_back(std::nullopt);
            }
        }
    }

    TrialOutcome trial(std::uint64_t t) const {
        const CodeSpec& sp = s_.spec;
        const std::uint32_t q = s_.field.q();
        std::mt19937_64 rng(trial_seed(cfg_.seed, t));
        std::vector<StorageWord> words;
        std::vector<Vector> bs;
        for (auto& y0 : chunks_) {
            Vector b = random_vector(rng, sp.b_len(), q);
            Vector z = random_vector(rng, static_cast<std::size_t>(sp.L), q);
            words.push_back(encode(s_, {y0, b, z}));
            bs.push_back(std::move(b));
        }
        std::vector<std::size_t> which;
        if (cfg_.policy == ErasurePolicy::Exhaustive) {
            for (std::size_t i = 0; i < patterns_.size(); ++i) which.push_back(i);
        } else {
            which.push_back(static_cast<std::size_t>(rng() % patterns_.size()));
        }

        TrialOutcome out;
        for (std::size_t pi : which) out.attempts.push_back(attempt(pi, words, bs, out.roundtrip));
        if (!words.empty() && sp.b_len() > 0) {
            out.sr_checked = true;
            Vector y;
            for (auto& blk : words[0]) y.insert(y.end(), blk.begin(), blk.end());
            auto x = try_solve(gen_, y);
            out.sr_ok = x && Vector(x->begin() + static_cast<long>(sp.msg_len()),
                                    x->begin() + static_cast<long>(sp.msg_len() + sp.b_len())) == bs[0];
        }
        return out;
    }

    SimReport run(bool parallel) const {
        std::vector<TrialOutcome> outcomes(cfg_.trials);
        std::vector<std::exception_ptr> errors(cfg_.trials);
        const auto n = static_cast<std::int64_t>(cfg_.trials);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::int64_t t = 0; t < n; ++t) {
            try {
                outcomes[static_cast<std::size_t>(t)] = trial(static_cast<std::uint64_t>(t));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        }
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);

        SimReport r;
        r.label = s_.label;
        r.trials = cfg_.trials;
        r.seed = cfg_.seed;
        r.policy = cfg_.policy;
        r.payload_bytes = cfg_.payload.size();
        r.chunks = chunks_.size();
        for (auto& p : patterns_) r.patterns.push_back({p, 0, 0});
        for (std::uint64_t t = 0; t < cfg_.trials; ++t) {
            const auto& o = outcomes[t];
            for (auto& a : o.attempts) {
                auto& st = r.patterns[a.pattern];
                ++st.attempts;
                ++r.attempts;
                if (a.ok) {
                    ++st.successes;
                    ++r.successes;
                } else {
                    ++r.failure_count;
                    if (r.failures.size() < cfg_.max_failure_records)
                        r.failures.push_back({t, patterns_[a.pattern], a.reason});
                }
            }
            r.payload_roundtrip = r.payload_roundtrip && o.roundtrip;
            r.sr_checks += o.sr_checked;
            r.sr_failures += o.sr_checked && !o.sr_ok;
            r.dits_stored += chunks_.size() * s_.spec.storage_len();
        }
        return r;
    }

private:
    Attempt attempt(std::size_t pi, const std::vector<StorageWord>& words, const std::vector<Vector>& bs,
                    bool& roundtrip) const {
        const auto& dec = decoders_[pi];
        if (!dec) return {pi, false, "message not decodable from this pattern"};
        std::vector<Vector> got;
        for (std::size_t c = 0; c < words.size(); ++c) {
            try {
                got.push_back(dec->decode(observe(s_, patterns_[pi], words[c], bs[c])));
            } catch (const Error& e) {
                return {pi, false, "chunk " + std::to_string(c) + ": " + e.what()};
            }
            if (got.back() != chunks_[c]) return {pi, false, "chunk " + std::to_string(c) + " decoded incorrectly"};
        }
        if (!got.empty() && unchunk_payload(got, s_.spec) != cfg_.payload) {
            roundtrip = false;
            return {pi, false, "payload differs after unchunking"};
        }
        return {pi, true, ""};
    }

    const LinearScheme& s_;
    const SimConfig& cfg_;
    std::vector<ErasurePattern> patterns_;
    std::vector<std::optional<PatternDecoder>> decoders_;
    std::vector<Vector> chunks_;
    Matrix gen_;
};

}  // namespace

std::vector<Vector> chunk_payload(const std::vector<std::uint8_t>& bytes, const CodeSpec& spec) {
    const unsigned m = bits_per_dit(spec);
    if (bytes.empty()) return {};
    const std::size_t msg = spec.msg_len(), per_chunk = m * msg;
    std::vector<bool> bits;
    for (auto byte : bytes)
        for (int i = 7; i >= 0; --i) bits.push_back((byte >> i) & 1);
    bits.push_back(true);
    while (bits.size() % per_chunk) bits.push_back(false);
    std::vector<Vector> out;
    for (std::size_t c = 0; c < bits.size(); c += per_chunk) {
        Vector v(msg, 0);
        for (std::size_t d = 0; d < msg; ++d)
            for (unsigned k = 0; k < m; ++k) v[d] = (v[d] << 1) | bits[c + d * m + k];
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::uint8_t> unchunk_payload(const std::vector<Vector>& chunks, const CodeSpec& spec) {
    const unsigned m = bits_per_dit(spec);
    if (chunks.empty()) return {};
    std::vector<bool> bits;
    for (auto& v : chunks) {
        if (v.size() != spec.msg_len()) throw Error(ErrorCode::LengthMismatch, "chunk length");
        for (Elem d : v)
            for (int k = static_cast<int>(m) - 1; k >= 0; --k) bits.push_back((d >> k) & 1);
    }
    while (!bits.empty() && !bits.back()) bits.pop_back();
    if (bits.empty()) throw Error(ErrorCode::BadFormat, "padding marker missing");
    bits.pop_back();
    if (bits.size() % 8) throw Error(ErrorCode::BadFormat, "payload is not a whole number of bytes");
    std::vector<std::uint8_t> out(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) out[i / 8] = static_cast<std::uint8_t>((out[i / 8] << 1) | bits[i]);
    return out;
}

ErasurePolicy parse_policy(const std::string& s) {
    if (s == "exhaustive") return ErasurePolicy::Exhaustive;
    if (s == "random") return ErasurePolicy::Random;
    throw Error(ErrorCode::BadFormat, "unknown erasure policy '" + s + "'");
}

std::string to_string(ErasurePolicy p) { return p == ErasurePolicy::Exhaustive ? "exhaustive" : "random"; }

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed ^ splitmix64(trial)); }

SimReport run_sim(const LinearScheme& s, const SimConfig& cfg) { return Simulator(s, cfg).run(true); }
SimReport run_sim_serial(const LinearScheme& s, const SimConfig& cfg) { return Simulator(s, cfg).run(false); }

}  // namespace eacode
