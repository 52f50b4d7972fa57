#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eacode/codes.hpp"
#include "eacode/verify.hpp"

namespace eacode {

/// Packs bytes MSB-first into msg_len-dit messages, m bits per dit for
/// q = 2^m. A single 1 bit is appended and the tail zero-filled to a whole
/// message, so unchunking is exact. Empty payloads give no chunks.
/// Throws UnsupportedAlphabet unless q is a power of two, Infeasible when
/// the scheme carries no message.
std::vector<Vector> chunk_payload(const std::vector<std::uint8_t>& bytes, const CodeSpec& spec);
/// Inverse of chunk_payload. Throws BadFormat for a missing marker or a
/// bit count that is not a whole number of bytes.
std::vector<std::uint8_t> unchunk_payload(const std::vector<Vector>& chunks, const CodeSpec& spec);

enum class ErasurePolicy { Exhaustive, Random };

ErasurePolicy parse_policy(const std::string& s);
std::string to_string(ErasurePolicy p);

struct SimConfig {
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    ErasurePolicy policy = ErasurePolicy::Exhaustive;
    std::vector<std::uint8_t> payload;
    /// At most this many failure records are kept (counts stay exact).
    std::size_t max_failure_records = 32;
};

struct PatternStats {
    ErasurePattern pattern;
    std::uint64_t attempts = 0, successes = 0;
    friend bool operator==(const PatternStats&, const PatternStats&) = default;
};

struct FailureRecord {
    std::uint64_t trial = 0;
    ErasurePattern pattern;
    std::string reason;
    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct SimReport {
    std::string label;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    ErasurePolicy policy = ErasurePolicy::Exhaustive;
    std::uint64_t payload_bytes = 0;
    std::uint64_t chunks = 0;
    std::vector<PatternStats> patterns;
    std::uint64_t attempts = 0, successes = 0;
    /// Every successful decode reproduced the payload byte for byte.
    bool payload_roundtrip = true;
    /// Shared randomness recovered from all storage nodes, once per trial.
    std::uint64_t sr_checks = 0, sr_failures = 0;
    std::vector<FailureRecord> failures;
    std::uint64_t failure_count = 0;
    /// Dits written to storage across all trials.
    std::uint64_t dits_stored = 0;

    bool pass() const { return successes == attempts && sr_failures == 0 && payload_roundtrip; }
    friend bool operator==(const SimReport&, const SimReport&) = default;
};

/// Per-trial generator seeded with splitmix64(seed ^ splitmix64(trial)), so
/// results do not depend on the thread schedule.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Trials run in parallel; aggregation follows the trial index.
SimReport run_sim(const LinearScheme& s, const SimConfig& cfg);
SimReport run_sim_serial(const LinearScheme& s, const SimConfig& cfg);

}  // namespace eacode
