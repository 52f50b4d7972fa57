#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "eacode/capacity.hpp"
#include "eacode/codes.hpp"
#include "eacode/harness.hpp"
#include "eacode/quantum.hpp"
#include "eacode/verify.hpp"

namespace eacode {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t cols_if_empty);

Json to_json(const CodeSpec& spec);
CodeSpec spec_from_json(const Json& j);

/// {format_version, label, spec, A, B, Z}.
Json to_json(const LinearScheme& s);
/// Throws BadFormat for missing keys, an unsupported version, or entries
/// outside the field; shape errors surface as DimensionMismatch.
LinearScheme scheme_from_json(const Json& j);

Json to_json(const AuditReport& r, const std::string& label);
Json to_json(const std::vector<OracleVerdict>& v, const std::vector<ErasurePattern>& ps, bool sr_recovery);

Json to_json(const RegionParams& p, const std::vector<BoundarySample>& samples);

Json to_json(const SimReport& r);

Json to_json(const LabelUnitary& u, const SubsystemLayout& layout);
Json to_json(const std::vector<QuantumVerdict>& v, const SubsystemLayout& layout, const std::string& label,
             bool with_transcripts);

/// Throws BadFormat on unreadable or malformed files.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::vector<std::uint8_t> read_binary_file(const std::string& path);

}  // namespace eacode
