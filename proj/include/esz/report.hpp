// Machine-readable run reports for the command-line tool.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "esz/hunt.hpp"
#include "esz/pointset_io.hpp"
#include "esz/search.hpp"

namespace esz {

inline constexpr const char* kToolVersion = "1.0.0";

using Json = nlohmann::ordered_json;

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

enum class Outcome { Found, NotFound, BudgetExhausted };
std::string to_string(Outcome o);

/// Skeleton shared by every report: tool, version, command echo.
Json report_header(const std::vector<std::string>& command);

Json describe_input_file(const std::string& path, std::string_view bytes, const PointFile& f);

Json witness_json(const PointSet& s, const ConvexWitness& w);
Json witness_json(const PointSet& s, const ChainWitness& w);

/// Candidate count and seed. Wall-clock time is left out so that reports are
/// byte-identical across runs.
Json stats_json(const SearchStats& st);

/// Vertex indices of the witness polygon or chain stored in a report, if any.
std::vector<Index> witness_indices(const Json& report);

}  // namespace esz
