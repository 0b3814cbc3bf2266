// Plain-text point-set files: one point per line, "x y" or "x y color",
// integers separated by single spaces; lines starting with '#' are comments
// and blank lines are ignored. Every line carries a color or none does.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "esz/point.hpp"

namespace esz {

/// Malformed point-set text; line() is 1-based (0 when not tied to a line).
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& what);
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

using PointFile = std::variant<PointSet, ColoredPointSet>;

/// Parses and rejects duplicate points. Does not test collinearity.
PointFile parse_pointset(std::string_view text);

std::string serialize_pointset(const PointSet& s);
std::string serialize_pointset(const ColoredPointSet& s);
std::string serialize_pointset(const PointFile& f);

PointFile read_pointset_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);
std::string read_text_file(const std::filesystem::path& path);

/// The uncolored view of either alternative.
const PointSet& points_of(const PointFile& f);
PointSet& points_of(PointFile& f);

}  // namespace esz
