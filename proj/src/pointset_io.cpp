#include "esz/pointset_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace esz {

ParseError::ParseError(std::size_t line, const std::string& what)
    : ValidationError(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view field) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size()) return std::nullopt;
  return v;
}

}  // namespace

PointFile parse_pointset(std::string_view text) {
  std::vector<Point> pts;
  std::vector<Color> colors;
  std::optional<bool> colored;
  std::map<Point, std::size_t> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto fields = split_fields(line);
    if (fields.empty() || fields.front().front() == '#') continue;
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError(line_no, "expected \"x y\" or \"x y color\"");
    }
    const bool has_color = fields.size() == 3;
    if (colored && *colored != has_color) {
      throw ParseError(line_no, "color column present on some lines but not all");
    }
    colored = has_color;

    const auto x = to_int(fields[0]);
    const auto y = to_int(fields[1]);
    if (!x || !y) throw ParseError(line_no, "coordinates must be integers");
    Point p;
    try {
      p = Point(*x, *y);
    } catch (const CoordinateOverflow&) {
      throw ParseError(line_no, "coordinate magnitude exceeds 2^26");
    }
    if (auto [it, fresh] = seen.emplace(p, line_no); !fresh) {
      throw ParseError(line_no, "duplicate point (first seen on line " +
                                    std::to_string(it->second) + ")");
    }
    if (has_color) {
      const auto c = to_int(fields[2]);
      if (!c || *c < 0 || *c > 1'000'000) {
        throw ParseError(line_no, "color must be a small nonnegative integer");
      }
      colors.push_back(static_cast<Color>(*c));
    }
    pts.push_back(p);
  }

  PointSet s(std::move(pts));
  if (colored.value_or(false)) return ColoredPointSet(std::move(s), std::move(colors));
  return s;
}

std::string serialize_pointset(const PointSet& s) {
  std::ostringstream os;
  for (const auto& p : s) os << p.x << ' ' << p.y << '\n';
  return os.str();
}

std::string serialize_pointset(const ColoredPointSet& s) {
  std::ostringstream os;
  for (Index i = 0; i < s.size(); ++i) {
    os << s.base()[i].x << ' ' << s.base()[i].y << ' ' << s.color(i) << '\n';
  }
  return os.str();
}

std::string serialize_pointset(const PointFile& f) {
  return std::visit([](const auto& s) { return serialize_pointset(s); }, f);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

PointFile read_pointset_file(const std::filesystem::path& path) {
  return parse_pointset(read_text_file(path));
}

const PointSet& points_of(const PointFile& f) {
  if (const auto* s = std::get_if<PointSet>(&f)) return *s;
  return std::get<ColoredPointSet>(f).base();
}

PointSet& points_of(PointFile& f) {
  if (auto* s = std::get_if<PointSet>(&f)) return *s;
  return std::get<ColoredPointSet>(f).base();
}

}  // namespace esz
