#include "esz/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <iomanip>
#include <memory>
#include <sstream>

namespace esz {

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) {
    os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return os.str();
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Found:
      return "Found";
    case Outcome::NotFound:
      return "NotFound";
    case Outcome::BudgetExhausted:
      return "BudgetExhausted";
  }
  return {};
}

Json report_header(const std::vector<std::string>& command) {
  Json j;
  j["tool"] = "esz";
  j["version"] = kToolVersion;
  j["command"] = command;
  return j;
}

Json describe_input_file(const std::string& path, std::string_view bytes, const PointFile& f) {
  Json j;
  j["kind"] = "file";
  j["path"] = path;
  j["sha256"] = sha256_hex(bytes);
  j["points"] = points_of(f).size();
  j["colored"] = std::holds_alternative<ColoredPointSet>(f);
  return j;
}

namespace {

Json coords(const PointSet& s, const std::vector<Index>& idx) {
  Json pts = Json::array();
  for (Index i : idx) pts.push_back({s[i].x, s[i].y});
  return pts;
}

}  // namespace

Json witness_json(const PointSet& s, const ConvexWitness& w) {
  Json j;
  j["shape"] = "polygon";
  j["vertex_indices"] = w.vertex_indices;
  j["points"] = coords(s, w.vertex_indices);
  j["interior_count"] = w.interior_count;
  return j;
}

Json witness_json(const PointSet& s, const ChainWitness& w) {
  Json j;
  j["shape"] = to_string(w.kind);
  j["vertex_indices"] = w.vertex_indices;
  j["points"] = coords(s, w.vertex_indices);
  j["interior_count"] = w.interior_count;
  return j;
}

Json stats_json(const SearchStats& st) {
  Json j;
  j["candidates"] = st.candidates;
  if (st.seed) j["seed"] = *st.seed;
  return j;
}

std::vector<Index> witness_indices(const Json& report) {
  if (!report.contains("witness") || !report["witness"].is_object()) return {};
  const auto& w = report["witness"];
  if (!w.contains("vertex_indices")) return {};
  return w["vertex_indices"].get<std::vector<Index>>();
}

}  // namespace esz
