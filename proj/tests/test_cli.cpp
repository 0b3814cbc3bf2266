#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "esz/cli.hpp"
#include "esz/pointset_io.hpp"

namespace fs = std::filesystem;
using esz::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run esz_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("esz_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
            std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  [[nodiscard]] std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string golden(const std::string& name) {
  return esz::read_text_file(fs::path(ESZ_TEST_DATA_DIR) / "golden" / name);
}

nlohmann::ordered_json strip_paths(nlohmann::ordered_json j) {
  j.erase("command");
  j["input"].erase("path");
  return j;
}

}  // namespace

TEST_CASE("generate horton 5 writes 32 points and the Horton search fails") {
  TempDir t;
  const auto f = t.file("h5.txt");
  const auto g = esz_run({"generate", "horton", "5", "-o", f});
  CHECK(g.code == 0);
  CHECK(g.out.find("32 points") != std::string::npos);
  CHECK(esz::points_of(esz::read_pointset_file(f)).size() == 32);
  const auto s = esz_run({"search", f, "ngon", "7", "--max-interior", "0"});
  CHECK(s.code == 1);
  CHECK(s.out.rfind("NotFound", 0) == 0);
}

TEST_CASE("generate random is byte-identical across runs") {
  TempDir t;
  CHECK(esz_run({"generate", "random", "10", "--seed", "1", "-o", t.file("a.txt")}).code == 0);
  CHECK(esz_run({"generate", "random", "10", "--seed", "1", "-o", t.file("b.txt")}).code == 0);
  CHECK(esz::read_text_file(t.file("a.txt")) == esz::read_text_file(t.file("b.txt")));
  CHECK(esz::read_text_file(t.file("a.txt")) == golden("random10_seed1.txt"));
  // Stdout form carries the same bytes.
  CHECK(esz_run({"generate", "random", "10", "--seed", "1"}).out == golden("random10_seed1.txt"));
}

TEST_CASE("generate then check") {
  TempDir t;
  esz_run({"generate", "horton", "4", "-o", t.file("h4.txt")});
  const auto c = esz_run({"check", t.file("h4.txt")});
  CHECK(c.code == 0);
  CHECK(c.out.find("16 points, general position ok") != std::string::npos);
}

TEST_CASE("search report matches the golden document") {
  TempDir t;
  const auto f = t.file("r10.txt");
  esz::write_text_file(f, golden("random10_seed1.txt"));
  const auto r = esz_run({"search", f, "ngon", "5", "--max-interior", "0", "--json"});
  CHECK(r.code == 0);
  const auto got = nlohmann::ordered_json::parse(r.out);
  const auto want = nlohmann::ordered_json::parse(golden("search_random10_empty5.json"));
  CHECK(strip_paths(got).dump(2) == strip_paths(want).dump(2));
  CHECK(got["outcome"] == "Found");
}

TEST_CASE("reports are identical regardless of thread count") {
  TempDir t;
  const auto f = t.file("r.txt");
  esz_run({"generate", "random", "40", "--seed", "5", "-o", f});
  setenv("CPL_THREADS", "1", 1);
  const auto one = esz_run({"search", f, "ngon", "6", "--max-interior", "1", "--json"});
  setenv("CPL_THREADS", "4", 1);
  const auto four = esz_run({"search", f, "ngon", "6", "--max-interior", "1", "--json"});
  unsetenv("CPL_THREADS");
  CHECK(one.out == four.out);
}

TEST_CASE("a report re-runs to the same outcome") {
  TempDir t;
  const auto f = t.file("r.txt");
  esz_run({"generate", "random", "12", "--seed", "9", "-o", f});
  esz_run({"search", f, "cup", "4", "--max-interior", "0", "--report", t.file("rep.json")});
  const auto rep = nlohmann::ordered_json::parse(esz::read_text_file(t.file("rep.json")));
  auto cmd = rep["command"].get<std::vector<std::string>>();
  cmd.erase(cmd.begin());
  const auto again = esz_run(cmd);
  const auto rep2 = nlohmann::ordered_json::parse(esz::read_text_file(t.file("rep.json")));
  CHECK(again.code == (rep["outcome"] == "Found" ? 0 : 1));
  CHECK(rep.dump() == rep2.dump());
}

TEST_CASE("search variants") {
  TempDir t;
  const auto f = t.file("r.txt");
  esz::write_text_file(f, golden("random10_seed1.txt"));
  CHECK(esz_run({"search", f, "max-convex"}).code == 0);
  CHECK(esz_run({"search", f, "ngon", "4", "--mod", "2", "--nonempty"}).code <= 1);
  CHECK(esz_run({"search", f, "cap", "3"}).code == 0);
  CHECK(esz_run({"search", f, "ngon", "11"}).code == 3);  // n > |s|

  // Vertical pairs need the shear before chain searches.
  const auto v = t.file("v.txt");
  esz::write_text_file(v, "0 0\n0 5\n3 1\n6 7\n9 2\n");
  CHECK(esz_run({"search", v, "cup", "3"}).code == 3);
  CHECK(esz_run({"search", v, "cup", "3", "--shear"}).code <= 1);
}

TEST_CASE("mono-quad on a colored file") {
  TempDir t;
  const auto f = t.file("c.txt");
  esz::write_text_file(f, "0 0 1\n10 0 1\n10 10 1\n0 10 1\n5 20 0\n20 5 0\n");
  const auto r = esz_run({"search", f, "mono-quad"});
  CHECK(r.code == 0);
  CHECK(r.out.find("color 1") != std::string::npos);
  // A point of the other color inside: found only under same-color emptiness.
  esz::write_text_file(f, "0 0 1\n10 0 1\n10 10 1\n0 10 1\n4 5 0\n20 3 0\n");
  CHECK(esz_run({"search", f, "mono-quad"}).code == 1);
  CHECK(esz_run({"search", f, "mono-quad", "--same-color-empty"}).code == 0);
  // Uncolored input is a validation error.
  esz::write_text_file(f, "0 0\n10 0\n10 10\n0 10\n");
  CHECK(esz_run({"search", f, "mono-quad"}).code == 3);
}

TEST_CASE("bounds output") {
  CHECK(esz_run({"bounds", "g", "7"}).out.find("lower 33, upper 127") != std::string::npos);
  const auto m = esz_run({"bounds", "modq", "5", "2"});
  CHECK(m.code == 0);
  CHECK(m.out.find("<= 36") != std::string::npos);
  CHECK(m.out.find("R_3(n', n')") != std::string::npos);
  CHECK(m.out.find("n' = 6") != std::string::npos);
  const auto t2 = esz_run({"bounds", "table", "2", "--tsv"});
  CHECK(t2.out.find("705419\n") != std::string::npos);
  CHECK(esz_run({"bounds", "f", "4", "4"}).out == "f(4, 4) = 7\n");
  CHECK(esz_run({"bounds", "nonexist", "24"}).out.find("k <= 25739") != std::string::npos);
  CHECK(esz_run({"bounds", "survival", "25"}).out.find("705419") != std::string::npos);
  CHECK(esz_run({"bounds", "fsurvival", "5", "5"}).code == 0);
  CHECK(esz_run({"bounds", "fpair", "6", "7", "6", "6"}).code == 0);
  CHECK(esz_run({"bounds", "nonexist", "5"}).code == 3);
}

TEST_CASE("exit codes") {
  TempDir t;
  CHECK(esz_run({}).code == 2);
  CHECK(esz_run({"frobnicate"}).code == 2);
  CHECK(esz_run({"search"}).code == 2);
  CHECK(esz_run({"bounds", "table", "3"}).code == 2);
  CHECK(esz_run({"--help"}).code == 0);
  CHECK(esz_run({"check", t.file("missing.txt")}).code == 3);

  const auto bad = t.file("bad.txt");
  esz::write_text_file(bad, "# header\n0 0\n\n1 1\n2 2\n");
  const auto c = esz_run({"check", bad});
  CHECK(c.code == 3);
  CHECK(c.err.find("collinear points on lines 2, 4, 5") != std::string::npos);

  esz::write_text_file(bad, "0 0\n1 x\n");
  const auto p = esz_run({"check", bad});
  CHECK(p.code == 3);
  CHECK(p.err.find("line 2") != std::string::npos);

  CHECK(esz_run({"generate", "horton", "9"}).code == 3);
}

TEST_CASE("hunt pipeline") {
  TempDir t;
  const auto trivial = esz_run({"hunt", "3", "--forbid", "ngon4"});
  CHECK(trivial.code == 0);

  const auto w = t.file("w.txt");
  const auto h = esz_run({"hunt", "8", "--forbid", "ngon5", "-o", w, "--report", t.file("h.json")});
  REQUIRE(h.code == 0);
  const auto text = esz::read_text_file(w);
  CHECK(text.rfind("# esz ", 0) == 0);
  CHECK(text.find("# verified by exhaustive search: no convex 5-gon") != std::string::npos);
  CHECK(esz_run({"check", w}).code == 0);
  CHECK(esz_run({"search", w, "ngon", "5"}).code == 1);
  const auto rep = nlohmann::ordered_json::parse(esz::read_text_file(t.file("h.json")));
  CHECK(rep["outcome"] == "Found");
  CHECK(rep["witness"]["verified"] == true);

  // Same seed, same bytes.
  const auto w2 = t.file("w2.txt");
  esz_run({"hunt", "8", "--forbid", "ngon5", "-o", w2});
  const auto text2 = esz::read_text_file(w2);
  CHECK(text2.substr(text2.find('\n')) == text.substr(text.find('\n')));

  const auto none = esz_run({"hunt", "9", "--forbid", "ngon5", "--budget", "50"});
  CHECK(none.code == 1);
  CHECK(none.out.rfind("BudgetExhausted", 0) == 0);
  CHECK(esz_run({"hunt", "8", "--forbid", "hexagon"}).code == 3);
}

TEST_CASE("render figures") {
  TempDir t;
  // Five points, one inside the hull of the other four.
  const auto f = t.file("k5.txt");
  esz::write_text_file(f, "0 0\n10 1\n9 10\n1 9\n4 5\n");
  esz_run({"search", f, "ngon", "4", "--report", t.file("rep.json")});
  CHECK(esz_run({"render", f, "-o", t.file("a.svg"), "--witness", t.file("rep.json")}).code == 0);
  CHECK(esz_run({"render", f, "-o", t.file("b.svg"), "--witness", t.file("rep.json")}).code == 0);
  const auto svg = esz::read_text_file(t.file("a.svg"));
  CHECK(svg == esz::read_text_file(t.file("b.svg")));
  CHECK(svg.find("<polygon") != std::string::npos);

  const auto h = t.file("h4.txt");
  esz_run({"generate", "horton", "4", "-o", h});
  CHECK(esz_run({"render", h, "-o", t.file("h.svg")}).code == 0);
  CHECK(esz::read_text_file(t.file("h.svg")).find("<polygon") == std::string::npos);

  // A report for another input is refused.
  CHECK(esz_run({"render", h, "-o", t.file("x.svg"), "--witness", t.file("rep.json")}).code == 3);
}
