#include "esz/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "esz/bounds.hpp"
#include "esz/claims.hpp"
#include "esz/generators.hpp"
#include "esz/geometry.hpp"
#include "esz/hunt.hpp"
#include "esz/pointset_io.hpp"
#include "esz/report.hpp"
#include "esz/search.hpp"
#include "esz/svg.hpp"

namespace esz {

namespace {

// 1-based line numbers of the data lines of a point-set file, in order.
std::vector<std::size_t> data_line_numbers(std::string_view text) {
  std::vector<std::size_t> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '#') lines.push_back(no);
  }
  return lines;
}

struct LoadedFile {
  std::string path;
  std::string bytes;
  PointFile file;
};

// Reads, parses and validates; general-position failures name file lines.
LoadedFile load(const std::string& path) {
  LoadedFile lf{path, read_text_file(path), PointSet{}};
  lf.file = parse_pointset(lf.bytes);
  const auto r = validate_general_position(points_of(lf.file));
  if (!r.ok()) {
    const auto lines = data_line_numbers(lf.bytes);
    std::ostringstream os;
    os << path << ": "
       << (r.kind == ValidationResult::Kind::Duplicate ? "duplicate points" : "collinear points")
       << " on lines";
    for (std::size_t i = 0; i < r.offending.size(); ++i) {
      os << (i ? ", " : " ") << lines.at(r.offending[i]);
    }
    throw ValidationError(os.str());
  }
  return lf;
}

std::string join_indices(const std::vector<Index>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

// ---- generate ------------------------------------------------------------

struct GenerateArgs {
  unsigned level = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::int64_t range = 1000;
  std::string out_path;
};

int emit_generated(const PointSet& s, const std::string& label, const GenerateArgs& a,
                   std::ostream& out, std::ostream& err) {
  const auto text = serialize_pointset(s);
  std::ostringstream summary;
  summary << label << ": " << s.size() << " points";
  if (s.size() >= 3) summary << ", hull size " << convex_hull(s).vertex_indices.size();
  if (a.out_path.empty()) {
    out << text;
    err << summary.str() << '\n';
  } else {
    write_text_file(a.out_path, text);
    out << summary.str() << " -> " << a.out_path << '\n';
  }
  return kExitFound;
}

// ---- check ---------------------------------------------------------------

int cmd_check(const std::string& path, std::ostream& out) {
  const auto lf = load(path);
  const auto& s = points_of(lf.file);
  out << path << ": " << s.size() << " points";
  if (const auto* cs = std::get_if<ColoredPointSet>(&lf.file)) {
    std::vector<Color> distinct(cs->colors().begin(), cs->colors().end());
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    out << ", " << distinct.size() << " colors";
  }
  out << ", general position ok";
  if (s.size() >= 3) out << ", hull size " << convex_hull(s).vertex_indices.size();
  out << ", distinct x " << (has_distinct_x(s) ? "yes" : "no") << '\n';
  return kExitFound;
}

// ---- search --------------------------------------------------------------

struct SearchArgs {
  std::string path;
  bool shear = false;
  bool json = false;
  std::string report_path;
  std::size_t size = 0;
  std::optional<std::size_t> max_interior;
  std::optional<std::size_t> mod;
  bool nonempty = false;
  bool same_color_empty = false;
};

struct SearchOutcome {
  Outcome outcome = Outcome::NotFound;
  Json query;
  Json witness;  // null when absent
  SearchStats stats;
  std::string summary;
};

Json query_json(const std::string& type, const std::string& description) {
  Json q;
  q["type"] = type;
  q["description"] = description;
  return q;
}

SearchOutcome search_ngon(const PointSet& orig, const PointSet& s, const SearchArgs& a) {
  auto c = InteriorConstraint::unconstrained();
  if (a.mod) {
    c = InteriorConstraint::zero_mod(*a.mod, !a.nonempty);
  } else if (a.max_interior) {
    c = InteriorConstraint::at_most(*a.max_interior);
  }
  SearchOutcome o;
  o.query = query_json("ngon", "convex " + std::to_string(a.size) + "-gon, " + c.describe());
  o.query["n"] = a.size;
  const auto r = find_ngon(s, a.size, c);
  o.stats = r.stats;
  if (r.found()) {
    o.outcome = Outcome::Found;
    o.witness = witness_json(orig, *r.witness);
    o.summary = "vertices " + join_indices(r.witness->vertex_indices) + ", interior " +
                std::to_string(r.witness->interior_count);
  }
  return o;
}

SearchOutcome search_chain(const PointSet& orig, const PointSet& s, ChainKind kind,
                           const SearchArgs& a) {
  const auto k = a.max_interior.value_or(kMaxSearchPoints);
  SearchOutcome o;
  o.query = query_json(to_string(kind), std::to_string(a.size) + "-" + to_string(kind) + ", " +
                                            InteriorConstraint::at_most(k).describe());
  o.query["length"] = a.size;
  const auto r = find_chain(s, kind, a.size, k);
  o.stats = r.stats;
  if (r.found()) {
    o.outcome = Outcome::Found;
    o.witness = witness_json(orig, *r.witness);
    o.summary = "vertices " + join_indices(r.witness->vertex_indices) + ", interior " +
                std::to_string(r.witness->interior_count);
  }
  return o;
}

SearchOutcome search_max_convex(const PointSet& orig, const PointSet& s) {
  SearchOutcome o;
  o.query = query_json("max-convex", "largest subset in convex position");
  const auto r = max_convex_subset(s);
  o.stats = r.stats;
  o.outcome = Outcome::Found;
  o.witness = witness_json(orig, r.witness);
  o.witness["size"] = r.size;
  o.summary = "size " + std::to_string(r.size) + ", vertices " +
              join_indices(r.witness.vertex_indices);
  return o;
}

SearchOutcome search_mono_quad(const PointFile& f, const PointSet& orig, const PointSet& s,
                               const SearchArgs& a) {
  const auto* cs = std::get_if<ColoredPointSet>(&f);
  if (cs == nullptr) throw ValidationError("mono-quad needs a colored point set");
  const auto mode = a.same_color_empty ? EmptinessMode::SameColor : EmptinessMode::AllPoints;
  SearchOutcome o;
  o.query = query_json("mono-quad", ForbiddenQuery::mono_quad(mode).describe());
  o.query["emptiness"] = a.same_color_empty ? "same-color" : "all-points";
  const auto r = find_empty_mono_quad(ColoredPointSet(s, cs->colors()), mode);
  o.stats = r.stats;
  if (r.found()) {
    o.outcome = Outcome::Found;
    o.witness = witness_json(orig, r.witness->witness);
    o.witness["color"] = r.witness->color;
    o.summary = "vertices " + join_indices(r.witness->witness.vertex_indices) + ", color " +
                std::to_string(r.witness->color);
  }
  return o;
}

int cmd_search(const std::string& query, const SearchArgs& a,
               const std::vector<std::string>& command, std::ostream& out, std::ostream& err) {
  const auto lf = load(a.path);
  const auto& orig = points_of(lf.file);
  const PointSet s = a.shear ? shear_to_distinct_x(orig) : orig;

  SearchOutcome o;
  if (query == "ngon") {
    o = search_ngon(orig, s, a);
  } else if (query == "cup") {
    o = search_chain(orig, s, ChainKind::Cup, a);
  } else if (query == "cap") {
    o = search_chain(orig, s, ChainKind::Cap, a);
  } else if (query == "max-convex") {
    o = search_max_convex(orig, s);
  } else {
    o = search_mono_quad(lf.file, orig, s, a);
  }

  Json report = report_header(command);
  report["input"] = describe_input_file(a.path, lf.bytes, lf.file);
  if (a.shear) report["input"]["transform"] = "shear";
  report["query"] = o.query;
  report["outcome"] = to_string(o.outcome);
  report["witness"] = o.witness;
  report["stats"] = stats_json(o.stats);
  if (!a.report_path.empty()) write_text_file(a.report_path, report.dump(2) + "\n");

  if (a.json) {
    out << report.dump(2) << '\n';
  } else {
    out << to_string(o.outcome) << ": " << o.query["description"].get<std::string>();
    if (!o.summary.empty()) out << "; " << o.summary;
    out << '\n';
  }
  err << o.stats.candidates << " candidates in " << o.stats.elapsed_ms << " ms\n";
  return o.outcome == Outcome::Found ? kExitFound : kExitNotFound;
}

// ---- bounds --------------------------------------------------------------

int cmd_bounds_g(unsigned n, std::ostream& out) {
  const auto row = g_bounds(n);
  out << "g(" << n << "): lower " << to_string(row.lower) << ", upper "
      << to_string(row.upper_tv ? *row.upper_tv : row.upper_es) << '\n';
  out << "  lower: 2^(n-2) + 1\n";
  out << "  binomial upper: C(2n-4, n-2) + 1 = " << to_string(row.upper_es) << '\n';
  if (row.upper_tv) out << "  improved upper: C(2n-5, n-3) + 1 = " << to_string(*row.upper_tv) << '\n';
  return kExitFound;
}

int cmd_bounds_modq(unsigned n, unsigned q, std::ostream& out) {
  const auto nprime = bdv_nprime(n, q);
  const auto v = modq_upper(n, q);
  out << "h(" << n << " mod " << q << ")";
  if (v) {
    out << " <= " << to_string(*v) << "   [via g(q(n-4)+4) = g("
        << q * (n - 4) + 4 << ")]\n";
  } else {
    out << ": no g-based bound (needs n >= 2q-1)\n";
  }
  out << "  Ramsey bound: h(" << n << " mod " << q << ") <= g(R_3(";
  for (unsigned i = 0; i < q; ++i) out << (i ? ", " : "") << "n'";
  out << ")) with n' = " << nprime << " (least n' >= n with n' = 2 mod " << q
      << "); not evaluated\n";
  return kExitFound;
}

int cmd_bounds_fpair(unsigned l, unsigned m, unsigned l0, unsigned m0, std::ostream& out) {
  const auto p = f_nonexist_pair(l, m, l0, m0);
  if (!p) {
    out << "no statement: c(" << l0 << ") = " << to_string(c_of_r(l0)) << ", c(" << m0
        << ") = " << to_string(c_of_r(m0)) << " (both must be positive)\n";
    return kExitFound;
  }
  out << "f(" << l << ", " << m << ", " << to_string(p->first) << ", " << to_string(p->second)
      << ") does not exist   [base l0 = " << l0 << ", m0 = " << m0 << "]\n";
  return kExitFound;
}

int cmd_bounds_fsurvival(unsigned l, unsigned m, std::ostream& out) {
  const auto t = f_survival_thresholds(l, m);
  const auto base = to_string(f_threshold(l, m));
  out << "f(" << l << ", " << m << ") = " << base << '\n';
  out << "  f(l, m, l1, a) > f(l, m) for l1 = "
      << (t.l1 ? to_string(*t.l1) : std::string("--- (negative)")) << '\n';
  out << "  f(l, m, a, m1) > f(l, m) for m1 = "
      << (t.m1 ? to_string(*t.m1) : std::string("--- (negative)")) << '\n';
  return kExitFound;
}

// ---- hunt ----------------------------------------------------------------

struct HuntArgs {
  std::size_t n = 0;
  std::vector<std::string> forbid;
  HuntOptions options;
  std::string out_path;
  std::string report_path;
};

int cmd_hunt(const HuntArgs& a, const std::vector<std::string>& command, std::ostream& out,
             std::ostream& err) {
  std::vector<ForbiddenQuery> queries;
  for (const auto& f : a.forbid) queries.push_back(ForbiddenQuery::parse(f));
  const auto r = randomized_witness_search(a.n, queries, a.options);

  Json report = report_header(command);
  Json input;
  input["kind"] = "generator";
  input["engine"] = kRandomEngineName;
  input["points"] = a.n;
  input["seed"] = a.options.seed;
  input["range"] = a.options.range;
  input["budget"] = a.options.budget;
  report["input"] = input;
  Json q = Json::array();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    q.push_back({{"forbid", a.forbid[i]}, {"description", queries[i].describe()}});
  }
  report["query"] = q;
  report["outcome"] = to_string(r.found() ? Outcome::Found : Outcome::BudgetExhausted);

  std::string file_text;
  if (r.found()) {
    std::ostringstream stamp;
    stamp << "# esz " << kToolVersion << ":";
    for (std::size_t i = 1; i < command.size(); ++i) stamp << ' ' << command[i];
    stamp << '\n';
    for (const auto& fq : queries) {
      stamp << "# verified by exhaustive search: no " << fq.describe() << '\n';
    }
    file_text = stamp.str() + serialize_pointset(*r.witness);
    Json w;
    w["shape"] = "point-set";
    w["file"] = serialize_pointset(*r.witness);
    w["sha256"] = sha256_hex(file_text);
    w["verified"] = true;
    report["witness"] = w;
  } else {
    report["witness"] = nullptr;
  }
  report["stats"] = {{"iterations", r.iterations},
                     {"best_violations", r.best_violations},
                     {"seed", a.options.seed}};
  if (!a.report_path.empty()) write_text_file(a.report_path, report.dump(2) + "\n");

  if (!r.found()) {
    out << "BudgetExhausted after " << r.iterations << " proposals; best violation count "
        << r.best_violations << '\n';
    return kExitNotFound;
  }
  std::ostringstream summary;
  summary << "Found: " << a.n << " points avoiding";
  for (std::size_t i = 0; i < queries.size(); ++i) {
    summary << (i ? ";" : "") << ' ' << queries[i].describe();
  }
  summary << " after " << r.iterations << " proposals (verified)";
  if (a.out_path.empty()) {
    out << file_text;
    err << summary.str() << '\n';
  } else {
    write_text_file(a.out_path, file_text);
    out << summary.str() << " -> " << a.out_path << '\n';
  }
  return kExitFound;
}

// ---- render --------------------------------------------------------------

int cmd_render(const std::string& path, const std::string& out_path,
               const std::string& witness_path, std::ostream& out) {
  const auto lf = load(path);
  std::vector<Index> highlight;
  if (!witness_path.empty()) {
    Json report;
    try {
      report = Json::parse(read_text_file(witness_path));
    } catch (const Json::parse_error& e) {
      throw ValidationError(witness_path + ": not a JSON report (" + e.what() + ")");
    }
    if (report.contains("input") && report["input"].contains("sha256") &&
        report["input"]["sha256"] != sha256_hex(lf.bytes)) {
      throw ValidationError(witness_path + ": report was produced for a different input");
    }
    highlight = witness_indices(report);
    for (Index i : highlight) {
      if (i >= points_of(lf.file).size()) {
        throw ValidationError(witness_path + ": witness index " + std::to_string(i) +
                              " out of range");
      }
    }
  }
  write_text_file(out_path, render_svg(lf.file, highlight));
  out << "wrote " << out_path << " (" << points_of(lf.file).size() << " points";
  if (!highlight.empty()) out << ", " << highlight.size() << "-vertex witness";
  out << ")\n";
  return kExitFound;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Erdős–Szekeres toolkit: point sets, exact searches and bounds", "esz"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("esz ") + kToolVersion);

  std::vector<std::string> command{"esz"};
  command.insert(command.end(), args.begin(), args.end());

  // generate
  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a point-set file");
  generate->require_subcommand(1);
  generate->add_option("-o,--output", gen.out_path, "output file (default: stdout)");
  auto* gen_horton = generate->add_subcommand("horton", "Horton set with 2^K points");
  gen_horton->add_option("K", gen.level, "level")->required();
  gen_horton->fallthrough();
  auto* gen_random = generate->add_subcommand("random", "N random points in general position");
  gen_random->add_option("N", gen.n, "number of points")->required();
  gen_random->add_option("--seed", gen.seed, "random seed")->required();
  gen_random->add_option("--range", gen.range, "coordinates drawn from [0, R]")->capture_default_str();
  gen_random->fallthrough();

  // check
  std::string check_path;
  auto* check = app.add_subcommand("check", "parse and validate a point-set file");
  check->add_option("file", check_path)->required();

  // search
  SearchArgs sa;
  auto* search = app.add_subcommand("search", "exact search on a point-set file");
  search->require_subcommand(1);
  search->add_option("file", sa.path)->required();
  search->add_flag("--shear", sa.shear, "shear to distinct x before searching");
  search->add_flag("--json", sa.json, "print the machine-readable report");
  search->add_option("--report", sa.report_path, "write the report to FILE");
  auto* s_ngon = search->add_subcommand("ngon", "convex N-gon");
  s_ngon->add_option("N", sa.size)->required()->check(CLI::Range(3, 255));
  auto* ngon_k = s_ngon->add_option("--max-interior", sa.max_interior, "at most k interior points");
  auto* ngon_mod = s_ngon->add_option("--mod", sa.mod, "interior count divisible by q");
  auto* ngon_ne = s_ngon->add_flag("--nonempty", sa.nonempty, "with --mod: exclude zero");
  ngon_k->excludes(ngon_mod);
  ngon_ne->needs(ngon_mod);
  auto* s_cup = search->add_subcommand("cup", "L-cup");
  s_cup->add_option("L", sa.size)->required();
  s_cup->add_option("--max-interior", sa.max_interior);
  auto* s_cap = search->add_subcommand("cap", "M-cap");
  s_cap->add_option("M", sa.size)->required();
  s_cap->add_option("--max-interior", sa.max_interior);
  auto* s_max = search->add_subcommand("max-convex", "largest subset in convex position");
  auto* s_mono = search->add_subcommand("mono-quad", "empty monochromatic convex quadrilateral");
  s_mono->add_flag("--same-color-empty", sa.same_color_empty,
                   "only points of the quad's color must stay outside");
  for (auto* sub : {s_ngon, s_cup, s_cap, s_max, s_mono}) sub->fallthrough();

  // bounds
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds and tables");
  bounds->require_subcommand(1);
  unsigned b1 = 0, b2 = 0, b3 = 0, b4 = 0;
  std::string table_id;
  bool tsv = false;
  auto* b_g = bounds->add_subcommand("g", "bounds on g(N)");
  b_g->add_option("N", b1)->required();
  auto* b_f = bounds->add_subcommand("f", "f(L, M): least N forcing an L-cup or M-cap");
  b_f->add_option("L", b1)->required();
  b_f->add_option("M", b2)->required();
  auto* b_table = bounds->add_subcommand("table", "render table 1, 2 or 4");
  b_table->add_option("ID", table_id)->required()->check(CLI::IsMember({"1", "2", "4"}));
  b_table->add_flag("--tsv", tsv, "tab-separated output");
  auto* b_nonexist = bounds->add_subcommand("nonexist", "largest k known with h(N, k) nonexistent");
  b_nonexist->add_option("N", b1)->required();
  auto* b_survival = bounds->add_subcommand("survival", "k with h(N, k) > 2^(N-2) + 1");
  b_survival->add_option("N", b1)->required();
  auto* b_modq = bounds->add_subcommand("modq", "upper bound on h(N mod Q)");
  b_modq->add_option("N", b1)->required();
  b_modq->add_option("Q", b2)->required();
  auto* b_fpair = bounds->add_subcommand("fpair", "interior budgets with f(L, M, l1, m1) nonexistent");
  b_fpair->add_option("L", b1)->required();
  b_fpair->add_option("M", b2)->required();
  b_fpair->add_option("L0", b3)->required();
  b_fpair->add_option("M0", b4)->required();
  auto* b_fsurv = bounds->add_subcommand("fsurvival", "interior budgets keeping f above f(L, M)");
  b_fsurv->add_option("L", b1)->required();
  b_fsurv->add_option("M", b2)->required();

  // hunt
  HuntArgs ha;
  auto* hunt = app.add_subcommand("hunt", "search for N points avoiding forbidden structures");
  hunt->add_option("N", ha.n)->required();
  hunt->add_option("--forbid", ha.forbid,
                   "ngonN[:kK|:modQ|:mod-nonemptyQ], empty-ngonN, cupL[:kK], capL[:kK], "
                   "mono-quad[:same-color]")
      ->required();
  hunt->add_option("--budget", ha.options.budget)->capture_default_str();
  hunt->add_option("--seed", ha.options.seed)->capture_default_str();
  hunt->add_option("--range", ha.options.range)->capture_default_str();
  hunt->add_option("--colors", ha.options.colors)->capture_default_str();
  hunt->add_option("-o,--output", ha.out_path, "witness file (default: stdout)");
  hunt->add_option("--report", ha.report_path, "write the report to FILE");

  // render
  std::string render_path, render_out, render_witness;
  auto* render = app.add_subcommand("render", "draw a point set as SVG");
  render->add_option("file", render_path)->required();
  render->add_option("-o,--output", render_out)->required();
  render->add_option("--witness", render_witness, "report whose witness is highlighted");

  // verify-claims
  std::vector<int> only;
  auto* verify = app.add_subcommand("verify-claims", "run the acceptance checks");
  verify->add_option("--only", only, "claim ids to run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*generate) {
      if (*gen_horton) {
        return emit_generated(horton(HortonLevel(gen.level)),
                              "horton level " + std::to_string(gen.level), gen, out, err);
      }
      return emit_generated(random_general_position(gen.n, gen.seed, gen.range),
                            "random seed " + std::to_string(gen.seed), gen, out, err);
    }
    if (*check) return cmd_check(check_path, out);
    if (*search) {
      const std::string q = search->get_subcommands().front()->get_name();
      return cmd_search(q, sa, command, out, err);
    }
    if (*bounds) {
      if (*b_g) return cmd_bounds_g(b1, out);
      if (*b_f) {
        out << "f(" << b1 << ", " << b2 << ") = " << to_string(f_threshold(b1, b2)) << '\n';
        return kExitFound;
      }
      if (*b_table) {
        const auto id = table_id == "1"   ? TableId::Table1
                        : table_id == "2" ? TableId::Table2
                                          : TableId::Table4;
        out << render_table(id, tsv ? TableFormat::Tsv : TableFormat::Text);
        return kExitFound;
      }
      if (*b_nonexist) {
        out << "h(" << b1 << ", k) does not exist for k <= " << to_string(best_known_nonexist_k(b1))
            << "   [Sendov " << to_string(sendov_k(b1)) << ", binomial "
            << to_string(koshelev_nonexist_k(b1)) << "]\n";
        return kExitFound;
      }
      if (*b_survival) {
        out << "h(" << b1 << ", " << to_string(survival_k(b1)) << ") > 2^(" << b1 << "-2) + 1\n";
        return kExitFound;
      }
      if (*b_modq) return cmd_bounds_modq(b1, b2, out);
      if (*b_fpair) return cmd_bounds_fpair(b1, b2, b3, b4, out);
      return cmd_bounds_fsurvival(b1, b2, out);
    }
    if (*hunt) return cmd_hunt(ha, command, out, err);
    if (*render) return cmd_render(render_path, render_out, render_witness, out);
    if (*verify) return claims::run_all(out, only) ? kExitFound : kExitNotFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace esz
