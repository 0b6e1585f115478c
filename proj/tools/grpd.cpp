#include <chrono>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"

#include "grpd/catalog.hpp"
#include "grpd/io.hpp"
#include "grpd/lattice.hpp"
#include "grpd/report.hpp"

namespace fs = std::filesystem;
using namespace grpd;

namespace {

struct Options {
  std::string catalog_dir;
  int max_base = 8;
  int jobs = 0;
  bool verify = false;
  bool json = false;
  bool timing = false;
  std::string out;
  std::string report_path;
};

using Clock = std::chrono::steady_clock;

// Reports carry wall_time_ms = 0 unless --timing is given, so identical
// inputs produce byte-identical reports no matter how long the run took.
long elapsed_ms(Clock::time_point start, const Options &opt) {
  if (!opt.timing)
    return 0;
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::vector<GroupPtr> load_catalog(const Options &opt) {
  if (opt.catalog_dir.empty())
    return bundled_catalog();
  std::vector<std::string> paths;
  for (const auto &entry : fs::directory_iterator(opt.catalog_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".grp")
      paths.push_back(entry.path().string());
  if (paths.empty())
    throw Error(ErrorKind::BadInput,
                "no .grp files in " + opt.catalog_dir);
  std::sort(paths.begin(), paths.end());
  std::vector<GroupPtr> out;
  out.reserve(paths.size());
  for (const auto &p : paths)
    out.push_back(group_from_text(read_file(p)));
  std::sort(out.begin(), out.end(),
            [](const GroupPtr &a, const GroupPtr &b) {
              if (a->order() != b->order())
                return a->order() < b->order();
              return a->name() < b->name();
            });
  return out;
}

void emit(const Json &report, const Options &opt) {
  std::string text = report_to_string(report);
  if (!opt.report_path.empty())
    write_file(opt.report_path, text);
  if (opt.json)
    std::cout << text;
}

std::string subgroup_line(const Subgroup &s) {
  std::string out;
  for (size_t i = 0; i < s.elements().size(); ++i) {
    if (i)
      out += ' ';
    out += std::to_string(s.elements()[i]);
  }
  return out;
}

Subgroup parse_generators(const GroupPtr &g, const std::string &spec) {
  std::vector<int> gens;
  std::string token;
  for (char c : spec + ",") {
    if (c == ',' || c == ' ') {
      if (!token.empty()) {
        int v = 0;
        try {
          v = std::stoi(token);
        } catch (const std::exception &) {
          throw Error(ErrorKind::BadInput,
                      "bad generator '" + token + "'");
        }
        if (v < 0 || v >= g->order())
          throw Error(ErrorKind::BadInput,
                      "generator " + token + " out of range");
        gens.push_back(v);
        token.clear();
      }
    } else {
      token += c;
    }
  }
  return Subgroup::generated(g, gens);
}

// Failures of a verify report as the envelope's failure array.
Json verify_failures(const VerifyReport &rep) {
  Json arr = Json::array();
  for (const auto &f : rep.failures)
    arr.push_back(to_json(f));
  return arr;
}

int cmd_validate(const std::string &path, const Options &opt) {
  auto start = Clock::now();
  std::string text = read_file(path);
  Json result;
  switch (detect_kind(text)) {
  case FileKind::Group: {
    GroupPtr g = group_from_text(text);
    result["kind"] = "group";
    result["order"] = g->order();
    result["name"] = g->name();
    result["abelian"] = g->is_abelian();
    std::cout << "group of order " << g->order();
    if (!g->name().empty())
      std::cout << " (" << g->name() << ")";
    std::cout << ": valid\n";
    break;
  }
  case FileKind::RGraph: {
    ReflexiveGraph g = rgraph_from_text(text);
    result["kind"] = "reflexive-graph";
    result["order"] = g.carrier()->order();
    result["objects"] = g.objects().size();
    result["groupoid"] = is_groupoid(g);
    std::cout << "reflexive graph on " << g.carrier()->order()
              << " arrows, " << g.objects().size() << " objects, "
              << (is_groupoid(g) ? "groupoid" : "not a groupoid") << "\n";
    break;
  }
  case FileKind::Xmod: {
    CrossedModule m = xmod_from_text(text);
    result["kind"] = "crossed-module";
    result["t_order"] = m.t_group()->order();
    result["g_order"] = m.g_group()->order();
    std::cout << "crossed module " << m.t_group()->order() << " -> "
              << m.g_group()->order() << ": valid\n";
    break;
  }
  }
  result["valid"] = true;
  emit(report_envelope("validate", {path}, std::move(result), 1,
                       Json::array(), elapsed_ms(start, opt)),
       opt);
  return 0;
}

int cmd_generic(const std::string &path, const Options &opt) {
  auto start = Clock::now();
  GroupPtr x = group_from_text(read_file(path));
  SplitExtension ext = generic_split_extension(x);
  std::cout << "kernel order " << x->order() << ", base order "
            << ext.base()->order() << ", total order "
            << ext.total()->order() << "\n";
  if (!opt.out.empty()) {
    write_file(opt.out + ".total.grp", group_to_text(ext.total()));
    write_file(opt.out + ".base.grp", group_to_text(ext.base()));
  }
  Json result;
  result["kernel"] = x->name();
  result["kernel_order"] = x->order();
  result["base_order"] = ext.base()->order();
  result["total_order"] = ext.total()->order();
  result["faithful"] = is_faithful_criterion(ext);
  long cases = 1;
  Json failures = Json::array();
  bool ok = true;
  if (opt.verify) {
    auto rep = verify_generic(ext, load_catalog(opt), opt.max_base, opt.jobs);
    cases = rep.cases_checked;
    failures = verify_failures(rep);
    ok = rep.pass();
    result["verified"] = ok;
    std::cout << "verified against " << cases << " extensions: "
              << (ok ? "unique morphism everywhere" : "FAILED") << "\n";
  }
  emit(report_envelope("generic", {path}, std::move(result), cases,
                       std::move(failures), elapsed_ms(start, opt)),
       opt);
  return ok ? 0 : 2;
}

int cmd_rg_classifier(const std::string &path, const Options &opt) {
  auto start = Clock::now();
  ReflexiveGraph x = rgraph_from_text(read_file(path));
  RGClassifier cls = rg_classifier(x);
  std::cout << "kernel carrier " << x.carrier()->order()
            << ", classifier base " << cls.base.carrier()->order()
            << ", total " << cls.ext.total_graph().carrier()->order() << "\n";
  if (!opt.out.empty())
    write_file(opt.out, classifier_to_text(cls.base, cls.action.action()));
  Json result;
  result["kernel_order"] = x.carrier()->order();
  result["base_order"] = cls.base.carrier()->order();
  result["total_order"] = cls.ext.total_graph().carrier()->order();
  long cases = 1;
  Json failures = Json::array();
  bool ok = true;
  if (opt.verify) {
    auto rep =
        rg_verify_generic(cls.ext, load_catalog(opt), opt.max_base, opt.jobs);
    cases = rep.cases_checked;
    failures = verify_failures(rep);
    ok = rep.pass();
    result["verified"] = ok;
    std::cout << "verified against " << cases << " graph extensions: "
              << (ok ? "unique morphism everywhere" : "FAILED") << "\n";
  }
  emit(report_envelope("rg-classifier", {path}, std::move(result), cases,
                       std::move(failures), elapsed_ms(start, opt)),
       opt);
  return ok ? 0 : 2;
}

int cmd_actor(const std::string &path, const Options &opt) {
  auto start = Clock::now();
  std::string text = read_file(path);
  InternalGroupoid x = detect_kind(text) == FileKind::Xmod
                           ? xmod_to_cat1(xmod_from_text(text))
                           : InternalGroupoid::make(rgraph_from_text(text));
  GroupoidSplitExtension cls = groupoid_classifier(x);
  const auto &base = cls.rg().base_graph();
  std::cout << "groupoid with " << x.carrier()->order()
            << " arrows; classifier base " << base.carrier()->order()
            << ", total " << cls.rg().total_graph().carrier()->order()
            << "\n";
  if (!opt.out.empty())
    write_file(opt.out, classifier_to_text(base, cls.rg().action().action()));
  Json result;
  result["kernel_order"] = x.carrier()->order();
  result["base_order"] = base.carrier()->order();
  result["total_order"] = cls.rg().total_graph().carrier()->order();
  result["groupoid"] = true;
  long cases = 1;
  Json failures = Json::array();
  bool ok = true;
  if (opt.verify) {
    auto rep =
        grpd_verify_generic(cls, load_catalog(opt), opt.max_base, opt.jobs);
    cases = rep.cases_checked;
    failures = verify_failures(rep);
    ok = rep.pass();
    result["verified"] = ok;
    std::cout << "verified against " << cases << " groupoid extensions: "
              << (ok ? "unique morphism everywhere" : "FAILED") << "\n";
  }
  emit(report_envelope("actor", {path}, std::move(result), cases,
                       std::move(failures), elapsed_ms(start, opt)),
       opt);
  return ok ? 0 : 2;
}

int cmd_lattice(const std::string &command, const std::string &path,
                const std::string &spec_a, const std::string &spec_b,
                const Options &opt) {
  auto start = Clock::now();
  GroupPtr g = group_from_text(read_file(path));
  Subgroup a = parse_generators(g, spec_a);
  Json result;
  Subgroup answer = Subgroup::trivial(g);
  if (command == "commutator") {
    Subgroup b = parse_generators(g, spec_b);
    answer = huq_commutator(a, b);
  } else if (command == "centralizer") {
    answer = centralizer(a);
  } else {
    answer = normalizer(a);
  }
  std::cout << command << ": {" << subgroup_line(answer) << "} of order "
            << answer.size() << "\n";
  result["group"] = g->name();
  result["elements"] = answer.elements();
  result["size"] = answer.size();
  result["normal"] = answer.is_normal();
  emit(report_envelope(command, {path}, std::move(result), 1, Json::array(),
                       elapsed_ms(start, opt)),
       opt);
  return 0;
}

int cmd_laws(const std::string &law, const Options &opt) {
  auto start = Clock::now();
  auto reports = run_laws(law, load_catalog(opt), opt.jobs);
  Json result = Json::array();
  Json failures = Json::array();
  long cases = 0;
  bool ok = true;
  for (const auto &r : reports) {
    std::cout << r.law << ": " << r.cases_checked << " checked, " << r.vacuous
              << " vacuous, " << (r.pass() ? "pass" : "FAIL") << "\n";
    result.push_back(to_json(r));
    cases += r.cases_checked;
    ok = ok && r.pass();
    for (const auto &w : r.failures) {
      Json f = to_json(w);
      f["law"] = r.law;
      failures.push_back(std::move(f));
    }
  }
  emit(report_envelope("laws", {}, std::move(result), cases,
                       std::move(failures), elapsed_ms(start, opt)),
       opt);
  return ok ? 0 : 2;
}

int cmd_catalog_export(const std::string &dir, const Options &opt) {
  auto start = Clock::now();
  fs::create_directories(dir);
  fs::create_directories(dir + "/xmod");
  Json groups = Json::array();
  for (const auto &g : bundled_catalog()) {
    write_file(dir + "/" + g->name() + ".grp", group_to_text(g));
    groups.push_back(g->name());
  }
  Json xmods = Json::array();
  for (const auto &nx : bundled_crossed_modules()) {
    write_file(dir + "/xmod/" + nx.name + ".xm", xmod_to_text(nx.xmod));
    xmods.push_back(nx.name);
  }
  std::cout << "wrote " << groups.size() << " groups and " << xmods.size()
            << " crossed modules to " << dir << "\n";
  Json result;
  result["dir"] = dir;
  result["groups"] = std::move(groups);
  result["xmods"] = std::move(xmods);
  emit(report_envelope("catalog-export", {}, std::move(result),
                       static_cast<long>(bundled_catalog().size()),
                       Json::array(), elapsed_ms(start, opt)),
       opt);
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact toolkit for split extensions, reflexive graphs and "
               "internal groupoids of finite groups"};
  app.require_subcommand(1);
  app.fallthrough(); // global options may follow the subcommand

  Options opt;
  app.add_option("--catalog", opt.catalog_dir,
                 "directory of .grp files (default: bundled catalog)");
  app.add_option("--max-base", opt.max_base, "largest base order to verify")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", opt.jobs,
                 "worker threads (0 = GRPD_JOBS or serial)");
  app.add_flag("--json", opt.json, "print the machine-readable report");
  app.add_flag("--timing", opt.timing,
               "record real wall time in reports (breaks byte-for-byte "
               "reproducibility)");
  app.add_option("--report", opt.report_path, "write the report to a file");
  app.add_option("--out", opt.out, "output path or prefix for artifacts");

  std::string path, spec_a, spec_b, law = "all", export_dir;

  auto *validate = app.add_subcommand("validate", "parse and check a file");
  validate->add_option("file", path)->required();

  auto *generic =
      app.add_subcommand("generic", "split extension classifier of a group");
  generic->add_option("file", path)->required();
  generic->add_flag("--verify", opt.verify, "oracle-check terminality");

  auto *rgc = app.add_subcommand("rg-classifier",
                                 "classifier of a reflexive graph");
  rgc->add_option("file", path)->required();
  rgc->add_flag("--verify", opt.verify, "oracle-check terminality");

  auto *actor = app.add_subcommand(
      "actor", "split extension classifier of an internal groupoid");
  actor->add_option("file", path, "reflexive graph or crossed module file")
      ->required();
  actor->add_flag("--verify", opt.verify, "oracle-check terminality");

  auto *comm = app.add_subcommand("commutator", "Huq commutator [A, B]");
  comm->add_option("file", path)->required();
  comm->add_option("--a", spec_a, "generators of A, comma separated")
      ->required();
  comm->add_option("--b", spec_b, "generators of B, comma separated")
      ->required();

  auto *cent = app.add_subcommand("centralizer", "centralizer of a subgroup");
  cent->add_option("file", path)->required();
  cent->add_option("--sub", spec_a, "generators, comma separated")->required();

  auto *norm = app.add_subcommand("normalizer", "normalizer of a subgroup");
  norm->add_option("file", path)->required();
  norm->add_option("--sub", spec_a, "generators, comma separated")->required();

  auto *laws = app.add_subcommand("laws", "algebraic law suites");
  laws->fallthrough();
  auto *laws_run = laws->add_subcommand("run", "sweep laws over the catalog");
  laws_run->add_option("--law", law, "law name or 'all'");
  laws->require_subcommand(1);

  auto *cat = app.add_subcommand("catalog", "bundled catalog utilities");
  cat->fallthrough();
  auto *cat_export = cat->add_subcommand("export", "write catalog files");
  cat_export->add_option("--dir", export_dir)->required();
  cat->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate)
      return cmd_validate(path, opt);
    if (*generic)
      return cmd_generic(path, opt);
    if (*rgc)
      return cmd_rg_classifier(path, opt);
    if (*actor)
      return cmd_actor(path, opt);
    if (*comm)
      return cmd_lattice("commutator", path, spec_a, spec_b, opt);
    if (*cent)
      return cmd_lattice("centralizer", path, spec_a, "", opt);
    if (*norm)
      return cmd_lattice("normalizer", path, spec_a, "", opt);
    if (*laws_run)
      return cmd_laws(law, opt);
    if (*cat_export)
      return cmd_catalog_export(export_dir, opt);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
