#include "cli.hpp"

#include "acceptance.hpp"

#include <gromon/distortion.hpp>
#include <gromon/euclidean.hpp>
#include <gromon/graph.hpp>
#include <gromon/io.hpp>
#include <gromon/random.hpp>
#include <gromon/solvers.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gromon::cli {

namespace {

enum class Format { json, csv, plain };

struct Config {
  std::vector<std::string> inputs;
  std::string p_text = "2";
  std::uint64_t seed = 0;
  std::size_t restarts = 20;
  std::optional<double> tol;
  Format format = Format::json;
  std::size_t threads = 1;
  std::optional<double> t;
  std::string out_path;
  // gw
  std::string init_path;
  std::size_t max_iters = 1000;
  // miso
  bool proper_only = false;
  // rand
  std::string kind;
  std::size_t n = 0;
  std::size_t dim = 2;
  double edge_probability = 0.5;
  // suite
  std::string scratch_dir;
};

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

void emit(const std::string& text, const Config& cfg, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    io::write_text_file(cfg.out_path, text);
  }
}

/// Serializes a distance result in the requested format.
std::string render(const std::string& command, const Exponent& p, const Config& cfg, const SolveReport& report,
                   const io::Json& extra = io::Json::object()) {
  switch (cfg.format) {
    case Format::csv: {
      std::ostringstream s;
      s << "command,p,value,converged,iterations,seed\n"
        << command << ',' << p.to_string() << ',' << format_number(report.value) << ','
        << (report.converged ? "true" : "false") << ',' << report.iterations << ',' << cfg.seed << '\n';
      return s.str();
    }
    case Format::plain: {
      std::ostringstream s;
      s << "command: " << command << "\np: " << p.to_string() << "\nvalue: " << format_number(report.value)
        << "\nmethod: " << to_string(report.method) << "\nconverged: " << (report.converged ? "true" : "false")
        << "\niterations: " << report.iterations << "\nseed: " << cfg.seed << '\n';
      for (const auto& note : report.notes) s << "note: " << note << '\n';
      return s.str();
    }
    case Format::json:
      break;
  }
  io::Json j;
  j["command"] = command;
  j["p"] = p.to_string();
  j["seed"] = cfg.seed;
  const io::Json body = io::to_json(report);
  for (const auto& item : body.items()) j[item.key()] = item.value();
  for (const auto& item : extra.items()) j[item.key()] = item.value();
  return j.dump(2) + "\n";
}

int finish(const std::string& command, const Exponent& p, const Config& cfg, const SolveReport& report,
           std::ostream& out, std::ostream& err, const io::Json& extra = io::Json::object()) {
  emit(render(command, p, cfg, report, extra), cfg, out);
  if (!report.infeasible()) return kExitOk;
  err << "gromon " << command << ": ";
  if (report.notes.empty()) {
    err << "no measure-preserving map";
  } else {
    for (std::size_t k = 0; k < report.notes.size(); ++k) err << (k ? "; " : "") << report.notes[k];
  }
  err << '\n';
  return kExitInfeasible;
}

void require_p2(const Exponent& p, const std::string& command) {
  if (p.is_infinite() || p.value() != 2.0) throw InvalidInput(command + ": only --p 2 is supported");
}

int cmd_gm(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Exponent p = Exponent::parse(cfg.p_text);
  const MeasureNetwork x = io::load_network(cfg.inputs.at(0));
  const MeasureNetwork y = io::load_network(cfg.inputs.at(1));
  const SolveReport r = p.is_infinite() ? gm_infinity(x, y) : gm_exact(x, y, p);
  return finish("gm", p, cfg, r, out, err);
}

int cmd_gw(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Exponent p = Exponent::parse(cfg.p_text);
  require_p2(p, "gw");
  const MeasureNetwork x = io::load_network(cfg.inputs.at(0));
  const MeasureNetwork y = io::load_network(cfg.inputs.at(1));
  std::optional<Coupling> init;
  if (!cfg.init_path.empty()) {
    init = io::coupling_from_json(io::read_json_file(cfg.init_path), x.weights(), y.weights());
  }
  FrankWolfeOptions fw;
  fw.max_iters = cfg.max_iters;
  if (cfg.tol) fw.tol = *cfg.tol;
  return finish("gw", p, cfg, gw_frank_wolfe(x, y, init, fw), out, err);
}

int cmd_spd(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Exponent p = Exponent::parse(cfg.p_text);
  require_p2(p, "spd");
  const MeasureNetwork x = io::load_network(cfg.inputs.at(0));
  const MeasureNetwork y = io::load_network(cfg.inputs.at(1));
  VertexAscentOptions va;
  va.restarts = cfg.restarts;
  va.seed = cfg.seed;
  va.threads = cfg.threads;
  if (cfg.tol) va.min_improvement = *cfg.tol;
  return finish("spd", p, cfg, gw_spd_vertex_ascent(x, y, va), out, err);
}

int cmd_miso(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Exponent p = Exponent::parse(cfg.p_text);
  const EuclideanCloud x = io::load_cloud(cfg.inputs.at(0));
  const EuclideanCloud y = io::load_cloud(cfg.inputs.at(1));
  MisoOptions mo;
  mo.restarts = cfg.restarts;
  mo.seed = cfg.seed;
  mo.threads = cfg.threads;
  mo.proper_only = cfg.proper_only;
  const MisoResult r = m_iso(x, y, p, mo);
  io::Json extra = io::Json::object();
  if (!r.report.infeasible()) extra["transform"] = io::to_json(r.transform);
  return finish("miso", p, cfg, r.report, out, err, extra);
}

int cmd_split(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Exponent p = Exponent::parse(cfg.p_text);
  const MeasureNetwork x = io::load_network(cfg.inputs.at(0));
  const MeasureNetwork y = io::load_network(cfg.inputs.at(1));
  const Coupling pi = io::coupling_from_json(io::read_json_file(cfg.inputs.at(2)), x.weights(), y.weights());
  const MassSplit split = mass_split_from_coupling(x, y, pi);
  SolveReport r;
  r.value = distortion_map(split.z, y, split.phi, p);
  r.witness = split.phi;
  r.converged = true;
  io::Json extra;
  extra["coupling_distortion"] = io::number_or_inf(distortion_p(x, y, pi, p));
  extra["z"] = io::to_json(split.z);
  extra["rho"] = io::to_json(split.rho);
  return finish("split", p, cfg, r, out, err, extra);
}

int cmd_heat(const Config& cfg, std::ostream& out) {
  if (!cfg.t) throw InvalidInput("heat: --t is required");
  const Graph g = io::load_graph(cfg.inputs.at(0));
  emit(io::to_json(heat_kernel_network(g, *cfg.t)).dump(2) + "\n", cfg, out);
  return kExitOk;
}

int cmd_rand(const Config& cfg, std::ostream& out) {
  if (cfg.n == 0) throw InvalidInput("rand: --n must be at least 1");
  Rng rng(cfg.seed);
  io::Json j;
  if (cfg.kind == "spd") {
    j = io::to_json(MeasureNetwork::uniform(random_spd(cfg.n, rng)));
  } else if (cfg.kind == "metric") {
    j = io::to_json(MeasureNetwork::uniform(random_metric(cfg.n, rng)));
  } else if (cfg.kind == "cloud") {
    if (cfg.dim == 0) throw InvalidInput("rand: --dim must be at least 1");
    j = io::to_json(random_cloud(cfg.n, cfg.dim, rng));
  } else if (cfg.kind == "graph") {
    j = io::to_json(random_graph(cfg.n, cfg.edge_probability, rng));
  } else {
    throw InvalidInput("rand: unknown kind '" + cfg.kind + "' (expected spd, metric, cloud or graph)");
  }
  emit(j.dump(2) + "\n", cfg, out);
  return kExitOk;
}

int cmd_suite(const Config& cfg, std::ostream& out) {
  namespace fs = std::filesystem;
  acceptance::SuiteOptions options;
  options.seed = cfg.seed;
  options.scratch_dir = cfg.scratch_dir.empty() ? fs::temp_directory_path() / ("gromon-suite-" + std::to_string(cfg.seed))
                                                 : fs::path(cfg.scratch_dir);
  options.cli = [](const std::vector<std::string>& args) {
    std::ostringstream o, e;
    const int code = run(args, o, e);
    return std::make_pair(code, o.str());
  };
  const auto results = acceptance::run_suite(options);
  acceptance::print_results(results, out);
  return acceptance::all_passed(results) ? kExitOk : kExitInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Gromov-Monge and Gromov-Wasserstein distances between finite measure networks", "gromon"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};

  auto add_p = [&](CLI::App* sub, const char* help) {
    sub->add_option("--p", cfg.p_text, help)->check([](const std::string& s) {
      try {
        Exponent::parse(s);
        return std::string();
      } catch (const std::exception& e) {
        return std::string(e.what());
      }
    });
  };
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit seed (default $GROMON_SEED or 0)")->envname("GROMON_SEED");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or plain")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "write to this file instead of standard output");
  };
  auto add_pair = [&](CLI::App* sub, const char* what) {
    sub->add_option("inputs", cfg.inputs, what)->required()->expected(2)->check(CLI::ExistingFile);
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--restarts", cfg.restarts, "number of restarts")->check(CLI::PositiveNumber);
    sub->add_option("--threads", cfg.threads, "worker threads for restarts")->check(CLI::PositiveNumber);
    add_seed(sub);
  };

  CLI::App* gm = app.add_subcommand("gm", "exact GM_p by enumerating measure-preserving maps");
  add_pair(gm, "network files X Y");
  add_p(gm, "exponent, a real >= 1 or inf (default 2)");
  add_seed(gm);
  add_format(gm);

  CLI::App* gw = app.add_subcommand("gw", "GW_2 upper bound by Frank-Wolfe");
  add_pair(gw, "network files X Y");
  add_p(gw, "exponent; only 2 is supported");
  add_seed(gw);
  add_format(gw);
  gw->add_option("--tol", cfg.tol, "stop when the Frank-Wolfe gap is below this")->check(CLI::NonNegativeNumber);
  gw->add_option("--max-iters", cfg.max_iters, "iteration limit");
  gw->add_option("--init", cfg.init_path, "coupling file to start from")->check(CLI::ExistingFile);

  CLI::App* spd = app.add_subcommand("spd", "GW_2 for SPD networks by vertex ascent over permutations");
  add_pair(spd, "network files X Y");
  add_p(spd, "exponent; only 2 is supported");
  add_search(spd);
  add_format(spd);
  spd->add_option("--tol", cfg.tol, "smallest accepted improvement")->check(CLI::NonNegativeNumber);

  CLI::App* miso = app.add_subcommand("miso", "isometry-invariant Monge distance between point clouds");
  add_pair(miso, "cloud files X Y");
  add_p(miso, "exponent, a real >= 1 or inf (default 2)");
  add_search(miso);
  add_format(miso);
  miso->add_flag("--proper", cfg.proper_only, "rotations only, no reflections");

  CLI::App* heat = app.add_subcommand("heat", "heat-kernel network exp(-tL) of a graph");
  heat->add_option("graph", cfg.inputs, "graph file (.json or edge list)")->required()->expected(1)->check(CLI::ExistingFile);
  heat->add_option("--t", cfg.t, "diffusion time, required")->required()->check(CLI::PositiveNumber);
  heat->add_option("--out", cfg.out_path, "write to this file instead of standard output");

  CLI::App* split = app.add_subcommand("split", "mass splitting of X along a coupling");
  split->add_option("inputs", cfg.inputs, "network files X Y and a coupling file")
      ->required()
      ->expected(3)
      ->check(CLI::ExistingFile);
  add_p(split, "exponent for the reported distortions (default 2)");
  add_seed(split);
  add_format(split);

  CLI::App* rnd = app.add_subcommand("rand", "write a seeded random instance");
  rnd->add_option("kind", cfg.kind, "spd, metric, cloud or graph")->required();
  rnd->add_option("--n", cfg.n, "number of points or vertices")->required();
  rnd->add_option("--dim", cfg.dim, "cloud dimension (default 2)");
  rnd->add_option("--edge-p", cfg.edge_probability, "graph edge probability (default 0.5)")->check(CLI::Range(0.0, 1.0));
  add_seed(rnd);
  rnd->add_option("--out", cfg.out_path, "write to this file instead of standard output");

  CLI::App* suite = app.add_subcommand("suite", "run the acceptance criteria and print a pass/fail table");
  add_seed(suite);
  suite->add_option("--scratch", cfg.scratch_dir, "directory for files written by the CLI checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (gm->parsed()) return cmd_gm(cfg, out, err);
    if (gw->parsed()) return cmd_gw(cfg, out, err);
    if (spd->parsed()) return cmd_spd(cfg, out, err);
    if (miso->parsed()) return cmd_miso(cfg, out, err);
    if (split->parsed()) return cmd_split(cfg, out, err);
    if (heat->parsed()) return cmd_heat(cfg, out);
    if (rnd->parsed()) return cmd_rand(cfg, out);
    if (suite->parsed()) {
      // The suite has its own fixed default seed.
      if (suite->count("--seed") == 0 && std::getenv("GROMON_SEED") == nullptr) cfg.seed = acceptance::SuiteOptions{}.seed;
      return cmd_suite(cfg, out);
    }
  } catch (const std::exception& e) {
    err << "gromon: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace gromon::cli
