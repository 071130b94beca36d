#include "acceptance.hpp"

#include "oracle.hpp"

#include <gromon/distortion.hpp>
#include <gromon/embedding.hpp>
#include <gromon/euclidean.hpp>
#include <gromon/graph.hpp>
#include <gromon/numeric.hpp>
#include <gromon/random.hpp>
#include <gromon/solvers.hpp>
#include <gromon/transport.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace gromon::acceptance {

namespace {

const Exponent kP1 = Exponent::finite(1.0);
const Exponent kP2 = Exponent::finite(2.0);
const Exponent kPInf = Exponent::infinity();

std::optional<double> oracle_p(const Exponent& p) {
  return p.is_infinite() ? std::nullopt : std::optional<double>(p.value());
}

SolveReport gm(const MeasureNetwork& x, const MeasureNetwork& y, const Exponent& p) {
  return p.is_infinite() ? gm_infinity(x, y) : gm_exact(x, y, p);
}

/// Tracks the worst error seen against a fixed tolerance.
class Check {
 public:
  explicit Check(double tol) : tol_(tol) {}

  void close(double got, double want, const std::string& where) {
    const double err = (std::isinf(got) && std::isinf(want) && got == want) ? 0.0 : std::abs(got - want);
    worst_ = std::max(worst_, std::isnan(err) ? kInfinity : err);
    if (!(err <= tol_)) fail(where + ": got " + fmt(got) + ", expected " + fmt(want));
  }
  void at_most(double lhs, double rhs, const std::string& where) {
    const double excess = lhs - rhs;
    worst_ = std::max(worst_, excess);
    if (!(excess <= tol_)) fail(where + ": " + fmt(lhs) + " exceeds " + fmt(rhs));
  }
  void require(bool ok, const std::string& where) {
    if (!ok) fail(where);
  }
  void count() { ++checks_; }

  bool passed() const { return first_failure_.empty(); }
  std::string summary(const std::string& extra = "") const {
    std::ostringstream s;
    s << checks_ << " checks, worst " << std::setprecision(2) << std::scientific << std::max(worst_, 0.0)
      << " vs tol " << tol_;
    if (!extra.empty()) s << ", " << extra;
    if (!passed()) s << "; first failure: " << first_failure_;
    return s.str();
  }

  static std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(17) << v;
    return s.str();
  }

 private:
  void fail(const std::string& what) {
    if (first_failure_.empty()) first_failure_ = what;
  }

  double tol_;
  double worst_ = 0.0;
  std::size_t checks_ = 0;
  std::string first_failure_;
};

std::string label(const char* name, std::size_t a) { return std::string(name) + "=" + std::to_string(a); }

MeasureNetwork example_x() {
  Vector w(3);
  w << 0.5, 0.25, 0.25;
  Matrix om = Matrix::Zero(3, 3);
  om(0, 0) = 1.0;
  return MeasureNetwork(w, om);
}

MeasureNetwork example_y() {
  Vector w(3);
  w << 0.25, 0.25, 0.5;
  Matrix om = Matrix::Zero(3, 3);
  om.topLeftCorner(2, 2).setOnes();
  return MeasureNetwork(w, om);
}

Matrix example_coupling_table() {
  Matrix t = Matrix::Zero(3, 3);
  t(0, 0) = 0.25;
  t(0, 1) = 0.25;
  t(1, 2) = 0.25;
  t(2, 2) = 0.25;
  return t;
}

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// 1. GM_p between the 2n- and n-point discrete spaces.
CriterionResult simplex_family(const SuiteOptions&) {
  Check c(1e-9);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 1; n <= 4; ++n) {
    for (double p : {1.0, 2.0}) {
      const SolveReport r = gm_exact(MeasureNetwork::simplex(2 * n), MeasureNetwork::simplex(n), Exponent::finite(p));
      c.count();
      c.close(r.value, oracle::simplex_pair_value(n, p), label("n", n) + " p=" + Exponent::finite(p).to_string());
    }
  }
  const double secs = elapsed(start);
  c.require(secs < 1.0, "runtime " + std::to_string(secs) + " s exceeds 1 s");
  return {1, "simplex pair GM_p(D_2n, D_n) = (2n)^(-1/p)", c.passed(), c.summary(), secs};
}

// 2. p-size of the simplex against the one-point space.
CriterionResult p_size_identity(const SuiteOptions&) {
  Check c(1e-12);
  for (std::size_t n = 2; n <= 10; ++n) {
    for (const Exponent& p : {kP1, kP2}) {
      const MeasureNetwork d = MeasureNetwork::simplex(n);
      const double want = oracle::simplex_size(n, p.value());
      const std::string where = label("n", n) + " p=" + p.to_string();
      c.count();
      c.close(size_p(d, p), want, "size_p " + where);
      c.close(gm_exact(d, MeasureNetwork::one_point(), p).value, want, "gm_exact " + where);
    }
  }
  return {2, "size_p(D_n) = GM_p(D_n, *) = (1 - 1/n)^(1/p)", c.passed(), c.summary(), 0.0};
}

// 3. One point against the two-point discrete space.
CriterionResult one_point_vs_two(const SuiteOptions&) {
  Check c(1e-12);
  const MeasureNetwork x = MeasureNetwork::one_point();
  const MeasureNetwork y = MeasureNetwork::simplex(2);
  const Coupling pi = Coupling::product(x.weights(), y.weights());
  for (const Exponent& p : {kP1, kP2}) {
    const double want = std::pow(2.0, -1.0 / p.value());
    c.count();
    c.close(distortion_p(x, y, pi, p), want, "coupling distortion p=" + p.to_string());
    c.require(gm_exact(x, y, p).infeasible(), "gm_exact should be infinite p=" + p.to_string());
    const MassSplit split = mass_split_from_coupling(x, y, pi);
    c.close(distortion_map(split.z, y, split.phi, p), want, "split distortion p=" + p.to_string());
  }
  return {3, "one point vs D_2: GW = GM(Z, Y) = 2^(-1/p), GM = inf", c.passed(), c.summary(), 0.0};
}

// 4. Weakly isomorphic pair with finite nonzero GM.
CriterionResult weak_iso_gap(const SuiteOptions&) {
  Check c(1e-9);
  const MeasureNetwork x = example_x(), y = example_y();
  const SolveReport r = gm_exact(x, y, kP2);
  const oracle::BruteForce bf = oracle::gm_over_all_functions(x, y, 2.0);
  c.count();
  c.require(bf.admissible == 2, "expected exactly two measure-preserving maps, oracle found " +
                                    std::to_string(bf.admissible));
  c.close(r.value, std::sqrt(0.5), "gm_exact vs sqrt(1/2)");
  c.close(r.value, bf.value, "gm_exact vs enumeration");
  Check z(1e-12);
  const Coupling pi(example_coupling_table(), x.weights(), y.weights());
  for (const Exponent& p : {kP1, kP2, kPInf}) {
    z.count();
    z.close(distortion_p(x, y, pi, p), 0.0, "explicit coupling p=" + p.to_string());
  }
  return {4, "weak isomorphism with GM_2 = sqrt(1/2) > 0 = GW", c.passed() && z.passed(),
          c.summary("coupling " + z.summary()), 0.0};
}

// 5. Vertex ascent against brute force on SPD pairs.
CriterionResult spd_oracle(const SuiteOptions& options) {
  Check value(1e-8);
  Check extremal(1e-9);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n = 3; n <= 7; ++n) {
    for (std::size_t s = 0; s < 50; ++s) {
      const std::uint64_t seed = derive_seed(options.seed, 5000 + 100 * n + s);
      Rng rng(seed);
      const MeasureNetwork x = MeasureNetwork::uniform(random_spd(n, rng));
      const MeasureNetwork y = MeasureNetwork::uniform(random_spd(n, rng));
      VertexAscentOptions va;
      va.restarts = 20;
      va.seed = seed;
      const SolveReport r = gw_spd_vertex_ascent(x, y, va);
      const oracle::BruteForce bf = oracle::gw2_over_permutations(x, y);
      const std::string where = label("n", n) + " instance " + std::to_string(s);
      value.count();
      value.close(r.value, bf.value, where);
      for (int k = 0; k < 1000; ++k) {
        const Coupling pi = random_coupling(x.weights(), y.weights(), rng);
        extremal.count();
        extremal.at_most(bf.value, oracle::distortion(x.omega(), y.omega(), pi.table(), 2.0),
                         where + " coupling " + std::to_string(k));
      }
    }
  }
  const double secs = elapsed(start);
  value.require(secs < 120.0, "runtime " + std::to_string(secs) + " s exceeds 2 min");
  return {5, "SPD vertex ascent matches the best permutation", value.passed() && extremal.passed(),
          value.summary("couplings " + extremal.summary()), secs};
}

Coupling sparse_coupling(const Vector& a, const Vector& b, Rng& rng) {
  Matrix cost(a.size(), b.size());
  for (Eigen::Index i = 0; i < cost.rows(); ++i) {
    for (Eigen::Index j = 0; j < cost.cols(); ++j) cost(i, j) = rng.uniform();
  }
  return Coupling(solve_transport(cost, a, b).plan, a, b);
}

// 6. Mass splitting reproduces the coupling distortion.
CriterionResult mass_split_identity(const SuiteOptions& options) {
  Check c(1e-10);
  for (std::size_t s = 0; s < 100; ++s) {
    Rng rng(derive_seed(options.seed, 6000 + s));
    const std::size_t n = 1 + rng.below(8), m = 1 + rng.below(8);
    const MeasureNetwork x(random_weights(n, rng), random_metric(n, rng));
    const MeasureNetwork y(random_weights(m, rng), random_metric(m, rng));
    // Alternate dense couplings with sparse transport vertices.
    const Coupling pi = s % 2 == 0 ? random_coupling(x.weights(), y.weights(), rng)
                                   : sparse_coupling(x.weights(), y.weights(), rng);
    const MassSplit split = mass_split_from_coupling(x, y, pi);
    for (const Exponent& p : {kP1, kP2, kPInf}) {
      c.count();
      c.close(distortion_map(split.z, y, split.phi, p), distortion_p(x, y, pi, p),
              "instance " + std::to_string(s) + " p=" + p.to_string());
    }
  }
  return {6, "mass splitting: dis_p(phi) = dis_p(pi)", c.passed(), c.summary(), 0.0};
}

// 7. Embedding values of the simplex against a point.
CriterionResult embedding_values(const SuiteOptions&) {
  Check c(1e-6);
  Check inf(1e-12);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (const Exponent& p : {kP1, kP2}) {
      const SimplexPointEmbedding e = simplex_point_embedding_value(n, p);
      const std::string where = label("n", n) + " p=" + p.to_string();
      c.count();
      c.close(e.closed_form, 0.5, "closed form " + where);
      c.close(e.numerical, e.closed_form, "numerical " + where);
      c.require(simplex_embedding_violation(e.alpha) <= 1e-9, "minimiser infeasible " + where);
    }
    inf.count();
    inf.close(gm_em_infinity(MeasureNetwork::simplex(n), MeasureNetwork::one_point()), 0.5, label("GM^em_inf n", n));
  }
  return {7, "GM^em_p(D_n, *) = 1/2", c.passed() && inf.passed(), c.summary("p=inf " + inf.summary()), 0.0};
}

// 8. Lower sandwich bound and exact recovery for Euclidean clouds.
CriterionResult sandwich(const SuiteOptions& options) {
  Check c(1e-6);
  for (std::size_t s = 0; s < 100; ++s) {
    const std::uint64_t seed = derive_seed(options.seed, 8000 + s);
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(8), dim = 1 + rng.below(3);
    const EuclideanCloud x = random_cloud(n, dim, rng);
    const EuclideanCloud y = random_cloud(n, dim, rng);
    const Isometry t0 = random_isometry(dim, rng);
    MisoOptions mo;
    mo.restarts = 20;
    mo.seed = seed;
    const MeasureNetwork nx = cloud_to_network(x), ny = cloud_to_network(y);
    for (const Exponent& p : {kP1, kP2, kPInf}) {
      const std::string where = "instance " + std::to_string(s) + " p=" + p.to_string();
      c.count();
      c.at_most(0.5 * gm(nx, ny, p).value, m_iso(x, y, p, mo).report.value, "sandwich " + where);
      c.at_most(m_iso(x, transformed(x, t0), p, mo).report.value, 0.0, "recovery " + where);
    }
  }
  return {8, "1/2 GM_p <= M_iso and M_iso(X, T0 X) = 0", c.passed(), c.summary(), 0.0};
}

// 9. Heat kernel closed form, positivity, relabeling.
CriterionResult heat_kernel_checks(const SuiteOptions& options) {
  Check closed(1e-12);
  Check relabel(1e-9);
  bool positive = true;
  double min_eig = kInfinity;
  const Graph edge(2, {{0, 1}});
  for (double t : {0.5, 1.0, 2.0}) {
    const Matrix k = heat_kernel(edge, t);
    closed.count();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) closed.close(k(i, j), oracle::single_edge_heat(t, i == j), "single edge t=" + Check::fmt(t));
    }
  }
  for (std::size_t s = 0; s < 40; ++s) {
    const std::uint64_t seed = derive_seed(options.seed, 9000 + s);
    Rng rng(seed);
    const std::size_t n = 2 + rng.below(7);
    const Graph g = random_graph(n, 0.5, rng);
    for (double t : {0.5, 1.0, 2.0}) {
      const Matrix k = heat_kernel(g, t);
      const double lo = Eigen::SelfAdjointEigenSolver<Matrix>(k, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
      min_eig = std::min(min_eig, lo);
      positive = positive && lo > 0.0;
    }
    const Graph h = g.relabeled(random_permutation(n, rng));
    VertexAscentOptions va;
    va.restarts = 50;
    va.seed = seed;
    relabel.count();
    relabel.close(gw_spd_vertex_ascent(heat_kernel_network(g, 1.0), heat_kernel_network(h, 1.0), va).value, 0.0,
                  "relabeled graph " + std::to_string(s));
  }
  closed.require(positive, "heat kernel with a nonpositive eigenvalue " + Check::fmt(min_eig));
  return {9, "heat kernel closed form, positivity, GW_2 to relabeling = 0", closed.passed() && relabel.passed(),
          closed.summary("min eigenvalue " + Check::fmt(min_eig) + ", relabel " + relabel.summary()), 0.0};
}

/// Source network whose atoms split the target atoms, so a measure-preserving map exists.
MeasureNetwork splitting_source(const MeasureNetwork& y, Rng& rng) {
  std::vector<double> w;
  for (Eigen::Index j = 0; j < y.weights().size(); ++j) {
    const double wj = y.weights()(j);
    if (rng.below(2) == 0) {
      w.push_back(wj);
    } else {
      const double f = 0.2 + 0.6 * rng.uniform();
      w.push_back(wj * f);
      w.push_back(wj - wj * f);
    }
  }
  const auto order = random_permutation(w.size(), rng);
  Vector v(static_cast<Eigen::Index>(w.size()));
  for (std::size_t i = 0; i < w.size(); ++i) v(static_cast<Eigen::Index>(i)) = w[order[i]];
  return MeasureNetwork(v, random_metric(w.size(), rng));
}

bool same_file(const std::filesystem::path& a, const std::filesystem::path& b) {
  std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
  std::ostringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  return fa && fb && !sa.str().empty() && sa.str() == sb.str();
}

// 10. GW <= GM, GM triangle inequality, CLI determinism.
CriterionResult structural(const SuiteOptions& options) {
  Check c(1e-10);
  for (std::size_t s = 0; s < 50; ++s) {
    Rng rng(derive_seed(options.seed, 10000 + s));
    const std::size_t m = 1 + rng.below(4);
    const MeasureNetwork y(random_weights(m, rng), random_metric(m, rng));
    const MeasureNetwork x = s == 0 ? example_x() : splitting_source(y, rng);
    const MeasureNetwork& target = s == 0 ? example_y() : y;
    const SolveReport g = gm_exact(x, target, kP2);
    const auto& phi = std::get<MongeMap>(g.witness);
    const SolveReport w = gw_frank_wolfe(x, target, coupling_from_map(phi, x.weights(), target.weights()));
    c.count();
    c.at_most(w.value, g.value, "GW <= GM instance " + std::to_string(s));
  }
  const std::size_t chains[][3] = {{6, 3, 1}, {6, 2, 2}, {4, 2, 1}, {6, 6, 3}, {5, 5, 5}, {4, 4, 2}, {6, 3, 3}, {3, 3, 1}};
  for (std::size_t s = 0; s < 40; ++s) {
    Rng rng(derive_seed(options.seed, 11000 + s));
    const auto& sizes = chains[rng.below(std::size(chains))];
    const MeasureNetwork x = MeasureNetwork::uniform(random_metric(sizes[0], rng));
    const MeasureNetwork y = MeasureNetwork::uniform(random_metric(sizes[1], rng));
    const MeasureNetwork z = MeasureNetwork::uniform(random_metric(sizes[2], rng));
    for (const Exponent& p : {kP1, kP2, kPInf}) {
      c.count();
      c.at_most(gm(x, z, p).value, gm(x, y, p).value + gm(y, z, p).value,
                "triangle instance " + std::to_string(s) + " p=" + p.to_string());
    }
  }

  std::string cli_detail = "CLI not checked";
  if (options.cli) {
    namespace fs = std::filesystem;
    fs::create_directories(options.scratch_dir);
    const std::string seed = std::to_string(options.seed);
    auto path = [&](const std::string& name) { return (options.scratch_dir / name).string(); };
    auto run = [&](const std::vector<std::string>& args) {
      const auto [code, out] = options.cli(args);
      c.require(code == 0, "CLI exit " + std::to_string(code) + " for " + args.front());
      return out;
    };
    std::size_t runs = 0;
    for (const char* kind : {"spd", "metric", "cloud", "graph"}) {
      for (const char* copy : {"a", "b"}) {
        run({"rand", kind, "--n", "6", "--dim", "2", "--seed", seed, "--out", path(std::string(kind) + "_" + copy + ".json")});
      }
      c.require(same_file(path(std::string(kind) + "_a.json"), path(std::string(kind) + "_b.json")),
                std::string("rand ") + kind + " differs between runs");
      runs += 2;
    }
    run({"rand", "spd", "--n", "6", "--seed", std::to_string(options.seed + 1), "--out", path("spd_c.json")});
    run({"rand", "cloud", "--n", "6", "--dim", "2", "--seed", std::to_string(options.seed + 1), "--out", path("cloud_c.json")});
    run({"rand", "metric", "--n", "3", "--seed", std::to_string(options.seed + 1), "--out", path("metric_c.json")});
    const std::vector<std::vector<std::string>> commands = {
        {"spd", path("spd_a.json"), path("spd_c.json"), "--seed", seed, "--restarts", "8"},
        {"spd", path("spd_a.json"), path("spd_c.json"), "--seed", seed, "--restarts", "8", "--threads", "2"},
        {"gw", path("spd_a.json"), path("spd_c.json")},
        {"gm", path("metric_a.json"), path("metric_c.json"), "--p", "2", "--format", "csv"},
        {"miso", path("cloud_a.json"), path("cloud_c.json"), "--seed", seed, "--restarts", "8"},
        {"heat", path("graph_a.json"), "--t", "1"},
    };
    std::vector<std::string> outputs;
    for (const auto& cmd : commands) {
      const std::string first = run(cmd);
      const std::string second = run(cmd);
      runs += 2;
      c.require(!first.empty() && first == second, "output of '" + cmd.front() + "' differs between runs");
      outputs.push_back(first);
    }
    c.require(outputs[0] == outputs[1], "spd output depends on --threads");
    cli_detail = std::to_string(runs) + " CLI runs byte-identical";
  }
  return {10, "GW <= GM, GM triangle inequality, CLI determinism", c.passed(), c.summary(cli_detail), 0.0};
}

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  using Criterion = CriterionResult (*)(const SuiteOptions&);
  const Criterion criteria[] = {simplex_family,   p_size_identity, one_point_vs_two, weak_iso_gap,       spd_oracle,
                                mass_split_identity, embedding_values, sandwich,      heat_kernel_checks, structural};
  const char* titles[] = {"simplex pair", "p-size identity", "one point vs D_2", "weak isomorphism gap",
                          "SPD vertex ascent", "mass splitting", "embedding values", "sandwich",
                          "heat kernel", "structural invariants"};
  std::vector<CriterionResult> out;
  for (std::size_t k = 0; k < std::size(criteria); ++k) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = criteria[k](options);
    } catch (const std::exception& e) {
      r = {static_cast<int>(k + 1), titles[k], false, std::string("exception: ") + e.what(), 0.0};
    }
    r.seconds = elapsed(start);
    out.push_back(std::move(r));
  }
  return out;
}

void print_results(const std::vector<CriterionResult>& results, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed ? 1 : 0;
    out << (r.passed ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.title << "  [" << std::fixed
        << std::setprecision(2) << r.seconds << " s]  (" << r.detail << ")\n";
    out.unsetf(std::ios::floatfield);
  }
  out << passed << "/" << results.size() << " acceptance criteria passed\n";
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace gromon::acceptance
