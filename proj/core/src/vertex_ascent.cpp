#include "gromon/assignment.hpp"
#include "gromon/cholesky.hpp"
#include "gromon/distortion.hpp"
#include "gromon/numeric.hpp"
#include "gromon/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace gromon {

double spd_objective(const Matrix& omega_x, const Matrix& omega_y, const Matrix& pi) {
  return (omega_x * pi).cwiseProduct(pi * omega_y).sum();
}

namespace {

using Permutation = std::vector<std::size_t>;

struct RestartResult {
  Permutation perm;
  double objective = -kInfinity;
  std::size_t moves = 0;
  bool converged = false;
};

class VertexAscent {
 public:
  VertexAscent(const Matrix& omega_x, const Matrix& omega_y, const VertexAscentOptions& options)
      : wx_(0.5 * (omega_x + omega_x.transpose())),
        wy_(0.5 * (omega_y + omega_y.transpose())),
        ux_(cholesky_upper(omega_x).upper),
        vy_(cholesky_upper(omega_y).upper),
        options_(options),
        n_(static_cast<std::size_t>(omega_x.rows())) {}

  // ||U_X pi V_Y^T||^2 with pi the permutation table scaled by 1/n.
  double objective(const Permutation& perm) const {
    const auto n = static_cast<Eigen::Index>(n_);
    Matrix permuted(n, n);
    for (Eigen::Index i = 0; i < n; ++i) permuted.col(i) = vy_.col(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(i)]));
    const Matrix m = ux_ * permuted.transpose() / static_cast<double>(n_);
    return m.squaredNorm();
  }

  Matrix table(const Permutation& perm) const {
    const auto n = static_cast<Eigen::Index>(n_);
    Matrix pi = Matrix::Zero(n, n);
    for (std::size_t i = 0; i < n_; ++i) {
      pi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i])) = 1.0 / static_cast<double>(n_);
    }
    return pi;
  }

  RestartResult climb(Permutation perm) const {
    RestartResult r;
    double current = objective(perm);
    while (r.moves < options_.max_moves) {
      // Linearisation of the convex objective at the current vertex.
      const Matrix grad = 2.0 * wx_ * table(perm) * wy_;
      Permutation next = solve_assignment_max(grad);
      double value = objective(next);
      if (!(value > current + options_.min_improvement)) {
        // The linear step stalls at vertices that are their own linear
        // argmax; fall back to the best improving transposition.
        value = best_swap(perm, next);
        if (!(value > current + options_.min_improvement)) {
          r.converged = true;
          break;
        }
      }
      perm = std::move(next);
      current = value;
      ++r.moves;
    }
    r.perm = std::move(perm);
    r.objective = current;
    return r;
  }

  // Scans transpositions with O(n) deltas of sum wx(i,j) wy(p_i,p_j); only
  // the winner is re-evaluated through the factors.
  double best_swap(const Permutation& perm, Permutation& out) const {
    double best_delta = -kInfinity;
    std::size_t best_a = 0, best_b = 0;
    auto wy = [&](std::size_t i, std::size_t j) {
      return wy_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };
    for (std::size_t a = 0; a < n_; ++a) {
      const auto ia = static_cast<Eigen::Index>(a);
      for (std::size_t b = a + 1; b < n_; ++b) {
        const auto ib = static_cast<Eigen::Index>(b);
        const std::size_t pa = perm[a], pb = perm[b];
        double delta = (wx_(ia, ia) - wx_(ib, ib)) * (wy(pb, pb) - wy(pa, pa));
        for (std::size_t k = 0; k < n_; ++k) {
          if (k == a || k == b) continue;
          const auto ik = static_cast<Eigen::Index>(k);
          delta += 2.0 * (wx_(ia, ik) - wx_(ib, ik)) * (wy(pb, perm[k]) - wy(pa, perm[k]));
        }
        if (delta > best_delta) {
          best_delta = delta;
          best_a = a;
          best_b = b;
        }
      }
    }
    if (n_ < 2) return -kInfinity;
    out = perm;
    std::swap(out[best_a], out[best_b]);
    return objective(out);
  }

  Permutation start(std::size_t restart) const {
    Permutation perm(n_);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    if (restart == 0) return perm;
    Rng rng(derive_seed(options_.seed, restart));
    for (std::size_t i = n_; i > 1; --i) {
      std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.below(i))]);
    }
    return perm;
  }

 private:
  Matrix wx_;
  Matrix wy_;
  Matrix ux_;
  Matrix vy_;
  VertexAscentOptions options_;
  std::size_t n_;
};

}  // namespace

SolveReport gw_spd_vertex_ascent(const MeasureNetwork& x, const MeasureNetwork& y,
                                 const VertexAscentOptions& options) {
  if (x.size() != y.size()) throw InvalidInput("vertex ascent: networks must have the same cardinality");
  const double u = 1.0 / static_cast<double>(x.size());
  if ((x.weights().array() - u).abs().maxCoeff() > kTolMass ||
      (y.weights().array() - u).abs().maxCoeff() > kTolMass) {
    throw InvalidInput("vertex ascent: weights must be uniform");
  }
  SolveReport report;
  report.method = SolveMethod::vertex_ascent;
  for (const auto* net : {&x, &y}) {
    const auto factor = cholesky_upper(net->omega());
    if (factor.near_singular) report.notes.push_back("near-singular SPD input");
  }

  const VertexAscent ascent(x.omega(), y.omega(), options);
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  std::vector<RestartResult> results(restarts);
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, restarts);
  if (threads == 1) {
    for (std::size_t r = 0; r < restarts; ++r) results[r] = ascent.climb(ascent.start(r));
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t r = t; r < restarts; r += threads) results[r] = ascent.climb(ascent.start(r));
      });
    }
  }

  // Seedwise reduction in restart order: independent of scheduling.
  std::size_t best = 0;
  report.converged = true;
  for (std::size_t r = 0; r < restarts; ++r) {
    report.iterations += results[r].moves;
    report.converged = report.converged && results[r].converged;
    if (results[r].objective > results[best].objective) best = r;
  }
  MongeMap witness(results[best].perm);
  report.value = distortion_map_unchecked(x, y, witness, Exponent::finite(2.0));
  for (const auto& r : results) report.trace.push_back(r.objective);
  report.witness = std::move(witness);
  return report;
}

}  // namespace gromon
