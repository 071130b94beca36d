#include "gromon/assignment.hpp"
#include "gromon/distortion.hpp"
#include "gromon/numeric.hpp"
#include "gromon/solvers.hpp"
#include "gromon/transport.hpp"

#include <algorithm>
#include <cmath>

namespace gromon {

namespace {

bool is_uniform(const Vector& w) {
  const double u = 1.0 / static_cast<double>(w.size());
  return (w.array() - u).abs().maxCoeff() <= kTolMass;
}

// Squared 2-distortion restricted to the coupling polytope:
//   dis_2(pi)^2 = c_X + c_Y - 2 <omega_X pi omega_Y^T, pi>
class QuadraticObjective {
 public:
  QuadraticObjective(const MeasureNetwork& x, const MeasureNetwork& y)
      : wx_(x.omega()), wy_(y.omega()) {
    constant_ = x.weights().dot(wx_.cwiseAbs2() * x.weights()) +
                y.weights().dot(wy_.cwiseAbs2() * y.weights());
  }

  double cross(const Matrix& a, const Matrix& b) const {
    return (wx_ * a * wy_.transpose()).cwiseProduct(b).sum();
  }
  double value(const Matrix& pi) const { return constant_ - 2.0 * cross(pi, pi); }
  // Gradient up to terms that are constant on the polytope (row/column offsets).
  Matrix gradient(const Matrix& pi) const {
    return -2.0 * (wx_ * pi * wy_.transpose() + wx_.transpose() * pi * wy_);
  }

 private:
  const Matrix& wx_;
  const Matrix& wy_;
  double constant_ = 0.0;
};

}  // namespace

SolveReport gw_frank_wolfe(const MeasureNetwork& x, const MeasureNetwork& y,
                           const std::optional<Coupling>& init, const FrankWolfeOptions& options) {
  const Coupling start = init ? *init : Coupling::product(x.weights(), y.weights());
  if (start.rows() != x.size() || start.cols() != y.size()) {
    throw InvalidInput("frank-wolfe: initial coupling shape does not match the networks");
  }
  if ((start.source_weights() - x.weights()).cwiseAbs().maxCoeff() > kTolMass ||
      (start.target_weights() - y.weights()).cwiseAbs().maxCoeff() > kTolMass) {
    throw InvalidInput("frank-wolfe: initial coupling does not couple the network weights");
  }

  const bool use_assignment = x.size() == y.size() && is_uniform(x.weights()) && is_uniform(y.weights());
  const QuadraticObjective objective(x, y);
  const double n_inv = 1.0 / static_cast<double>(x.size());

  Matrix pi = start.table();
  double f = objective.value(pi);
  SolveReport report;
  report.method = SolveMethod::frank_wolfe;
  report.trace.push_back(f);

  for (std::size_t iter = 0; iter < options.max_iters; ++iter) {
    const Matrix grad = objective.gradient(pi);
    Matrix vertex;
    if (use_assignment) {
      const auto perm = solve_assignment_min(grad);
      vertex = Matrix::Zero(pi.rows(), pi.cols());
      for (std::size_t i = 0; i < perm.size(); ++i) {
        vertex(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(perm[i])) = n_inv;
      }
    } else {
      vertex = solve_transport(grad, x.weights(), y.weights()).plan;
    }
    const Matrix direction = vertex - pi;
    const double gap = -grad.cwiseProduct(direction).sum();
    report.iterations = iter + 1;
    if (gap <= options.tol) {
      report.converged = true;
      break;
    }
    // f(pi + g d) = f + b g + a g^2 on the segment.
    const double a = -2.0 * objective.cross(direction, direction);
    const double b = -2.0 * (objective.cross(pi, direction) + objective.cross(direction, pi));
    double step;
    if (a > 0.0) {
      step = std::clamp(-b / (2.0 * a), 0.0, 1.0);
    } else {
      step = (a + b < 0.0) ? 1.0 : 0.0;
    }
    const double predicted = b * step + a * step * step;
    if (!(predicted < 0.0) || step == 0.0) {
      // No decrease representable in floating point: stationary for our purposes.
      report.converged = true;
      break;
    }
    Matrix next = (pi + step * direction).cwiseMax(0.0);
    const double f_next = objective.value(next);
    if (f_next > f) {
      report.converged = true;
      break;
    }
    pi = std::move(next);
    f = f_next;
    report.trace.push_back(f);
  }

  Coupling witness(pi, x.weights(), y.weights());
  report.value = distortion_p(x, y, witness, Exponent::finite(2.0));
  report.witness = std::move(witness);
  return report;
}

}  // namespace gromon
