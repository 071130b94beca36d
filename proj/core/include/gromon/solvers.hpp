#pragma once

#include "gromon/types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gromon {

enum class SolveMethod { enumeration, frank_wolfe, vertex_ascent, alternating };

std::string to_string(SolveMethod method);

using Witness = std::variant<std::monostate, Coupling, MongeMap>;

/// Result of a distance computation. value equals the distortion of the
/// witness; an infeasible Gromov-Monge problem has value == kInfinity and
/// no witness.
struct SolveReport {
  double value = kInfinity;
  Witness witness;
  SolveMethod method = SolveMethod::enumeration;
  std::uint64_t iterations = 0;
  bool converged = false;
  /// Objective after every accepted iterate (Frank-Wolfe: squared 2-distortion).
  std::vector<double> trace;
  std::vector<std::string> notes;

  bool infeasible() const { return value == kInfinity; }
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// GM_p by exhaustive branch-and-bound over measure-preserving maps.
/// Throws TooLarge when more than cap maps exist.
SolveReport gm_exact(const MeasureNetwork& x, const MeasureNetwork& y, const Exponent& p,
                     std::uint64_t cap = kDefaultEnumerationCap);

/// GM_inf, the sup-distortion variant of gm_exact.
SolveReport gm_infinity(const MeasureNetwork& x, const MeasureNetwork& y,
                        std::uint64_t cap = kDefaultEnumerationCap);

struct FrankWolfeOptions {
  std::size_t max_iters = 1000;
  double tol = 1e-9;  // on the Frank-Wolfe gap
};

/// Upper bound on GW_2 by conditional gradient over the coupling polytope,
/// started from init (product coupling when absent). Exact line search, so
/// the objective never increases. Linear oracle: assignment for uniform
/// equal-size marginals, transportation simplex otherwise.
SolveReport gw_frank_wolfe(const MeasureNetwork& x, const MeasureNetwork& y,
                           const std::optional<Coupling>& init = std::nullopt,
                           const FrankWolfeOptions& options = {});

struct VertexAscentOptions {
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::size_t max_moves = 10000;  // per restart
  double min_improvement = 1e-12;
};

/// GW_2 for uniform same-size networks with symmetric positive definite
/// network functions. Maximises ||U_X pi V_Y^T||^2 over the scaled Birkhoff
/// polytope by moving between permutation vertices: the assignment that
/// maximises the linearisation, or the best transposition when that step
/// stalls. Restart 0 starts from the identity, the rest from seeded random
/// permutations. Throws
/// InvalidInput("not SPD: ...") when a Cholesky factorisation fails.
SolveReport gw_spd_vertex_ascent(const MeasureNetwork& x, const MeasureNetwork& y,
                                 const VertexAscentOptions& options = {});

/// <omega_X pi, pi omega_Y> for a coupling table pi.
double spd_objective(const Matrix& omega_x, const Matrix& omega_y, const Matrix& pi);

/// Mass splitting Z of X built from the support of a coupling, with the
/// projections rho: Z -> X and phi: Z -> Y.
struct MassSplit {
  MeasureNetwork z;
  MongeMap rho;
  MongeMap phi;
};

/// Z = cells of pi above eps_support (row-major), weighted by pi and
/// renormalised, omega_Z the pullback of omega_X along rho. The distortion
/// of phi: Z -> Y equals the distortion of pi for every p.
MassSplit mass_split_from_coupling(const MeasureNetwork& x, const MeasureNetwork& y, const Coupling& pi,
                                   double eps_support = kEpsSupport);

/// Coupling (rho x phi)_# mu_Z induced by a mass splitting.
Coupling coupling_from_split(const MassSplit& split, const Vector& x_weights, const Vector& y_weights);

/// p-distortion of the split's phi; an upper bound on GW_p, tight when pi is optimal.
double gm_over_split(const MeasureNetwork& x, const MeasureNetwork& y, const Coupling& pi, const Exponent& p);

}  // namespace gromon
