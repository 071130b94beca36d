#pragma once

#include "gromon/types.hpp"

namespace gromon {

/// Checks whether net.omega() is a metric (symmetric, zero diagonal, positive
/// off the diagonal, triangle inequality). max_violation is the largest
/// amount by which any axiom fails.
MetricFlag validate_network(const MeasureNetwork& net, double tol_metric = kTolMetric);

/// Same scan for pseudometrics: zero off-diagonal entries are allowed.
MetricFlag check_pseudometric(const Matrix& omega, double tol_metric = kTolMetric);

/// p-distortion of a coupling. For p = inf the supremum runs over pairs of
/// cells with entry > eps_support.
double distortion_p(const MeasureNetwork& x, const MeasureNetwork& y, const Coupling& pi,
                    const Exponent& p, double eps_support = kEpsSupport);

/// p-distortion of a measure-preserving map, evaluated with the double sum
/// over source pairs. Throws InvalidInput if phi is not measure-preserving.
double distortion_map(const MeasureNetwork& x, const MeasureNetwork& y, const MongeMap& phi,
                      const Exponent& p);

/// Same as distortion_map without the pushforward check; for solvers that
/// already know phi is feasible.
double distortion_map_unchecked(const MeasureNetwork& x, const MeasureNetwork& y,
                                const MongeMap& phi, const Exponent& p);

/// Coupling induced by phi: table(i, phi(i)) = source_weights(i).
Coupling coupling_from_map(const MongeMap& phi, const Vector& source_weights,
                           const Vector& target_weights);

/// p-size: distortion against the one-point space.
double size_p(const MeasureNetwork& net, const Exponent& p);

/// Network on the source index set with omega(z, z') = d(rho(z), rho(z')).
/// Throws InvalidInput when rho does not push source_weights onto
/// base.weights().
MeasureNetwork pullback_network(const MeasureNetwork& base, const MongeMap& rho,
                                const Vector& source_weights);

}  // namespace gromon
