#include "gromon/distortion.hpp"
#include "gromon/solvers.hpp"

namespace gromon {

MassSplit mass_split_from_coupling(const MeasureNetwork& x, const MeasureNetwork& y, const Coupling& pi,
                                   double eps_support) {
  if (pi.rows() != x.size() || pi.cols() != y.size()) {
    throw InvalidInput("mass split: coupling shape does not match the networks");
  }
  if ((pi.source_weights() - x.weights()).cwiseAbs().maxCoeff() > kTolMass ||
      (pi.target_weights() - y.weights()).cwiseAbs().maxCoeff() > kTolMass) {
    throw InvalidInput("mass split: coupling does not couple the network weights");
  }
  std::vector<std::size_t> rows, cols;
  std::vector<double> mass;
  for (std::size_t i = 0; i < pi.rows(); ++i) {
    for (std::size_t j = 0; j < pi.cols(); ++j) {
      if (pi(i, j) > eps_support) {
        rows.push_back(i);
        cols.push_back(j);
        mass.push_back(pi(i, j));
      }
    }
  }
  if (mass.empty()) throw InvalidInput("mass split: coupling has empty support");
  Vector zw = Eigen::Map<const Vector>(mass.data(), static_cast<Eigen::Index>(mass.size()));
  zw /= zw.sum();
  MongeMap rho(std::move(rows));
  MongeMap phi(std::move(cols));
  MeasureNetwork z = pullback_network(x, rho, zw);
  require_measure_preserving(phi, z.weights(), y.weights());
  return MassSplit{std::move(z), std::move(rho), std::move(phi)};
}

Coupling coupling_from_split(const MassSplit& split, const Vector& x_weights, const Vector& y_weights) {
  require_measure_preserving(split.rho, split.z.weights(), x_weights);
  require_measure_preserving(split.phi, split.z.weights(), y_weights);
  Matrix table = Matrix::Zero(x_weights.size(), y_weights.size());
  for (std::size_t k = 0; k < split.z.size(); ++k) {
    table(static_cast<Eigen::Index>(split.rho[k]), static_cast<Eigen::Index>(split.phi[k])) += split.z.weight(k);
  }
  return Coupling(std::move(table), x_weights, y_weights);
}

double gm_over_split(const MeasureNetwork& x, const MeasureNetwork& y, const Coupling& pi, const Exponent& p) {
  const MassSplit split = mass_split_from_coupling(x, y, pi);
  return distortion_map(split.z, y, split.phi, p);
}

}  // namespace gromon
