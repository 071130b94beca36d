#include "gromon/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace gromon {

Exponent Exponent::finite(double p) {
  if (!std::isfinite(p) || !(p >= 1.0)) {
    throw InvalidInput("exponent p must be a finite number >= 1 (or inf)");
  }
  return Exponent(p);
}

Exponent Exponent::parse(const std::string& text) {
  std::string lower;
  lower.reserve(text.size());
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "inf" || lower == "infinity" || lower == "+inf") return infinity();
  std::size_t pos = 0;
  double p = 0.0;
  try {
    p = std::stod(text, &pos);
  } catch (const std::exception&) {
    throw InvalidInput("cannot parse exponent '" + text + "'");
  }
  if (pos != text.size()) throw InvalidInput("cannot parse exponent '" + text + "'");
  if (std::isinf(p) && p > 0) return infinity();
  return finite(p);
}

double Exponent::value() const {
  if (!p_) throw std::logic_error("Exponent::value() called on infinite exponent");
  return *p_;
}

std::string Exponent::to_string() const {
  if (!p_) return "inf";
  std::ostringstream out;
  out << *p_;
  return out.str();
}

void validate_probability_vector(const Vector& w, const char* what, double tol_mass) {
  if (w.size() == 0) throw InvalidInput(std::string(what) + ": empty weight vector");
  double total = 0.0;
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (!std::isfinite(w(i)) || !(w(i) > 0.0)) {
      throw InvalidInput(std::string(what) + ": weight " + std::to_string(i) +
                         " is not strictly positive");
    }
    total += w(i);
  }
  if (std::abs(total - 1.0) > tol_mass) {
    std::ostringstream msg;
    msg.precision(17);
    msg << what << ": weights sum to " << total << ", expected 1";
    throw InvalidInput(msg.str());
  }
}

MeasureNetwork::MeasureNetwork(Vector weights, Matrix omega, std::vector<std::string> labels)
    : weights_(std::move(weights)), omega_(std::move(omega)), labels_(std::move(labels)) {
  if (omega_.rows() != omega_.cols()) throw InvalidInput("network: omega must be square");
  if (omega_.rows() != weights_.size()) {
    throw InvalidInput("network: omega is " + std::to_string(omega_.rows()) + "x" +
                       std::to_string(omega_.cols()) + " but there are " +
                       std::to_string(weights_.size()) + " weights");
  }
  if (!labels_.empty() && labels_.size() != size()) {
    throw InvalidInput("network: label count does not match point count");
  }
  validate_probability_vector(weights_, "network");
  if (!omega_.allFinite()) throw InvalidInput("network: omega has non-finite entries");
}

MeasureNetwork MeasureNetwork::uniform(Matrix omega) {
  const auto n = omega.rows();
  if (n == 0) throw InvalidInput("network: empty omega");
  return MeasureNetwork(Vector::Constant(n, 1.0 / static_cast<double>(n)), std::move(omega));
}

MeasureNetwork MeasureNetwork::simplex(std::size_t n) {
  if (n == 0) throw InvalidInput("simplex network needs at least one point");
  const auto m = static_cast<Eigen::Index>(n);
  Matrix d = Matrix::Ones(m, m) - Matrix::Identity(m, m);
  return uniform(std::move(d));
}

MeasureNetwork MeasureNetwork::one_point() { return simplex(1); }

MeasureNetwork MeasureNetwork::permuted(const std::vector<std::size_t>& order) const {
  const auto n = size();
  if (order.size() != n) throw InvalidInput("permuted: order has wrong length");
  std::vector<bool> seen(n, false);
  for (auto k : order) {
    if (k >= n || seen[k]) throw InvalidInput("permuted: order is not a permutation");
    seen[k] = true;
  }
  Vector w(static_cast<Eigen::Index>(n));
  Matrix om(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    w(a) = weights_(order[a]);
    for (std::size_t b = 0; b < n; ++b) om(a, b) = omega_(order[a], order[b]);
    if (!labels_.empty()) labels.push_back(labels_[order[a]]);
  }
  return MeasureNetwork(std::move(w), std::move(om), std::move(labels));
}

Coupling::Coupling(Matrix table, Vector source_weights, Vector target_weights, double tol_mass)
    : table_(std::move(table)), source_(std::move(source_weights)), target_(std::move(target_weights)) {
  if (table_.rows() != source_.size() || table_.cols() != target_.size()) {
    throw InvalidInput("coupling: table shape does not match the marginals");
  }
  if (!table_.allFinite() || (table_.size() > 0 && table_.minCoeff() < 0.0)) {
    throw InvalidInput("coupling: table entries must be finite and nonnegative");
  }
  const Vector rows = table_.rowwise().sum();
  const Vector cols = table_.colwise().sum().transpose();
  const double row_err = (rows - source_).cwiseAbs().maxCoeff();
  const double col_err = (cols - target_).cwiseAbs().maxCoeff();
  if (row_err > tol_mass || col_err > tol_mass) {
    std::ostringstream msg;
    msg.precision(3);
    msg << "coupling: marginal mismatch (rows " << row_err << ", columns " << col_err << ")";
    throw InvalidInput(msg.str());
  }
}

Coupling Coupling::product(const Vector& source_weights, const Vector& target_weights) {
  return Coupling(source_weights * target_weights.transpose(), source_weights, target_weights);
}

MongeMap MongeMap::identity(std::size_t n) {
  std::vector<std::size_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = i;
  return MongeMap(std::move(a));
}

double pushforward_error(const MongeMap& phi, const Vector& source_weights, const Vector& target_weights) {
  if (phi.size() != static_cast<std::size_t>(source_weights.size())) {
    throw InvalidInput("map: assignment length does not match the source size");
  }
  Vector push = Vector::Zero(target_weights.size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (phi[i] >= static_cast<std::size_t>(target_weights.size())) {
      throw InvalidInput("map: assignment entry " + std::to_string(i) + " is out of range");
    }
    push(static_cast<Eigen::Index>(phi[i])) += source_weights(static_cast<Eigen::Index>(i));
  }
  if (push.size() == 0) return 0.0;
  return (push - target_weights).cwiseAbs().maxCoeff();
}

void require_measure_preserving(const MongeMap& phi, const Vector& source_weights,
                                const Vector& target_weights, double tol_mass) {
  if (pushforward_error(phi, source_weights, target_weights) > tol_mass) {
    throw InvalidInput("map is not measure-preserving");
  }
}

}  // namespace gromon
