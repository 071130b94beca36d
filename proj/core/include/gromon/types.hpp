#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gromon {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Default numerical tolerances.
inline constexpr double kTolMass = 1e-9;    // marginal and total-mass checks
inline constexpr double kTolMetric = 1e-9;  // metric-axiom checks
inline constexpr double kEpsSupport = 1e-12;  // coupling support for sup-distortion

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Raised for malformed or inconsistent inputs (bad weights, size
/// mismatches, non measure-preserving maps, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact solver would exceed its work budget.
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent p in [1, inf]. Infinity is stored as a tag, never as a large float.
class Exponent {
 public:
  /// Throws InvalidInput unless p >= 1 and finite.
  static Exponent finite(double p);
  static Exponent infinity() { return Exponent(); }
  /// Accepts a decimal number or "inf"/"infinity" (case-insensitive).
  static Exponent parse(const std::string& text);

  bool is_infinite() const { return !p_.has_value(); }
  /// The finite exponent; precondition: !is_infinite().
  double value() const;
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() = default;
  explicit Exponent(double p) : p_(p) {}
  std::optional<double> p_;
};

/// Checks w is a probability vector with strictly positive entries.
void validate_probability_vector(const Vector& w, const char* what, double tol_mass = kTolMass);

/// Finite measure network: weights (full support, total mass one) and a
/// square table of network-function values.
class MeasureNetwork {
 public:
  MeasureNetwork(Vector weights, Matrix omega, std::vector<std::string> labels = {});

  static MeasureNetwork uniform(Matrix omega);
  /// Discrete metric space on n points with uniform weights.
  static MeasureNetwork simplex(std::size_t n);
  static MeasureNetwork one_point();

  std::size_t size() const { return static_cast<std::size_t>(weights_.size()); }
  const Vector& weights() const { return weights_; }
  const Matrix& omega() const { return omega_; }
  double omega(std::size_t i, std::size_t j) const { return omega_(i, j); }
  double weight(std::size_t i) const { return weights_(i); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Relabel points: result point k is this network's point order[k].
  MeasureNetwork permuted(const std::vector<std::size_t>& order) const;

 private:
  Vector weights_;
  Matrix omega_;
  std::vector<std::string> labels_;
};

struct MetricFlag {
  bool is_metric = false;
  double max_violation = 0.0;
};

/// Nonnegative table with prescribed row and column sums.
class Coupling {
 public:
  Coupling(Matrix table, Vector source_weights, Vector target_weights, double tol_mass = kTolMass);

  /// Product coupling mu_X (x) mu_Y.
  static Coupling product(const Vector& source_weights, const Vector& target_weights);

  const Matrix& table() const { return table_; }
  const Vector& source_weights() const { return source_; }
  const Vector& target_weights() const { return target_; }
  std::size_t rows() const { return static_cast<std::size_t>(table_.rows()); }
  std::size_t cols() const { return static_cast<std::size_t>(table_.cols()); }
  double operator()(std::size_t i, std::size_t j) const { return table_(i, j); }

 private:
  Matrix table_;
  Vector source_;
  Vector target_;
};

/// Assignment of every source index to a target index. Measure preservation
/// depends on weights and is checked where the map is used.
class MongeMap {
 public:
  MongeMap() = default;
  explicit MongeMap(std::vector<std::size_t> assignment) : assignment_(std::move(assignment)) {}

  static MongeMap identity(std::size_t n);

  std::size_t size() const { return assignment_.size(); }
  std::size_t operator[](std::size_t i) const { return assignment_[i]; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }

  friend bool operator==(const MongeMap&, const MongeMap&) = default;

 private:
  std::vector<std::size_t> assignment_;
};

/// Largest absolute deviation between the pushforward of source_weights under
/// phi and target_weights. Throws InvalidInput on out-of-range indices.
double pushforward_error(const MongeMap& phi, const Vector& source_weights, const Vector& target_weights);

/// Throws InvalidInput unless phi pushes source_weights onto target_weights.
void require_measure_preserving(const MongeMap& phi, const Vector& source_weights,
                                const Vector& target_weights, double tol_mass = kTolMass);

}  // namespace gromon
