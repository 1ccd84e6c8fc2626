#ifndef BANDHARVEST_TYPES_HPP
#define BANDHARVEST_TYPES_HPP

#include <complex>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

// Shared domain types.  All quantities are dimensionless products in
// units of the Gaussian switching width sigma (omega = Omega*sigma,
// lambda_cut = Lambda*sigma, separation = S/sigma, ...).

namespace bandharvest {

using Complex = std::complex<double>;

/// Single-detector parameters: energy gap (negative = initially excited)
/// and coupling strength.  Transition probabilities carry coupling^2.
struct DetectorParams {
  double gap = 0.0;
  double coupling = 1.0;

  void validate() const {
    if (!(coupling > 0.0))
      throw std::invalid_argument("DetectorParams: coupling must be > 0");
  }
};

/// Two-detector arrangement: spatial separation and switching delay
/// (delay is used only by the delta-switching model).
struct PairGeometry {
  double separation = 1.0;
  double delay = 0.0;

  void validate() const {
    if (!(separation > 0.0))
      throw std::invalid_argument("PairGeometry: separation must be > 0");
    if (delay < 0.0)
      throw std::invalid_argument("PairGeometry: delay must be >= 0");
  }
};

/// Hard momentum cutoff; value may be +infinity (no bandlimit).
struct Bandlimit {
  double value = std::numeric_limits<double>::infinity();

  Bandlimit() = default;
  explicit Bandlimit(double v) : value(v) {
    if (std::isnan(v) || v < 0.0)
      throw std::invalid_argument("Bandlimit: value must be >= 0");
  }
  static Bandlimit infinite() { return Bandlimit{}; }
  bool is_infinite() const { return std::isinf(value); }
};

/// Two-qubit X-state density matrix, stored by its six independent
/// entries.  Basis order |00>, |01>, |10>, |11>.
struct XStateDensityMatrix {
  double r11 = 1.0, r22 = 0.0, r33 = 0.0, r44 = 0.0;
  Complex r14 = 0.0, r23 = 0.0;

  double trace() const { return r11 + r22 + r33 + r44; }

  Eigen::Matrix4cd matrix() const {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = r11;
    m(1, 1) = r22;
    m(2, 2) = r33;
    m(3, 3) = r44;
    m(0, 3) = r14;
    m(3, 0) = std::conj(r14);
    m(1, 2) = r23;
    m(2, 1) = std::conj(r23);
    return m;
  }
};

/// Gaussian spatial-profile width a/sigma.
struct GaussianProfile {
  double width = 0.2;

  void validate() const {
    if (!(width > 0.0))
      throw std::invalid_argument("GaussianProfile: width must be > 0");
  }
};

/// Full configuration of the delta-switching two-detector model.
struct DeltaPairConfig {
  DetectorParams detector;
  PairGeometry geometry;
  GaussianProfile profile;
  Bandlimit bandlimit;

  void validate() const {
    detector.validate();
    geometry.validate();
    profile.validate();
  }
};

} // namespace bandharvest

#endif
