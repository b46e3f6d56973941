#include "rindlercorr/params.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rindler {

namespace {

constexpr double kPi = 3.14159265358979323846;

double require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite, got " +
                                std::to_string(x));
  }
  return x;
}

}  // namespace

void ModePoint::validate() const {
  if (n_max < 1) {
    throw std::invalid_argument("ModePoint.n_max must be >= 1, got " +
                                std::to_string(n_max));
  }
  require_finite(r, "ModePoint.r");
  if (r < 0.0) {
    throw std::invalid_argument("ModePoint.r must be >= 0, got " +
                                std::to_string(r));
  }
}

void AccelerationSpec::validate() const {
  require_finite(omega_over_a, "AccelerationSpec.omega_over_a");
  if (omega_over_a <= 0.0) {
    throw std::invalid_argument(
        "AccelerationSpec.omega_over_a must be > 0, got " +
        std::to_string(omega_over_a));
  }
}

double squeezing_from_acceleration(const AccelerationSpec& spec) {
  spec.validate();
  return std::atanh(std::exp(-kPi * spec.omega_over_a));
}

double acceleration_from_squeezing(double r) {
  require_finite(r, "r");
  if (r < 0.0) throw std::invalid_argument("r must be >= 0");
  if (r == 0.0) return std::numeric_limits<double>::infinity();
  // ln tanh r via log1p keeps full precision when tanh r is close to 1.
  const double e2 = std::exp(-2.0 * r);
  return -std::log1p(-2.0 * e2 / (1.0 + e2)) / kPi;
}

ModeScalars::ModeScalars(const ModePoint& p) {
  p.validate();
  n_max = p.n_max;
  r = p.r;
  t = std::tanh(r);
  if (r == 0.0) {
    log_t = -std::numeric_limits<double>::infinity();
  } else {
    const double e2 = std::exp(-2.0 * r);
    log_t = std::log1p(-2.0 * e2 / (1.0 + e2));
  }
  const double q = std::exp(-r);           // <= 1, never overflows
  inv_cosh = 2.0 * q / (1.0 + q * q);
  sech2 = inv_cosh * inv_cosh;
  sech4 = sech2 * sech2;
  sinh2 = (t * t) / sech2;

  const long n = n_max;
  d0 = -std::expm1(2.0 * (n + 1) * log_t);
  d1 = -std::expm1(2.0 * n * log_t + std::log1p(n * sech2));
  // C^2 = 2(1 - t^{2N}) - (N-1) sech^2 t^{2N}; both pieces keep relative
  // precision when C^2 itself is exponentially small at large r.
  const double t2n = t_pow(2 * n);
  c2 = -2.0 * std::expm1(2.0 * n * log_t) - (n - 1) * sech2 * t2n;
}

double ModeScalars::t_pow(long k) const {
  if (k == 0) return 1.0;
  if (t == 0.0) return 0.0;
  return std::exp(static_cast<double>(k) * log_t);
}

double normalization_C(const ModePoint& p) {
  return std::sqrt(ModeScalars(p).c2);
}

double normalization_C_sq(const ModePoint& p) { return ModeScalars(p).c2; }

double weight_D0(const ModePoint& p) { return ModeScalars(p).d0; }

double weight_D1(const ModePoint& p) { return ModeScalars(p).d1; }

}  // namespace rindler
