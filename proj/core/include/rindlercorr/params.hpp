#pragma once

#include <cstdint>

namespace rindler {

/// Physical parameters of one bounded-occupation field mode: the occupation
/// cutoff N and the squeezing parameter r that encodes the acceleration.
struct ModePoint {
  int n_max = 1;   // maximum Rindler occupation number, >= 1
  double r = 0.0;  // squeezing parameter, >= 0 and finite

  void validate() const;  // throws std::invalid_argument on a bad field
};

/// Acceleration expressed through the only combination the mode ever sees:
/// the dimensionless ratio (mode frequency x c) / (proper acceleration).
struct AccelerationSpec {
  double omega_over_a = 1.0;  // > 0 and finite

  void validate() const;
};

/// r = artanh(exp(-pi * omega/a)). Strictly decreasing in omega/a.
double squeezing_from_acceleration(const AccelerationSpec& spec);

/// Inverse map: omega/a = -ln(tanh r)/pi. Returns +inf at r = 0.
double acceleration_from_squeezing(double r);

/// C_N(r) = sqrt(2 - tanh^{2N} r (tanh^2 r + 1 + N/cosh^2 r)), in (0, sqrt(2)].
double normalization_C(const ModePoint& p);

/// C_N(r)^2, evaluated without cancellation at large r.
double normalization_C_sq(const ModePoint& p);

/// D0_N(r) = 1 - tanh^{2(N+1)} r, the squared norm of the truncated vacuum.
double weight_D0(const ModePoint& p);

/// D1_N(r) = 1 - (1 + N/cosh^2 r) tanh^{2N} r, the squared norm of the
/// truncated one-particle ket. D0 + D1 = C^2.
double weight_D1(const ModePoint& p);

/// Hyperbolic scalars of one ModePoint, computed once and shared by every
/// matrix and spectrum construction. All members stay bounded for any r >= 0:
/// powers of tanh r go through exp(k * log tanh r) rather than repeated
/// multiplication of a near-1 value, and 1/cosh^2 r is formed from exp(-r)
/// so nothing overflows on large-r sweeps.
struct ModeScalars {
  explicit ModeScalars(const ModePoint& p);

  int n_max;
  double r;
  double t;          // tanh r
  double log_t;      // ln tanh r, -inf at r = 0
  double inv_cosh;   // 1/cosh r
  double sech2;      // 1/cosh^2 r
  double sech4;      // 1/cosh^4 r
  double sinh2;      // sinh^2 r
  double c2;         // C_N(r)^2
  double d0;         // D0_N(r)
  double d1;         // D1_N(r)

  /// tanh^k r with the 0^0 = 1 convention, so the n = 0 term of every sum
  /// survives the r = 0 limit.
  double t_pow(long k) const;
};

}  // namespace rindler
