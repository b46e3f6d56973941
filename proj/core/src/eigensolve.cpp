#include "rindlercorr/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace rindler {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  const std::size_t n = a.rows();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(s);
}

}  // namespace

EigenSolution jacobi_eigensystem(const Matrix& input, int max_sweeps) {
  if (!input.square()) {
    throw std::invalid_argument("jacobi_eigensystem: matrix must be square");
  }
  const std::size_t n = input.rows();
  Matrix a = input;
  Matrix v = Matrix::identity(n);

  const double norm = a.frobenius_norm();
  const double target = 1e-14 * std::max(norm, 1e-300);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;

        const double theta = 0.5 * (a(q, q) - a(p, p)) / apq;
        double tr = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) tr = -tr;
        const double c = 1.0 / std::sqrt(1.0 + tr * tr);
        const double s = tr * c;
        const double tau = s / (1.0 + c);

        const double delta = tr * apq;
        a(p, p) -= delta;
        a(q, q) += delta;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(p, k) = a(k, p);
          a(k, q) = akq + s * (akp - tau * akq);
          a(q, k) = a(k, q);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = vkp - s * (vkq + tau * vkp);
          v(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });

  EigenSolution out;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }

  // Residual certificate against the original matrix.
  double res = 0.0;
  std::vector<double> work(n);
  for (std::size_t k = 0; k < n; ++k) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += input(i, j) * out.vectors(j, k);
      acc -= out.values[k] * out.vectors(i, k);
      norm2 += acc * acc;
    }
    res = std::max(res, std::sqrt(norm2));
  }
  out.residual = res;
  return out;
}

namespace {

// Sturm sequence pivot floor; keeps the recurrence finite when a shift lands
// exactly on an eigenvalue of a leading principal minor.
double pivot_floor(std::span<const double> off) {
  double max_off2 = 0.0;
  for (double b : off) max_off2 = std::max(max_off2, b * b);
  const double safmin = std::numeric_limits<double>::min();
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(safmin, (safmin / eps) * std::max(max_off2, 1.0));
}

struct GershgorinBounds {
  double lo;
  double hi;
};

GershgorinBounds gershgorin(std::span<const double> diag,
                            std::span<const double> off) {
  const std::size_t n = diag.size();
  double lo = diag[0];
  double hi = diag[0];
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(off[i - 1]);
    if (i + 1 < n) radius += std::abs(off[i]);
    lo = std::min(lo, diag[i] - radius);
    hi = std::max(hi, diag[i] + radius);
  }
  return {lo, hi};
}

int count_below(std::span<const double> diag, std::span<const double> off,
                double x, double pivmin) {
  int count = 0;
  double d = 1.0;
  const std::size_t n = diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double sub = (i > 0) ? off[i - 1] * off[i - 1] / d : 0.0;
    d = diag[i] - x - sub;
    if (std::abs(d) < pivmin) d = (d < 0.0) ? -pivmin : pivmin;
    if (d < 0.0) ++count;
  }
  return count;
}

// k-th smallest eigenvalue by bisection of the Sturm count.
double eigenvalue_by_index(std::span<const double> diag,
                           std::span<const double> off, int k, double lo,
                           double hi, double pivmin) {
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  while (hi - lo > 1e-15 * scale) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (count_below(diag, off, mid, pivmin) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

int tridiag_count_below(std::span<const double> diag,
                        std::span<const double> off, double x) {
  if (diag.empty() || off.size() + 1 != diag.size()) {
    throw std::invalid_argument("tridiag: need diag size n, off size n-1");
  }
  return count_below(diag, off, x, pivot_floor(off));
}

std::vector<double> tridiag_eigenvalues(std::span<const double> diag,
                                        std::span<const double> off) {
  if (diag.empty() || off.size() + 1 != diag.size()) {
    throw std::invalid_argument("tridiag: need diag size n, off size n-1");
  }
  if (diag.size() == 1) return {diag[0]};
  const double pivmin = pivot_floor(off);
  const auto [glo, ghi] = gershgorin(diag, off);
  std::vector<double> values(diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) {
    values[k] = eigenvalue_by_index(diag, off, static_cast<int>(k), glo, ghi,
                                    pivmin);
  }
  return values;
}

double tridiag_negative_sum(std::span<const double> diag,
                            std::span<const double> off, double threshold) {
  if (diag.empty() || off.size() + 1 != diag.size()) {
    throw std::invalid_argument("tridiag: need diag size n, off size n-1");
  }
  if (diag.size() == 1) {
    return (diag[0] <= -threshold) ? -diag[0] : 0.0;
  }
  const double pivmin = pivot_floor(off);
  const auto [glo, ghi] = gershgorin(diag, off);
  if (glo >= -threshold) return 0.0;
  const int negatives = count_below(diag, off, -threshold, pivmin);
  double sum = 0.0;
  for (int k = 0; k < negatives; ++k) {
    sum -= eigenvalue_by_index(diag, off, k, glo, 0.0, pivmin);
  }
  return sum;
}

}  // namespace rindler
