#include "omlab/radius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "omlab/eigen.hpp"
#include "omlab/errors.hpp"
#include "jacobi_kernel.hpp"

namespace omlab {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Evaluates extreme eigenvalues of Re(e^{i theta} m) into a reused buffer.
class RadiusScan {
 public:
  explicit RadiusScan(const ComplexMatrix& m)
      : m_(m), n_(m.rows()), buf_(n_ * n_) {}

  // (lambda_max, lambda_min) of H(theta) = (e^{i theta} m + e^{-i theta} m*)/2.
  std::pair<double, double> extremes(double theta) {
    const cplx w{std::cos(theta), std::sin(theta)};
    for (std::size_t i = 0; i < n_; ++i) {
      buf_[i * n_ + i] = cplx{(w * m_(i, i)).real(), 0.0};
      for (std::size_t j = i + 1; j < n_; ++j) {
        const cplx z = 0.5 * (w * m_(i, j) + std::conj(w * m_(j, i)));
        buf_[i * n_ + j] = z;
        buf_[j * n_ + i] = std::conj(z);
      }
    }
    const double conv = detail::jacobi_threshold(buffer_frobenius());
    if (!detail::jacobi_inplace(buf_.data(), n_, nullptr, conv)) {
      throw NoConvergence("numerical_radius: eigensolver did not converge");
    }
    double hi = buf_[0].real(), lo = buf_[0].real();
    for (std::size_t i = 1; i < n_; ++i) {
      hi = std::max(hi, buf_[i * n_ + i].real());
      lo = std::min(lo, buf_[i * n_ + i].real());
    }
    return {hi, lo};
  }

  double lambda_max(double theta) { return extremes(theta).first; }

 private:
  double buffer_frobenius() const {
    double s = 0.0;
    for (const cplx& z : buf_) s += std::norm(z);
    return std::sqrt(s);
  }

  const ComplexMatrix& m_;
  std::size_t n_;
  std::vector<cplx> buf_;
};

// Golden-section maximization on [a, b]; returns the best value seen once the
// bracket width drops below `width`.
double golden_max(RadiusScan& scan, double a, double b, double width) {
  constexpr double invphi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = scan.lambda_max(c);
  double fd = scan.lambda_max(d);
  while (b - a > width) {
    if (fc < fd) {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = scan.lambda_max(d);
    } else {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = scan.lambda_max(c);
    }
  }
  return std::max(fc, fd);
}

}  // namespace

double numerical_radius(const ComplexMatrix& m, int resolution) {
  if (!m.is_square()) throw DimensionError("numerical_radius requires a square matrix");
  if (resolution < 1) throw DimensionError("numerical_radius: resolution must be positive");

  RadiusScan scan(m);
  const std::size_t res = static_cast<std::size_t>(resolution);
  std::vector<double> f(res);
  const double step = two_pi / static_cast<double>(res);

  if (res % 2 == 0) {
    // Re(e^{i(theta+pi)} m) = -Re(e^{i theta} m), so one decomposition yields
    // f(theta) = lambda_max and f(theta + pi) = -lambda_min.
    for (std::size_t k = 0; k < res / 2; ++k) {
      const auto [hi, lo] = scan.extremes(step * static_cast<double>(k));
      f[k] = hi;
      f[k + res / 2] = -lo;
    }
  } else {
    for (std::size_t k = 0; k < res; ++k) {
      f[k] = scan.lambda_max(step * static_cast<double>(k));
    }
  }

  double best = *std::max_element(f.begin(), f.end());
  if (res < 3) {
    // Degenerate grid: refine the whole circle once around the best point.
    best = std::max(best, golden_max(scan, 0.0, two_pi, tols::theta_width));
    return best;
  }

  for (std::size_t k = 0; k < res; ++k) {
    const double prev = f[(k + res - 1) % res];
    const double next = f[(k + 1) % res];
    const bool local_max = f[k] >= prev && f[k] >= next && (f[k] > prev || f[k] > next);
    if (!local_max) continue;
    const double theta = step * static_cast<double>(k);
    best = std::max(best, golden_max(scan, theta - step, theta + step, tols::theta_width));
  }
  return best;
}

// Writing H(t) = Re(e^{it} T), its top eigenvalue is
//   p cos t + sqrt(rr cos^2 t + (rr + ss) sin^2 t)
// with p = (a+d)/2, rr = ((a-d)^2 + (b+c)^2)/4 and rr + ss the squared skew
// radius (b-c)^2/4. When ss <= 0 the maximum sits at t = 0; otherwise the
// stationary point x = cos t solves p^2 rr = ss^2 at the boundary x = 1.
double radius_2x2_real(double a, double b, double c, double d) {
  const double p = 0.5 * (a + d);
  const double rr = 0.25 * ((a - d) * (a - d) + (b + c) * (b + c));
  const double ss = 0.25 * (b - c) * (b - c) - rr;
  if (ss <= 0.0 || p * p * rr > ss * ss) return std::abs(p) + std::sqrt(rr);
  return std::sqrt((p * p + ss) * (rr + ss) / ss);
}

double spectral_radius_2x2_nonneg(double a, double b, double c, double d) {
  const double vals[4] = {a, b, c, d};
  const char* names[4] = {"a", "b", "c", "d"};
  for (int i = 0; i < 4; ++i) {
    if (!(vals[i] >= 0.0)) {
      throw NegativeEntry("spectral_radius_2x2_nonneg: entry " + std::string(names[i]) + " = " +
                          std::to_string(vals[i]) + " is negative");
    }
  }
  return 0.5 * ((a + d) + std::sqrt((a - d) * (a - d) + 4.0 * b * c));
}

double spectral_radius_hermitian(const ComplexMatrix& m) {
  const std::vector<double> vals = hermitian_eigenvalues(m);
  return std::max(std::abs(vals.front()), std::abs(vals.back()));
}

}  // namespace omlab
