#include "omlab/catalog.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "omlab/errors.hpp"
#include "omlab/radius.hpp"

namespace omlab {

namespace {

const double audit_grid[] = {0.0, 1e-3, 1e-1, 1.0, 10.0, 1e3};

CheckResult ineq_result(double lhs, double rhs, double tol) {
  CheckResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol = tol;
  r.holds = r.slack >= -tols::rel(tol, rhs);
  return r;
}

CheckResult eq_result(double lhs, double rhs, double tol, bool extra_ok = true) {
  CheckResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.tol = tol;
  r.holds = std::abs(r.slack) <= tols::rel(tol, rhs) && extra_ok;
  return r;
}

// |x|^{2s} as a function of the Gram matrix x* x (psd), avoiding the
// intermediate square root: (x* x)^s.
ComplexMatrix abs_power2(const ComplexMatrix& x, double s) {
  return spectral_function(adjoint(x) * x, [s](double v) { return std::pow(v, s); });
}

// |x*|^{2s} = (x x*)^s.
ComplexMatrix absadj_power2(const ComplexMatrix& x, double s) {
  return spectral_function(x * adjoint(x), [s](double v) { return std::pow(v, s); });
}

}  // namespace

FunctionPair FunctionPair::power(double t) {
  if (t < 0.0 || t > 1.0) {
    throw InvalidFunctionPair("FunctionPair::power: t = " + std::to_string(t) +
                              " outside [0, 1]");
  }
  return audited([t](double x) { return std::pow(x, t); },
                 [t](double x) { return std::pow(x, 1.0 - t); },
                 "power(" + std::to_string(t) + ")");
}

FunctionPair FunctionPair::audited(RealFunction f, RealFunction g, std::string label) {
  for (double x : audit_grid) {
    const double fx = f(x), gx = g(x);
    if (!std::isfinite(fx) || !std::isfinite(gx) || fx < 0.0 || gx < 0.0 ||
        std::abs(fx * gx - x) > 1e-10 * (1.0 + x)) {
      throw InvalidFunctionPair("FunctionPair '" + label + "' fails f(x) g(x) = x at x = " +
                                std::to_string(x));
    }
  }
  return FunctionPair{std::move(f), std::move(g), std::move(label)};
}

CheckContext::CheckContext(ComplexMatrix full, double tol, CheckParams params)
    : tol_(tol), params_(std::move(params)), full_(std::move(full)) {
  if (!full_->is_square()) throw DimensionError("CheckContext requires a square matrix");
}

CheckContext::CheckContext(Block2x2 block, double tol, CheckParams params)
    : tol_(tol), params_(std::move(params)), block_(std::move(block)) {
  full_ = assemble(*block_);
  pair_first_ = block_->t11;
  pair_second_ = block_->t12;
}

CheckContext::CheckContext(ComplexMatrix first, ComplexMatrix second, double tol,
                           CheckParams params)
    : tol_(tol),
      params_(std::move(params)),
      pair_first_(std::move(first)),
      pair_second_(std::move(second)) {
  if (!pair_first_->is_square() || pair_first_->rows() != pair_second_->rows() ||
      !pair_second_->is_square()) {
    throw DimensionError("CheckContext pair must be square matrices of equal dimension");
  }
}

const ComplexMatrix& CheckContext::full() {
  if (!full_) throw std::logic_error("CheckContext: no full matrix view");
  return *full_;
}

const Block2x2& CheckContext::block() {
  if (!block_) throw std::logic_error("CheckContext: no block view");
  return *block_;
}

const CartesianBlocks& CheckContext::cart() {
  if (!cart_) cart_ = cartesian(block());
  return *cart_;
}

const OperatorClass& CheckContext::cls() {
  if (!cls_) cls_ = classify(full(), tol_);
  return *cls_;
}

const ComplexMatrix& CheckContext::pair_first() {
  if (!pair_first_) throw std::logic_error("CheckContext: no pair view");
  return *pair_first_;
}

const ComplexMatrix& CheckContext::pair_second() {
  if (!pair_second_) throw std::logic_error("CheckContext: no pair view");
  return *pair_second_;
}

double CheckContext::omega_full() {
  if (!omega_full_) omega_full_ = numerical_radius(full());
  return *omega_full_;
}

double CheckContext::norm_full() {
  if (!norm_full_) norm_full_ = operator_norm(full());
  return *norm_full_;
}

double CheckContext::omega_t11() {
  if (!omega_t11_) omega_t11_ = numerical_radius(block().t11);
  return *omega_t11_;
}

double CheckContext::omega_t22() {
  if (!omega_t22_) omega_t22_ = numerical_radius(block().t22);
  return *omega_t22_;
}

double CheckContext::omega_t12() {
  if (!omega_t12_) omega_t12_ = numerical_radius(block().t12);
  return *omega_t12_;
}

double CheckContext::omega_sum_off() {
  if (!omega_sum_off_) omega_sum_off_ = numerical_radius(block().t12 + block().t21);
  return *omega_sum_off_;
}

double CheckContext::omega_diff_off() {
  if (!omega_diff_off_) omega_diff_off_ = numerical_radius(block().t12 - block().t21);
  return *omega_diff_off_;
}

double CheckContext::omega_antidiag() {
  if (!omega_antidiag_) {
    const std::size_t n = block().block_dim();
    ComplexMatrix z(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        z(i, n + j) = block().t12(i, j);
        z(n + i, j) = block().t21(i, j);
      }
    }
    omega_antidiag_ = numerical_radius(z);
  }
  return *omega_antidiag_;
}

namespace {

bool needs_full(CheckContext& ctx) { return ctx.has_full(); }
bool needs_block(CheckContext& ctx) { return ctx.has_block(); }
bool needs_pair(CheckContext& ctx) { return ctx.has_pair(); }
bool needs_positive(CheckContext& ctx) { return ctx.has_block() && ctx.cls().positive; }
bool needs_ad(CheckContext& ctx) {
  return ctx.has_block() && ctx.cls().accretive_dissipative;
}

std::vector<InequalityCheck> build_registry() {
  std::vector<InequalityCheck> v;

  v.push_back({"norm_radius_equiv",
               "equivalence ||T||/2 <= w(T) <= ||T||",
               CheckKind::two_sided,
               false,
               needs_full,
               [](CheckContext& c) {
                 const double nrm = c.norm_full();
                 const double w = c.omega_full();
                 CheckResult r = ineq_result(0.5 * nrm, w, c.tol());
                 r.holds = r.holds && w <= nrm + tols::rel(c.tol(), nrm);
                 return r;
               }});

  v.push_back({"real_imag",
               "max(||Re T||, ||Im T||) <= w(T)",
               CheckKind::inequality,
               false,
               needs_full,
               [](CheckContext& c) {
                 const double lhs = std::max(operator_norm(hermitian_part(c.full())),
                                             operator_norm(skew_part_over_i(c.full())));
                 return ineq_result(lhs, c.omega_full(), c.tol());
               }});

  v.push_back({"shebr_lower",
               "max(w(T11), w(T22), w(T12+T21)/2, w(T12-T21)/2) <= w(T)",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const double lhs =
                     std::max({c.omega_t11(), c.omega_t22(), 0.5 * c.omega_sum_off(),
                               0.5 * c.omega_diff_off()});
                 return ineq_result(lhs, c.omega_full(), c.tol());
               }});

  v.push_back({"shebr_upper",
               "w(T) <= max(w(T11), w(T22)) + (w(T12+T21) + w(T12-T21))/2",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const double rhs = std::max(c.omega_t11(), c.omega_t22()) +
                                    0.5 * (c.omega_sum_off() + c.omega_diff_off());
                 return ineq_result(c.omega_full(), rhs, c.tol());
               }});

  v.push_back({"pinching",
               "max(w(diag part), w(antidiag part)) <= w(T)",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 // w of the diagonal compression diag(T11, T22) is exactly
                 // max(w(T11), w(T22)): the numerical range of a direct sum is
                 // the convex hull of the summands' ranges.
                 const double lhs = std::max(std::max(c.omega_t11(), c.omega_t22()),
                                             c.omega_antidiag());
                 return ineq_result(lhs, c.omega_full(), c.tol());
               }});

  v.push_back({"lemma04",
               "||A12|| <= w(T) for the Cartesian block A12",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 return ineq_result(operator_norm(c.cart().a12), c.omega_full(), c.tol());
               }});

  v.push_back({"thm06",
               "(1/4) || |T12|^2 + |T21*|^2 || <= w(T)^2",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const ComplexMatrix s = adjoint(c.block().t12) * c.block().t12 +
                                         c.block().t21 * adjoint(c.block().t21);
                 const double w = c.omega_full();
                 return ineq_result(0.25 * operator_norm(s), w * w, c.tol());
               }});

  v.push_back({"thm08",
               "|| |T12|^2 + |T21*|^2 || <= w(T)^2 for accretive-dissipative T",
               CheckKind::inequality,
               false,
               needs_ad,
               [](CheckContext& c) {
                 const ComplexMatrix s = adjoint(c.block().t12) * c.block().t12 +
                                         c.block().t21 * adjoint(c.block().t21);
                 const double w = c.omega_full();
                 return ineq_result(operator_norm(s), w * w, c.tol());
               }});

  v.push_back({"eq8",
               "2 ||A12|| <= ||T|| for positive T",
               CheckKind::inequality,
               false,
               needs_positive,
               [](CheckContext& c) {
                 return ineq_result(2.0 * operator_norm(c.cart().a12), c.norm_full(), c.tol());
               }});

  v.push_back({"eq09",
               "||T|| <= ||A11|| + ||A22|| for positive T",
               CheckKind::inequality,
               false,
               needs_positive,
               [](CheckContext& c) {
                 const double rhs =
                     operator_norm(c.cart().a11) + operator_norm(c.cart().a22);
                 return ineq_result(c.norm_full(), rhs, c.tol());
               }});

  v.push_back({"hiro",
               "||T|| <= ||T11 + T22|| for positive T with Hermitian off-diagonal block",
               CheckKind::inequality,
               false,
               [](CheckContext& c) {
                 return c.has_block() && c.cls().positive &&
                        is_hermitian(c.block().t12, tols::kernel);
               },
               [](CheckContext& c) {
                 const double rhs = operator_norm(c.block().t11 + c.block().t22);
                 return ineq_result(c.norm_full(), rhs, c.tol());
               }});

  v.push_back({"w12_arith",
               "w(T12) <= (1/2) ||A11 + A22 + B11 + B22|| for accretive-dissipative T",
               CheckKind::inequality,
               false,
               needs_ad,
               [](CheckContext& c) {
                 const auto& k = c.cart();
                 const double rhs = 0.5 * operator_norm(k.a11 + k.a22 + k.b11 + k.b22);
                 return ineq_result(c.omega_t12(), rhs, c.tol());
               }});

  v.push_back({"w12_geom",
               "w(T12) <= sqrt(||A11 + B11|| ||A22 + B22||) for accretive-dissipative T",
               CheckKind::inequality,
               false,
               needs_ad,
               [](CheckContext& c) {
                 const auto& k = c.cart();
                 const double rhs = std::sqrt(operator_norm(k.a11 + k.b11) *
                                              operator_norm(k.a22 + k.b22));
                 return ineq_result(c.omega_t12(), rhs, c.tol());
               }});

  v.push_back({"alpha_beta",
               "max(alpha, beta) <= w(T) from the Cartesian block data",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const auto& k = c.cart();
                 const auto side = [](const ComplexMatrix& d1, const ComplexMatrix& off,
                                      const ComplexMatrix& d2) {
                   const ComplexMatrix offadj = adjoint(off);
                   return std::max({operator_norm(d1), operator_norm(d2),
                                    0.5 * operator_norm(off + offadj),
                                    0.5 * operator_norm(off - offadj)});
                 };
                 const double alpha = side(k.a11, k.a12, k.a22);
                 const double beta = side(k.b11, k.b12, k.b22);
                 return ineq_result(std::max(alpha, beta), c.omega_full(), c.tol());
               }});

  v.push_back({"cor_2max",
               "2 max(||A12||, ||B12||) <= w(T) for accretive-dissipative T",
               CheckKind::inequality,
               false,
               needs_ad,
               [](CheckContext& c) {
                 const double lhs = 2.0 * std::max(operator_norm(c.cart().a12),
                                                   operator_norm(c.cart().b12));
                 return ineq_result(lhs, c.omega_full(), c.tol());
               }});

  v.push_back({"spectral_norm_bound",
               "||T|| <= r2(||A11||, ||A12||, ||A12||, ||A22||) + r2(||B11||, ...)",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const auto& k = c.cart();
                 const double ra = spectral_radius_2x2_nonneg(
                     operator_norm(k.a11), operator_norm(k.a12), operator_norm(k.a12),
                     operator_norm(k.a22));
                 const double rb = spectral_radius_2x2_nonneg(
                     operator_norm(k.b11), operator_norm(k.b12), operator_norm(k.b12),
                     operator_norm(k.b22));
                 return ineq_result(c.norm_full(), ra + rb, c.tol());
               }});

  v.push_back({"eqr",
               "r(T) <= r2(||T11||, ||T12||, ||T21||, ||T22||) for Hermitian T",
               CheckKind::inequality,
               false,
               [](CheckContext& c) { return c.has_block() && c.cls().hermitian; },
               [](CheckContext& c) {
                 const auto& b = c.block();
                 const double rhs = spectral_radius_2x2_nonneg(
                     operator_norm(b.t11), operator_norm(b.t12), operator_norm(b.t21),
                     operator_norm(b.t22));
                 return ineq_result(spectral_radius_hermitian(c.full()), rhs, c.tol());
               }});

  v.push_back({"thm1",
               "||T|| <= (1/2) max over rows of 2t-power column sums plus the (1-t) adjoint term",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const double t = c.params().t;
                 if (t < 0.0 || t > 1.0) {
                   throw NotApplicable("thm1: exponent t must lie in [0, 1]");
                 }
                 const auto& b = c.block();
                 const ComplexMatrix p1 = abs_power2(b.t11, t);
                 const ComplexMatrix p2 = abs_power2(b.t12, t);
                 const ComplexMatrix p3 = abs_power2(b.t21, t);
                 const ComplexMatrix p4 = abs_power2(b.t22, t);
                 const double s = 1.0 - t;
                 const ComplexMatrix q1 = absadj_power2(b.t11, s);
                 const ComplexMatrix q2 = absadj_power2(b.t12, s);
                 const ComplexMatrix q3 = absadj_power2(b.t21, s);
                 const ComplexMatrix q4 = absadj_power2(b.t22, s);
                 // Column pairs for the 2t part, row pairs for the adjoint
                 // part: |[[O,T2],[T3,O]]|^2 = |T3|^2 (+) |T2|^2 while the
                 // adjoint square flips to |T2*|^2 (+) |T3*|^2.
                 const double rhs =
                     0.5 * std::max(operator_norm(p1 + p3), operator_norm(p4 + p2)) +
                     0.5 * std::max(operator_norm(q1 + q2), operator_norm(q4 + q3));
                 return ineq_result(c.norm_full(), rhs, c.tol());
               }});

  v.push_back({"thm2",
               "||T|| <= (1/2) sum of f^2/g^2 compressions over the four blocks",
               CheckKind::inequality,
               false,
               needs_block,
               [](CheckContext& c) {
                 const auto& b = c.block();
                 const auto& fp = c.params().pair;
                 const auto f2 = [&fp](const ComplexMatrix& x) {
                   return spectral_function(matrix_abs(x), [&fp](double v) {
                     const double y = fp.f(v);
                     return y * y;
                   });
                 };
                 const auto g2 = [&fp](const ComplexMatrix& x) {
                   return spectral_function(matrix_abs(adjoint(x)), [&fp](double v) {
                     const double y = fp.g(v);
                     return y * y;
                   });
                 };
                 const double rhs = 0.5 * (operator_norm(f2(b.t11) + f2(b.t21)) +
                                           operator_norm(g2(b.t11) + g2(b.t12)) +
                                           operator_norm(f2(b.t12) + f2(b.t22)) +
                                           operator_norm(g2(b.t21) + g2(b.t22)));
                 return ineq_result(c.norm_full(), rhs, c.tol());
               }});

  v.push_back({"circulant_eq",
               "max(||T1 + T2||, ||T1 - T2||) = ||[[T1, T2], [T2, T1]]|| plus power-mean bound",
               CheckKind::equality,
               false,
               needs_pair,
               [](CheckContext& c) {
                 const ComplexMatrix& p = c.pair_first();
                 const ComplexMatrix& q = c.pair_second();
                 const double lhs =
                     std::max(operator_norm(p + q), operator_norm(p - q));
                 const ComplexMatrix circ = assemble(Block2x2(p, q, q, p));
                 const double rhs = operator_norm(circ);
                 const double t = c.params().t;
                 const double ub =
                     0.5 * (operator_norm(abs_power2(p, t) + abs_power2(q, t)) +
                            operator_norm(absadj_power2(p, 1.0 - t) +
                                          absadj_power2(q, 1.0 - t)));
                 const bool upper_ok = lhs <= ub + tols::rel(c.tol(), ub);
                 return eq_result(lhs, rhs, c.tol(), upper_ok);
               }});

  v.push_back({"probe_false_triangle_abs",
               "probe: ||T1 + T2|| <= || |T1| + |T2| || (false in general)",
               CheckKind::inequality,
               true,
               needs_pair,
               [](CheckContext& c) {
                 const double lhs = operator_norm(c.pair_first() + c.pair_second());
                 const double rhs =
                     operator_norm(matrix_abs(c.pair_first()) + matrix_abs(c.pair_second()));
                 return ineq_result(lhs, rhs, c.tol());
               }});

  v.push_back({"ad_norm_bound",
               "||T|| <= sqrt((||A11|| + ||A22||)^2 + (||B11|| + ||B22||)^2) for "
               "accretive-dissipative T",
               CheckKind::inequality,
               false,
               needs_ad,
               [](CheckContext& c) {
                 const auto& k = c.cart();
                 const double a = operator_norm(k.a11) + operator_norm(k.a22);
                 const double b = operator_norm(k.b11) + operator_norm(k.b22);
                 return ineq_result(c.norm_full(), std::sqrt(a * a + b * b), c.tol());
               }});

  return v;
}

}  // namespace

const std::vector<InequalityCheck>& registry() {
  static const std::vector<InequalityCheck> checks = build_registry();
  return checks;
}

const InequalityCheck& find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return c;
  }
  throw UnknownCheck("unknown check id: " + std::string(id));
}

CheckResult evaluate_check(const InequalityCheck& check, CheckContext& ctx) {
  if (!check.applicable(ctx)) {
    throw NotApplicable("check " + check.id + " is not applicable to this input");
  }
  return check.evaluate(ctx);
}

}  // namespace omlab
