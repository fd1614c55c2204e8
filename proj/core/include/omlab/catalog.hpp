#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omlab/block.hpp"
#include "omlab/complex_matrix.hpp"
#include "omlab/constants.hpp"
#include "omlab/eigen.hpp"

namespace omlab {

// A pair of nonnegative functions with f(x) * g(x) = x, audited on a fixed
// grid at construction (throws InvalidFunctionPair on failure).
struct FunctionPair {
  RealFunction f, g;
  std::string label;

  static FunctionPair power(double t);  // f = x^t, g = x^(1-t), t in [0, 1]
  static FunctionPair audited(RealFunction f, RealFunction g, std::string label);
};

// Optional knobs for the parameterized checks.
struct CheckParams {
  double t = 0.5;                               // exponent for thm1 / circulant remark
  FunctionPair pair = FunctionPair::power(0.5); // pair for thm2
};

struct CheckResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool holds = false;
  double tol = tols::check;
};

enum class CheckKind {
  inequality,  // holds iff slack >= -tol * (1 + |rhs|)
  equality,    // holds iff |slack| <= tol * (1 + |rhs|)
  two_sided,   // lhs <= mid <= bound pair folded into holds
};

// Evaluation context shared by the checks. Caches the expensive spectral
// quantities so that one sample can feed the whole registry. Instances are
// cheap to build and meant for single-threaded use.
class CheckContext {
 public:
  // Plain view: only the whole-matrix checks apply.
  explicit CheckContext(ComplexMatrix full, double tol = tols::check, CheckParams params = {});
  // Block view: full = assemble(block), pair defaults to (t11, t12).
  explicit CheckContext(Block2x2 block, double tol = tols::check, CheckParams params = {});
  // Pair-only view for the two-matrix checks.
  CheckContext(ComplexMatrix first, ComplexMatrix second, double tol = tols::check,
               CheckParams params = {});

  bool has_full() const { return full_.has_value(); }
  bool has_block() const { return block_.has_value(); }
  bool has_pair() const { return pair_first_.has_value(); }

  const ComplexMatrix& full();
  const Block2x2& block();
  const CartesianBlocks& cart();
  const OperatorClass& cls();
  const ComplexMatrix& pair_first();
  const ComplexMatrix& pair_second();

  double omega_full();
  double norm_full();
  double omega_t11();
  double omega_t22();
  double omega_t12();
  double omega_sum_off();   // w(t12 + t21)
  double omega_diff_off();  // w(t12 - t21)
  double omega_antidiag();  // w([[0, t12], [t21, 0]])

  double tol() const { return tol_; }
  const CheckParams& params() const { return params_; }

 private:
  double tol_;
  CheckParams params_;
  std::optional<ComplexMatrix> full_;
  std::optional<Block2x2> block_;
  std::optional<ComplexMatrix> pair_first_, pair_second_;
  std::optional<CartesianBlocks> cart_;
  std::optional<OperatorClass> cls_;
  std::optional<double> omega_full_, norm_full_;
  std::optional<double> omega_t11_, omega_t22_, omega_t12_;
  std::optional<double> omega_sum_off_, omega_diff_off_, omega_antidiag_;
};

struct InequalityCheck {
  std::string id;
  std::string paper_location;
  CheckKind kind = CheckKind::inequality;
  bool expected_falsifiable = false;
  std::function<bool(CheckContext&)> applicable;
  std::function<CheckResult(CheckContext&)> evaluate;
};

// The fixed catalog, in stable order with stable ids.
const std::vector<InequalityCheck>& registry();

// Lookup by id; throws UnknownCheck.
const InequalityCheck& find_check(std::string_view id);

// Guarded evaluation; throws NotApplicable when the predicate rejects ctx.
CheckResult evaluate_check(const InequalityCheck& check, CheckContext& ctx);

}  // namespace omlab
