#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "omlab/catalog.hpp"
#include "omlab/complex_matrix.hpp"

namespace omlab {

enum class SampleClass {
  ginibre,
  hermitian,
  psd,
  positive_block,
  accretive,
  accretive_dissipative,
  normal,
  square_zero,
};

std::string_view to_string(SampleClass k);
std::optional<SampleClass> sample_class_from_string(std::string_view name);

// A sample request. The emitted matrix has dimension 2 * block_dim so that it
// always partitions into a Block2x2 with blocks of size block_dim.
struct SampleSpec {
  SampleClass klass = SampleClass::ginibre;
  std::size_t block_dim = 1;
  double scale = 1.0;
  std::uint64_t seed = 0;
};

// Deterministic: the result is a pure function of the spec fields.
//   ginibre               iid standard complex normal entries (times scale)
//   hermitian             (G + G*) / 2
//   psd, positive_block   G G*
//   accretive             psd + i * hermitian
//   accretive_dissipative psd + i * psd (independent draws)
//   normal                U diag(lambda) U*, U from Gram-Schmidt QR of a ginibre
//   square_zero           x y* with <y, x> = 0, so the square vanishes
ComplexMatrix sample(const SampleSpec& spec);

struct SharpnessResult {
  ComplexMatrix witness;  // full 2n x 2n matrix, applicable to the check
  CheckResult result;     // evaluation of the check on the witness
  std::size_t restart;    // restart index that produced it
};

// Random-restart hill descent on the slack of one registry check. Proposals
// are entrywise Gaussian perturbations with step size annealed geometrically
// from 0.5 * scale down to 1e-4 * scale, projected back into the sample class
// (normal and square_zero classes are perturbed in their parameter space
// instead). A proposal is kept only when the check stays applicable and the
// slack strictly decreases. Each restart derives its own generator stream
// from (seed, restart index); results are bit-identical for equal inputs.
//
// restarts == 0 evaluates the unperturbed seed sample. Throws UnknownCheck
// for a bad id and NotApplicable when no restart produces an applicable
// starting sample.
SharpnessResult sharpness_search(std::string_view check_id, const SampleSpec& spec,
                                 std::size_t restarts, std::size_t iterations,
                                 double tol = tols::check, CheckParams params = {});

}  // namespace omlab
