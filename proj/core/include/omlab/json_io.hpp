#pragma once

#include <optional>
#include <string>
#include <vector>

#include "omlab/block.hpp"
#include "omlab/complex_matrix.hpp"
#include "omlab/sampling.hpp"
#include "omlab/sweep.hpp"

namespace omlab {

// Matrix JSON: {"rows": r, "cols": c, "data": [[[re, im], ...] per row, ...]}.
// Block JSON: either a full even-dimension Matrix JSON or an object
// {"t11": M, "t12": M, "t21": M, "t22": M}. Loaders throw ParseError with the
// offending field named.

struct LoadedInput {
  std::optional<ComplexMatrix> matrix;  // set for Matrix JSON
  std::optional<Block2x2> block;        // set for the four-block object form
};

ComplexMatrix matrix_from_json_text(const std::string& text);
LoadedInput load_input_file(const std::string& path);

// Deterministic writers: fixed field order, reals as %.17g (full round-trip
// precision), no whitespace dependence on locale or platform.
std::string format_real(double v);
std::string matrix_to_json(const ComplexMatrix& m);

std::string check_report_json(const std::vector<CheckRow>& rows, double tol,
                              const CheckParams& params);
std::string check_report_csv(const std::vector<CheckRow>& rows);

std::string sweep_report_json(const SweepReport& report);
std::string sweep_report_csv(const SweepReport& report);

std::string sharpness_report_json(std::string_view check_id, const SampleSpec& spec,
                                  std::size_t restarts, std::size_t iterations, double tol,
                                  const CheckParams& params, const SharpnessResult& result);

// Parses a sweep/check report back far enough to recover witness matrices.
std::vector<ComplexMatrix> witness_from_report_json(const std::string& text,
                                                    const std::string& check_id);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace omlab
