#include "omlab/sampling.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "omlab/block.hpp"
#include "omlab/eigen.hpp"
#include "omlab/errors.hpp"
#include "omlab/rng.hpp"

namespace omlab {

namespace {

constexpr struct {
  SampleClass k;
  std::string_view name;
} class_names[] = {
    {SampleClass::ginibre, "ginibre"},
    {SampleClass::hermitian, "hermitian"},
    {SampleClass::psd, "psd"},
    {SampleClass::positive_block, "positive_block"},
    {SampleClass::accretive, "accretive"},
    {SampleClass::accretive_dissipative, "accretive_dissipative"},
    {SampleClass::normal, "normal"},
    {SampleClass::square_zero, "square_zero"},
};

ComplexMatrix ginibre(Rng& rng, std::size_t d, double scale) {
  ComplexMatrix g(d, d);
  for (auto& z : g.entries()) z = scale * rng.cgauss();
  return g;
}

ComplexMatrix hermitian_sample(Rng& rng, std::size_t d, double scale) {
  return hermitian_part(ginibre(rng, d, scale));
}

ComplexMatrix psd_sample(Rng& rng, std::size_t d, double scale) {
  const ComplexMatrix g = ginibre(rng, d, scale);
  return g * adjoint(g);
}

// Modified Gram-Schmidt with one reorthogonalization pass; columns that
// collapse are replaced by unit coordinate vectors (measure-zero fallback).
ComplexMatrix orthonormalize(ComplexMatrix m) {
  const std::size_t d = m.rows();
  for (std::size_t j = 0; j < d; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx proj{0.0, 0.0};
        for (std::size_t i = 0; i < d; ++i) proj += std::conj(m(i, k)) * m(i, j);
        for (std::size_t i = 0; i < d; ++i) m(i, j) -= proj * m(i, k);
      }
    }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < d; ++i) norm2 += std::norm(m(i, j));
    if (norm2 < 1e-24) {
      for (std::size_t i = 0; i < d; ++i) m(i, j) = (i == j % d) ? 1.0 : 0.0;
      continue;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (std::size_t i = 0; i < d; ++i) m(i, j) *= inv;
  }
  return m;
}

// y <- y - x <y, x> / <x, x>, applied twice so <y, x> lands at rounding level.
void orthogonalize_against(std::vector<cplx>& y, const std::vector<cplx>& x) {
  double xx = 0.0;
  for (const cplx& z : x) xx += std::norm(z);
  if (xx == 0.0) return;
  for (int pass = 0; pass < 2; ++pass) {
    cplx xy{0.0, 0.0};  // x* y
    for (std::size_t i = 0; i < x.size(); ++i) xy += std::conj(x[i]) * y[i];
    const cplx coef = xy / xx;
    for (std::size_t i = 0; i < x.size(); ++i) y[i] -= coef * x[i];
  }
}

ComplexMatrix outer(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  ComplexMatrix m(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  }
  return m;
}

// Search state: the materialized matrix plus the generating parameters for
// the two classes that are perturbed in parameter space.
struct SearchState {
  ComplexMatrix m;
  std::optional<ComplexMatrix> u;  // normal: unitary factor
  std::vector<cplx> lambda;        // normal: eigenvalues
  std::vector<cplx> x, y;          // square_zero: rank-one factors
};

SearchState make_state(SampleClass klass, std::size_t d, double scale, Rng& rng) {
  switch (klass) {
    case SampleClass::ginibre:
      return {ginibre(rng, d, scale), {}, {}, {}, {}};
    case SampleClass::hermitian:
      return {hermitian_sample(rng, d, scale), {}, {}, {}, {}};
    case SampleClass::psd:
    case SampleClass::positive_block:
      return {psd_sample(rng, d, scale), {}, {}, {}, {}};
    case SampleClass::accretive: {
      const ComplexMatrix re = psd_sample(rng, d, scale);
      const ComplexMatrix im = hermitian_sample(rng, d, scale);
      return {re + cplx{0.0, 1.0} * im, {}, {}, {}, {}};
    }
    case SampleClass::accretive_dissipative: {
      const ComplexMatrix re = psd_sample(rng, d, scale);
      const ComplexMatrix im = psd_sample(rng, d, scale);
      return {re + cplx{0.0, 1.0} * im, {}, {}, {}, {}};
    }
    case SampleClass::normal: {
      SearchState s{ComplexMatrix(d, d), orthonormalize(ginibre(rng, d, 1.0)), {}, {}, {}};
      s.lambda.resize(d);
      for (auto& z : s.lambda) z = scale * rng.cgauss();
      ComplexMatrix w = *s.u;
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) w(i, j) *= s.lambda[j];
      }
      s.m = w * adjoint(*s.u);
      return s;
    }
    case SampleClass::square_zero: {
      SearchState s{ComplexMatrix(d, d), {}, {}, {}, {}};
      s.x.resize(d);
      s.y.resize(d);
      for (auto& z : s.x) z = scale * rng.cgauss();
      for (auto& z : s.y) z = scale * rng.cgauss();
      orthogonalize_against(s.y, s.x);
      s.m = outer(s.x, s.y);
      return s;
    }
  }
  throw Error("sample: unknown class");
}

ComplexMatrix project_matrix(const ComplexMatrix& m, SampleClass klass) {
  switch (klass) {
    case SampleClass::ginibre:
      return m;
    case SampleClass::hermitian:
      return hermitian_part(m);
    case SampleClass::psd:
    case SampleClass::positive_block:
      return psd_projection(m);
    case SampleClass::accretive:
      return psd_projection(hermitian_part(m)) + cplx{0.0, 1.0} * skew_part_over_i(m);
    case SampleClass::accretive_dissipative:
      return psd_projection(hermitian_part(m)) +
             cplx{0.0, 1.0} * psd_projection(skew_part_over_i(m));
    default:
      throw Error("project_matrix: class is perturbed in parameter space");
  }
}

SearchState perturb(const SearchState& s, SampleClass klass, double sigma, Rng& rng) {
  const std::size_t d = s.m.rows();
  switch (klass) {
    case SampleClass::normal: {
      SearchState out = s;
      ComplexMatrix u = *s.u;
      for (auto& z : u.entries()) z += sigma * rng.cgauss();
      out.u = orthonormalize(std::move(u));
      for (auto& z : out.lambda) z += sigma * rng.cgauss();
      ComplexMatrix w = *out.u;
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) w(i, j) *= out.lambda[j];
      }
      out.m = w * adjoint(*out.u);
      return out;
    }
    case SampleClass::square_zero: {
      SearchState out = s;
      for (auto& z : out.x) z += sigma * rng.cgauss();
      for (auto& z : out.y) z += sigma * rng.cgauss();
      orthogonalize_against(out.y, out.x);
      out.m = outer(out.x, out.y);
      return out;
    }
    default: {
      ComplexMatrix m = s.m;
      for (auto& z : m.entries()) z += sigma * rng.cgauss();
      return {project_matrix(m, klass), {}, {}, {}, {}};
    }
  }
}

}  // namespace

std::string_view to_string(SampleClass k) {
  for (const auto& e : class_names) {
    if (e.k == k) return e.name;
  }
  return "unknown";
}

std::optional<SampleClass> sample_class_from_string(std::string_view name) {
  for (const auto& e : class_names) {
    if (e.name == name) return e.k;
  }
  return std::nullopt;
}

ComplexMatrix sample(const SampleSpec& spec) {
  if (spec.block_dim == 0) throw DimensionError("sample: block_dim must be positive");
  if (!(spec.scale > 0.0) || !std::isfinite(spec.scale)) {
    throw Error("sample: scale must be positive and finite");
  }
  Rng rng(derive_seed(spec.seed, static_cast<std::uint64_t>(spec.klass) + 1));
  return make_state(spec.klass, 2 * spec.block_dim, spec.scale, rng).m;
}

SharpnessResult sharpness_search(std::string_view check_id, const SampleSpec& spec,
                                 std::size_t restarts, std::size_t iterations, double tol,
                                 CheckParams params) {
  const InequalityCheck& check = find_check(check_id);

  const auto eval = [&](const ComplexMatrix& m) -> std::optional<CheckResult> {
    CheckContext ctx(partition(m), tol, params);
    if (!check.applicable(ctx)) return std::nullopt;
    return check.evaluate(ctx);
  };

  const double sigma0 = 0.5 * spec.scale;
  const double sigma_end = 1e-4 * spec.scale;
  const double rho = iterations > 1
                         ? std::pow(sigma_end / sigma0, 1.0 / static_cast<double>(iterations - 1))
                         : 1.0;

  std::optional<SharpnessResult> best;
  const std::size_t rounds = std::max<std::size_t>(restarts, 1);
  for (std::size_t r = 0; r < rounds; ++r) {
    SampleSpec start = spec;
    if (r > 0) start.seed = derive_seed(spec.seed, r);
    Rng stream(derive_seed(spec.seed, r, 0x5eed));
    Rng init(derive_seed(start.seed, static_cast<std::uint64_t>(spec.klass) + 1));
    SearchState state = make_state(spec.klass, 2 * spec.block_dim, spec.scale, init);

    auto current = eval(state.m);
    if (!current) continue;

    if (restarts > 0) {
      double sigma = sigma0;
      for (std::size_t k = 0; k < iterations; ++k, sigma *= rho) {
        SearchState cand = perturb(state, spec.klass, sigma, stream);
        const auto res = eval(cand.m);
        if (res && res->slack < current->slack) {
          state = std::move(cand);
          current = res;
        }
      }
    }

    if (!best || current->slack < best->result.slack) {
      best = SharpnessResult{state.m, *current, r};
    }
  }

  if (!best) {
    throw NotApplicable("sharpness_search: check " + std::string(check_id) +
                        " never applicable for class " + std::string(to_string(spec.klass)));
  }
  return *best;
}

}  // namespace omlab
