#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ramsey_lab/numeric.hpp"

namespace ramsey_lab {

enum class DensityModel { kGnp, kRegular, kBipartite };

std::string_view to_string(DensityModel model);
/// Accepts "gnp", "regular", "bipartite". Throws InvalidArgument otherwise.
DensityModel parse_density_model(std::string_view name);

/// A density question for one random model. `rho` is the hole-side fraction
/// of the vertex set and `c = 1 / rho` its reciprocal.
class DensityProblem {
 public:
  static DensityProblem from_rho(DensityModel model, Rational rho);
  static DensityProblem from_c(DensityModel model, Rational c);

  DensityModel model() const { return model_; }
  const Rational& rho() const { return rho_; }
  const Rational& c() const { return c_; }

 private:
  DensityProblem(DensityModel model, Rational rho, Rational c);

  DensityModel model_;
  Rational rho_;
  Rational c_;
};

/// x ln x with the continuous extension g(0) = 0.
double xlogx(double x);

/// Smallest d with (1 - 2 rho) ln(1 - 2 rho) + 2 rho ln rho + rho^2 d >= 0.
/// Requires 0 < rho < 1/2.
double gnp_min_density(const Rational& rho);
double gnp_min_density(double rho);

/// Smallest d with 2 (1 - rho) ln(1 - rho) + 2 rho ln rho + rho^2 d >= 0.
/// Requires 0 < rho < 1.
double bipartite_min_density(const Rational& rho);
double bipartite_min_density(double rho);

/// The regular-model exponent
///   f(a,c,d) = g(c) + g(d) + g((c-2)d) + g((c-1-a)d)/2 - g(c-2) - g(ad)
///              - g((c-2-a)d) - g((1-a)d)/2 - g(cd)/2,   g(x) = x ln x,
/// evaluated term by term in extended precision.
double regular_exponent(double a, double c, double d);

/// f(a, c, d) = k0 + k1 * d: the d ln d parts of f cancel, so f is affine in
/// d for fixed (a, c).
struct AffineExponent {
  double k0 = 0.0;
  double k1 = 0.0;
  double operator()(double d) const { return k0 + k1 * d; }
};

/// Cancellation-free evaluation of (k0, k1). Requires a in [0, 1], c > 3.
AffineExponent regular_exponent_decompose(double a, double c);

struct RegularSolveOptions {
  /// Number of grid intervals on [0, 1] (grid has `grid + 1` points).
  std::size_t grid = 100'000;
  /// Golden-section iterations around the grid argmax.
  int refine_iterations = 30;
  /// Relative slack of the minimality certificate.
  double tolerance = 1e-6;
  /// Worker cap for the grid sweep; 0 means "use RAMSEY_LAB_THREADS or 1".
  unsigned threads = 0;
};

struct DensitySolveResult {
  double d_min = 0.0;
  /// Value of a attaining the maximum per-a threshold.
  double worst_a = 0.0;
  /// max over the grid of f(a, c, d_min); must be <= 0 (up to rounding).
  double max_exponent = 0.0;
  /// max over the grid of f(a, c, (1 - tolerance) d_min); must be > 0.
  double max_exponent_below = 0.0;
  std::size_t grid_points = 0;
  double tolerance = 0.0;
};

/// Minimal d with f(a, c, d) <= 0 for every a in [0, 1]. Throws Infeasible if
/// some a has k1 >= 0 (f cannot be made non-positive there).
DensitySolveResult regular_min_density(const Rational& c,
                                       const RegularSolveOptions& options = {});

struct CertificateCheck {
  bool holds = false;
  double max_exponent = 0.0;
  double worst_a = 0.0;
};

/// Checks f(a, c, d) <= 0 on a uniform grid of `grid + 1` points on [0, 1]
/// plus golden-section refinement around the grid argmax.
CertificateCheck check_regular_certificate(const Rational& c, double d,
                                           std::size_t grid = 1'000'000,
                                           int refine_iterations = 30);

/// Number of perfect matchings on i points, i! / ((i/2)! 2^(i/2)).
BigInt matching_count(std::int64_t i);

/// Expected number X(a) of hole pairs (S, T), |S| = |T| = m, with
/// e(S, V \ (S u T)) = a d m, in the pairing model on N = c m buckets of d
/// points each.
Rational exact_first_moment(std::int64_t m, std::int64_t c, std::int64_t d,
                            const Rational& a);

}  // namespace ramsey_lab
