#include "ramsey_lab/threshold_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/random_models.hpp"

namespace ramsey_lab {
namespace {

// 50 decimal digits: the nine terms reach ~1e13 at the published (c, d) while
// their sum can be O(1).
using Wide = boost::multiprecision::cpp_bin_float_50;

Wide xlogx_ext(const Wide& x) { return x == 0 ? Wide(0) : Wide(x * log(x)); }

BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

struct ArgMax {
  double value = -HUGE_VAL;
  double a = 0.0;
  std::size_t index = 0;
};

// Max of h over a_i = i / grid. Chunks are reduced in index order, so ties go
// to the smaller a regardless of the worker count.
template <typename Fn>
ArgMax grid_argmax(std::size_t grid, unsigned threads, const Fn& h) {
  const std::size_t points = grid + 1;
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(points / 1024 + 1)));
  std::vector<ArgMax> partial(threads);
  auto sweep = [&](unsigned worker) {
    const std::size_t begin = points * worker / threads;
    const std::size_t end = points * (worker + 1) / threads;
    ArgMax best;
    for (std::size_t i = begin; i < end; ++i) {
      const double a = static_cast<double>(i) / static_cast<double>(grid);
      const double v = h(a);
      if (v > best.value) best = {v, a, i};
    }
    partial[worker] = best;
  };
  if (threads == 1) {
    sweep(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) workers.emplace_back(sweep, w);
  }
  ArgMax best;
  for (const auto& p : partial) {
    if (p.value > best.value) best = p;
  }
  return best;
}

// Golden-section maximization of h on [lo, hi]; returns the best point seen.
template <typename Fn>
ArgMax golden_refine(double lo, double hi, int iterations, const Fn& h) {
  constexpr double kInvPhi = 0.6180339887498949;
  ArgMax best{h(lo), lo, 0};
  if (const double v = h(hi); v > best.value) best = {v, hi, 0};
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = h(x1);
  double f2 = h(x2);
  for (int it = 0; it < iterations; ++it) {
    if (f1 > best.value) best = {f1, x1, 0};
    if (f2 > best.value) best = {f2, x2, 0};
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = h(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = h(x1);
    }
  }
  if (f1 > best.value) best = {f1, x1, 0};
  if (f2 > best.value) best = {f2, x2, 0};
  return best;
}

void require_regular_c(double c) {
  if (!(c > 3.0) || !std::isfinite(c)) {
    throw InvalidArgument("regular model requires finite c > 3");
  }
}

}  // namespace

std::string_view to_string(DensityModel model) {
  switch (model) {
    case DensityModel::kGnp: return "gnp";
    case DensityModel::kRegular: return "regular";
    case DensityModel::kBipartite: return "bipartite";
  }
  return "unknown";
}

DensityModel parse_density_model(std::string_view name) {
  if (name == "gnp") return DensityModel::kGnp;
  if (name == "regular") return DensityModel::kRegular;
  if (name == "bipartite") return DensityModel::kBipartite;
  throw InvalidArgument("unknown model '" + std::string(name) +
                        "' (expected gnp, regular or bipartite)");
}

DensityProblem::DensityProblem(DensityModel model, Rational rho, Rational c)
    : model_(model), rho_(std::move(rho)), c_(std::move(c)) {
  switch (model_) {
    case DensityModel::kGnp:
      if (rho_ <= 0 || rho_ >= Rational(1, 2)) {
        throw InvalidArgument("gnp model requires 0 < rho < 1/2");
      }
      break;
    case DensityModel::kBipartite:
      if (rho_ <= 0 || rho_ >= 1) {
        throw InvalidArgument("bipartite model requires 0 < rho < 1");
      }
      break;
    case DensityModel::kRegular:
      if (c_ <= 3) throw InvalidArgument("regular model requires c > 3");
      break;
  }
}

DensityProblem DensityProblem::from_rho(DensityModel model, Rational rho) {
  if (rho <= 0) throw InvalidArgument("rho must be positive");
  Rational c = Rational(1) / rho;
  return DensityProblem(model, std::move(rho), std::move(c));
}

DensityProblem DensityProblem::from_c(DensityModel model, Rational c) {
  if (c <= 0) throw InvalidArgument("c must be positive");
  Rational rho = Rational(1) / c;
  return DensityProblem(model, std::move(rho), std::move(c));
}

double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }

double gnp_min_density(double rho) {
  if (!(rho > 0.0 && rho < 0.5)) throw InvalidArgument("gnp_min_density: need 0 < rho < 1/2");
  const double one_minus = (1.0 - 2.0 * rho) * std::log1p(-2.0 * rho);
  return -(one_minus + 2.0 * rho * std::log(rho)) / (rho * rho);
}

double gnp_min_density(const Rational& rho) {
  if (rho <= 0 || rho >= Rational(1, 2)) {
    throw InvalidArgument("gnp_min_density: need 0 < rho < 1/2");
  }
  return gnp_min_density(to_double(rho));
}

double bipartite_min_density(double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw InvalidArgument("bipartite_min_density: need 0 < rho < 1");
  const double one_minus = 2.0 * (1.0 - rho) * std::log1p(-rho);
  return -(one_minus + 2.0 * rho * std::log(rho)) / (rho * rho);
}

double bipartite_min_density(const Rational& rho) {
  if (rho <= 0 || rho >= 1) throw InvalidArgument("bipartite_min_density: need 0 < rho < 1");
  return bipartite_min_density(to_double(rho));
}

double regular_exponent(double a, double c, double d) {
  const Wide A = a;
  const Wide C = c;
  const Wide D = d;
  const Wide half = 0.5;
  const Wide value = xlogx_ext(C) + xlogx_ext(D) + xlogx_ext((C - 2) * D) +
                     half * xlogx_ext((C - 1 - A) * D) - xlogx_ext(C - 2) - xlogx_ext(A * D) -
                     xlogx_ext((C - 2 - A) * D) - half * xlogx_ext((1 - A) * D) -
                     half * xlogx_ext(C * D);
  return value.convert_to<double>();
}

AffineExponent regular_exponent_decompose(double a, double c) {
  require_regular_c(c);
  if (!(a >= 0.0 && a <= 1.0)) throw InvalidArgument("a must lie in [0, 1]");
  // ln(c - u) = ln c + log1p(-u / c); the ln c parts collapse to (a - 1)/2 ln c.
  const double ln_c = std::log(c);
  const double l2 = std::log1p(-2.0 / c);
  AffineExponent out;
  out.k0 = 2.0 * ln_c - (c - 2.0) * l2;
  out.k1 = 0.5 * (a - 1.0) * ln_c + (c - 2.0) * l2 +
           0.5 * (c - 1.0 - a) * std::log1p(-(1.0 + a) / c) -
           (c - 2.0 - a) * std::log1p(-(2.0 + a) / c) - xlogx(a) - 0.5 * xlogx(1.0 - a);
  return out;
}

DensitySolveResult regular_min_density(const Rational& c_exact,
                                       const RegularSolveOptions& options) {
  const double c = to_double(c_exact);
  require_regular_c(c);
  if (options.grid < 1000) throw InvalidArgument("regular_min_density: grid must be >= 1000");
  if (!(options.tolerance > 0.0 && options.tolerance < 1.0)) {
    throw InvalidArgument("regular_min_density: tolerance must lie in (0, 1)");
  }
  const unsigned threads = configured_threads(options.threads);

  // Per-a threshold k0 / (-k1); +inf where no d works.
  auto threshold = [c](double a) {
    const auto k = regular_exponent_decompose(a, c);
    if (k.k1 >= 0.0) return k.k0 > 0.0 ? HUGE_VAL : 0.0;
    return k.k0 / -k.k1;
  };

  const ArgMax coarse = grid_argmax(options.grid, threads, threshold);
  if (std::isinf(coarse.value)) {
    throw Infeasible("regular model: no d satisfies f(a, c, d) <= 0 at a = " +
                     std::to_string(coarse.a));
  }
  const double step = 1.0 / static_cast<double>(options.grid);
  const double lo = std::max(0.0, coarse.a - step);
  const double hi = std::min(1.0, coarse.a + step);
  const ArgMax fine = golden_refine(lo, hi, options.refine_iterations, threshold);
  const ArgMax best = fine.value > coarse.value ? fine : coarse;

  auto max_exponent_at = [&](double d) {
    auto f = [c, d](double a) { return regular_exponent_decompose(a, c)(d); };
    return std::max(grid_argmax(options.grid, threads, f).value, f(best.a));
  };

  DensitySolveResult result;
  result.d_min = best.value;
  result.worst_a = best.a;
  result.grid_points = options.grid + 1;
  result.tolerance = options.tolerance;
  result.max_exponent = max_exponent_at(result.d_min);
  // Absorb the last-ulp rounding of k0 / -k1 so the certificate is <= 0.
  for (int i = 0; i < 64 && result.max_exponent > 0.0; ++i) {
    result.d_min = std::nextafter(result.d_min, HUGE_VAL);
    result.max_exponent = max_exponent_at(result.d_min);
  }
  result.max_exponent_below = max_exponent_at((1.0 - options.tolerance) * result.d_min);
  return result;
}

CertificateCheck check_regular_certificate(const Rational& c_exact, double d,
                                           std::size_t grid, int refine_iterations) {
  const double c = to_double(c_exact);
  require_regular_c(c);
  if (grid < 1) throw InvalidArgument("certificate grid must be >= 1");
  auto f = [c, d](double a) { return regular_exponent_decompose(a, c)(d); };
  const ArgMax coarse = grid_argmax(grid, configured_threads(), f);
  const double step = 1.0 / static_cast<double>(grid);
  const ArgMax fine = golden_refine(std::max(0.0, coarse.a - step),
                                    std::min(1.0, coarse.a + step), refine_iterations, f);
  const ArgMax best = fine.value > coarse.value ? fine : coarse;
  return CertificateCheck{best.value <= 0.0, best.value, best.a};
}

BigInt matching_count(std::int64_t i) {
  if (i < 0 || i % 2 != 0) {
    throw InvalidArgument("matching_count: i must be even and >= 0, got " + std::to_string(i));
  }
  const std::int64_t half = i / 2;
  return factorial(i) / (factorial(half) * (BigInt(1) << half));
}

Rational exact_first_moment(std::int64_t m, std::int64_t c, std::int64_t d,
                            const Rational& a) {
  if (m < 1) throw InvalidArgument("exact_first_moment: m must be >= 1");
  if (c < 2) throw InvalidArgument("exact_first_moment: c must be >= 2");
  if (d < 1) throw InvalidArgument("exact_first_moment: d must be >= 1");
  if (a < 0 || a > 1) throw InvalidArgument("exact_first_moment: a must lie in [0, 1]");
  const std::int64_t N = c * m;
  const std::int64_t md = m * d;
  const std::int64_t Nd = N * d;
  const Rational adm_exact = a * md;
  if (boost::multiprecision::denominator(adm_exact) != 1) {
    throw InvalidArgument("exact_first_moment: a*d*m = " + to_string(adm_exact) +
                          " is not an integer");
  }
  const auto adm = boost::multiprecision::numerator(adm_exact).convert_to<std::int64_t>();
  if (Nd % 2 != 0) throw InvalidArgument("exact_first_moment: N*d is odd");
  if ((md - adm) % 2 != 0) throw InvalidArgument("exact_first_moment: d*m - a*d*m is odd");
  if ((Nd - md - adm) % 2 != 0) {
    throw InvalidArgument("exact_first_moment: N*d - d*m - a*d*m is odd");
  }
  if (Nd - 2 * md - adm < 0) {
    throw InvalidArgument("exact_first_moment: N*d - 2*d*m - a*d*m is negative");
  }

  const BigInt numerator = binomial(N, m) * binomial(N - m, m) *
                           binomial(Nd - 2 * md, adm) * binomial(md, adm) *
                           factorial(adm) * matching_count(md - adm) *
                           matching_count(Nd - md - adm);
  return Rational(numerator, matching_count(Nd));
}

}  // namespace ramsey_lab
