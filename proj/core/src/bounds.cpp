#include "ramsey_lab/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ramsey_lab/errors.hpp"
#include "ramsey_lab/threshold_solver.hpp"

namespace ramsey_lab {
namespace {

namespace mp = boost::multiprecision;

// 2^t_o - 2 grows fast enough that 35^(2^t_o - 2) is unusable beyond this.
constexpr int kMaxOddCount = 12;

void check_depth(int t, int min_t, int max_t, const char* what) {
  if (t < min_t || t > max_t) {
    throw InvalidArgument(std::string(what) + ": t=" + std::to_string(t) +
                          " outside [" + std::to_string(min_t) + ", " +
                          std::to_string(max_t) + "]");
  }
}

BigInt f_recursive(int t, const BigInt& m1, const BigInt& m2) {
  if (t == 1) return 33 * m1 + 49 * m2;
  const BigInt outer = 32 * m1 + 49 * m2;
  return f_recursive(t - 1, f_recursive(t - 1, outer, m1 + m2 - 1), outer);
}

std::vector<bool> log_constraint_flags(const CycleSpec& spec, const Rational& N) {
  if (N < 1) throw InvalidArgument("host size N must be >= 1");
  const std::int64_t need = 2 * ceil_log2(N) + 2;
  std::vector<bool> flags;
  flags.reserve(spec.size());
  for (const auto n : spec.lengths()) flags.push_back(n >= need);
  return flags;
}

void fill_constraints(BoundReport& report, const CycleSpec& spec,
                      const Rational& host_multiplier) {
  report.constraint_flags =
      log_constraint_flags(spec, host_multiplier * spec.max_length());
  report.constraint_ok = std::all_of(report.constraint_flags.begin(),
                                     report.constraint_flags.end(),
                                     [](bool ok) { return ok; });
}

}  // namespace

CycleSpec::CycleSpec(std::vector<std::int64_t> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw InvalidArgument("cycle list must be non-empty");
  for (const auto n : lengths_) {
    if (n < 3) {
      throw InvalidArgument("cycle length " + std::to_string(n) + " is below 3");
    }
    (n % 2 == 0 ? even_count_ : odd_count_) += 1;
    max_length_ = std::max(max_length_, n);
  }
}

LinearForm f1() { return LinearForm{33, 49, 0}; }

LinearForm f_coefficients(int t, int max_t) {
  check_depth(t, 1, max_t, "f_coefficients");
  LinearForm f = f1();
  for (int i = 2; i <= t; ++i) {
    const BigInt ab = f.a * f.b;
    LinearForm next;
    next.a = 32 * f.a * f.a + ab + 32 * f.b;
    next.b = 49 * f.a * f.a + ab + 49 * f.b;
    next.c = -ab + f.a * f.c + f.c;
    f = std::move(next);
  }
  return f;
}

BigInt eval_f(int t, const BigInt& m1, const BigInt& m2, int max_t) {
  check_depth(t, 1, max_t, "eval_f");
  return f_recursive(t, m1, m2);
}

BigInt thm_f20_bound(int t, const BigInt& m1, const BigInt& m2, int max_t) {
  check_depth(t, 2, max_t, "thm_f20_bound");
  const unsigned exponent = (1u << t) - 2;
  return mp::pow(BigInt(35), exponent) * (32 * m1 + 49 * m2);
}

Rational thm_f6_N(const CycleSpec& spec, const BigInt& m) {
  if (m < 1) throw InvalidArgument("thm_f6_N: m must be >= 1");
  const int t_o = spec.odd_count();
  if (t_o > kMaxOddCount) {
    throw InvalidArgument("thm_f6_N: more than " + std::to_string(kMaxOddCount) +
                          " odd cycles");
  }
  const BigInt base = 82 * mp::pow(BigInt(81), static_cast<unsigned>(spec.even_count())) * m;
  if (t_o == 0) return Rational(base, 35);
  return Rational(base * mp::pow(BigInt(35), (1u << t_o) - 2));
}

BigInt cor_f0_bound(int t, const BigInt& m) {
  if (t < 1) throw InvalidArgument("cor_f0_bound: t must be >= 1");
  if (m < 1) throw InvalidArgument("cor_f0_bound: m must be >= 1");
  return mp::pow(BigInt(81), static_cast<unsigned>(t)) * m;
}

std::vector<bool> validate_length_constraints(const CycleSpec& spec, const Rational& N) {
  return log_constraint_flags(spec, N);
}

std::vector<bool> validate_connector_constraints(const CycleSpec& spec,
                                                 const BigInt& m1, const BigInt& m2) {
  if (m1 < 1 || m2 < 1) throw InvalidArgument("m1 and m2 must be >= 1");
  const std::int64_t need = ceil_log2(Rational(m1)) + ceil_log2(Rational(m2)) + 1;
  std::vector<bool> flags;
  for (const auto n : spec.lengths()) flags.push_back(n >= need);
  return flags;
}

std::string_view to_string(ModelTag tag) {
  switch (tag) {
    case ModelTag::kGnp: return "gnp";
    case ModelTag::kRegular: return "regular";
    case ModelTag::kBipartite: return "bipartite";
    case ModelTag::kDeterministic: return "deterministic";
  }
  return "unknown";
}

Rational cycle_constant(const CycleSpec& spec) {
  const Rational f = thm_f6_N(spec, 1);
  if (spec.size() == 2) return std::min(Rational(95412), f);
  return f;
}

BoundReport size_ramsey_gnp(const CycleSpec& spec) {
  BoundReport report;
  report.model = ModelTag::kGnp;
  report.c = cycle_constant(spec);
  const double c = to_double(report.c);
  report.d = gnp_min_density(Rational(1) / report.c);
  // N d / 2 with N = c n.
  report.coefficient = c * report.d / 2.0;
  report.loose_coefficient = (std::log(c) + 1.0) * c * c;
  fill_constraints(report, spec, report.c);
  return report;
}

BoundReport size_ramsey_regular(const Rational& c, double d, bool verify_d) {
  if (c <= 3) throw InvalidArgument("regular model requires c > 3");
  if (verify_d) {
    if (!(d > 0)) throw Infeasible("regular model: d must be positive");
    const auto check = check_regular_certificate(c, d, 100'000);
    if (!check.holds) {
      throw Infeasible("regular model: f(a, c, d) > 0 at a = " +
                       std::to_string(check.worst_a) + " for d = " +
                       std::to_string(d));
    }
  }
  BoundReport report;
  report.model = ModelTag::kRegular;
  report.c = c;
  report.d = d;
  report.coefficient = to_double(c) * d / 2.0;
  report.loose_coefficient = report.coefficient;
  return report;
}

BoundReport size_ramsey_regular(const CycleSpec& spec, double d, bool verify_d) {
  BoundReport report = size_ramsey_regular(cycle_constant(spec), d, verify_d);
  fill_constraints(report, spec, report.c);
  return report;
}

BoundReport size_ramsey_bipartite(const CycleSpec& spec) {
  if (!spec.all_even()) {
    throw InvalidArgument("bipartite bound requires every cycle length to be even");
  }
  BoundReport report;
  report.model = ModelTag::kBipartite;
  report.c = Rational(mp::pow(BigInt(81), static_cast<unsigned>(spec.size())));
  const double c = to_double(report.c);
  report.d = bipartite_min_density(Rational(1) / report.c);
  // N d with N = c n vertices per side.
  report.coefficient = c * report.d;
  report.loose_coefficient = 2.0 * c * c * (std::log(c) + 1.0);
  fill_constraints(report, spec, report.c);
  return report;
}

BoundReport ramsey_vs_biclique(const CycleSpec& spec) {
  BoundReport report;
  report.model = ModelTag::kDeterministic;
  report.c = thm_f6_N(spec, 1);
  report.exact_coefficient = report.c;
  report.coefficient = to_double(report.c);
  report.loose_coefficient = report.coefficient;
  fill_constraints(report, spec, report.c);
  return report;
}

}  // namespace ramsey_lab
