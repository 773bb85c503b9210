#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ramsey_lab/numeric.hpp"

namespace ramsey_lab {

/// Target cycle lengths n_1, ..., n_t together with their parity counts.
class CycleSpec {
 public:
  /// Throws InvalidArgument if `lengths` is empty or holds an entry below 3.
  explicit CycleSpec(std::vector<std::int64_t> lengths);

  std::span<const std::int64_t> lengths() const { return lengths_; }
  std::size_t size() const { return lengths_.size(); }
  int even_count() const { return even_count_; }
  int odd_count() const { return odd_count_; }
  std::int64_t max_length() const { return max_length_; }
  bool all_even() const { return odd_count_ == 0; }

 private:
  std::vector<std::int64_t> lengths_;
  int even_count_ = 0;
  int odd_count_ = 0;
  std::int64_t max_length_ = 0;
};

/// Exact affine form a*m1 + b*m2 + c.
struct LinearForm {
  BigInt a;
  BigInt b;
  BigInt c;

  BigInt operator()(const BigInt& m1, const BigInt& m2) const {
    return a * m1 + b * m2 + c;
  }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Default upper limit for the recursion depth t. f_t has coefficients of
/// roughly 35^(2^t) so larger t is refused rather than approximated.
inline constexpr int kDefaultMaxRecursionDepth = 8;

/// f_1(m1, m2) = 33 m1 + 49 m2.
LinearForm f1();

/// Coefficients (a_t, b_t, c_t) of f_t from the coefficient recurrences.
LinearForm f_coefficients(int t, int max_t = kDefaultMaxRecursionDepth);

/// f_t(m1, m2) by literal recursion
/// f_t(m1, m2) = f_{t-1}(f_{t-1}(32 m1 + 49 m2, m1 + m2 - 1), 32 m1 + 49 m2).
BigInt eval_f(int t, const BigInt& m1, const BigInt& m2,
              int max_t = kDefaultMaxRecursionDepth);

/// 35^(2^t - 2) * (32 m1 + 49 m2), the closed-form envelope of f_t for t >= 2.
BigInt thm_f20_bound(int t, const BigInt& m1, const BigInt& m2,
                     int max_t = kDefaultMaxRecursionDepth);

/// 82 * 35^(2^t_o - 2) * 81^t_e * m. Exact rational: t_o = 0 leaves a factor 1/35.
Rational thm_f6_N(const CycleSpec& spec, const BigInt& m);

/// 81^t * m, the bipartite Ramsey bound for t even cycles versus K_{m,m}.
BigInt cor_f0_bound(int t, const BigInt& m);

/// Per-entry flag n_i >= 2 * ceil(log2 N) + 2.
std::vector<bool> validate_length_constraints(const CycleSpec& spec,
                                              const Rational& N);

/// Per-entry flag n_i >= ceil(log2 m1) + ceil(log2 m2) + 1 (the connector
/// path condition, weaker than the one above).
std::vector<bool> validate_connector_constraints(const CycleSpec& spec,
                                                 const BigInt& m1,
                                                 const BigInt& m2);

enum class ModelTag { kGnp, kRegular, kBipartite, kDeterministic };

std::string_view to_string(ModelTag tag);

struct BoundReport {
  ModelTag model = ModelTag::kGnp;
  /// Host-size multiplier: the host has N = c * n vertices per side.
  Rational c;
  /// Edge density parameter of the random model (p = d / N).
  double d = 0.0;
  /// Multiplier of n in the size-Ramsey bound obtained from N * d / 2 (or
  /// N * d for the bipartite model).
  double coefficient = 0.0;
  /// Mean-value relaxation of `coefficient`; equals it where no relaxation
  /// applies.
  double loose_coefficient = 0.0;
  /// Exact rational coefficient when one exists (deterministic reports).
  Rational exact_coefficient;
  /// Every n_i satisfies n_i >= 2 * ceil(log2(c * n)) + 2 with n = max n_i.
  bool constraint_ok = false;
  std::vector<bool> constraint_flags;
};

/// The c of the G(N, p) and random-regular bounds: min{95412, f} for t = 2
/// and f = thm_f6_N(spec, 1) otherwise.
Rational cycle_constant(const CycleSpec& spec);

BoundReport size_ramsey_gnp(const CycleSpec& spec);

/// Bound N d / 2 for the random d-regular host with N = c n. `d` must pass
/// the regular-model certificate f(a, c, d) <= 0 on [0, 1]; otherwise
/// Infeasible is thrown. `verify_d = false` skips the certificate.
BoundReport size_ramsey_regular(const CycleSpec& spec, double d,
                                bool verify_d = true);
/// Same as above for an explicit c (no cycle spec needed).
BoundReport size_ramsey_regular(const Rational& c, double d,
                                bool verify_d = true);

/// Bound from the random bipartite host with c = 81^t. All lengths must be
/// even.
BoundReport size_ramsey_bipartite(const CycleSpec& spec);

/// R(C_{n_1}, ..., C_{n_t}, K_{m,m}) <= thm_f6_N(spec, m), reported per unit
/// of m, with the length constraint checked at m = max n_i.
BoundReport ramsey_vs_biclique(const CycleSpec& spec);

}  // namespace ramsey_lab
