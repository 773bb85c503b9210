#include "ramsey_lab/numeric.hpp"

#include <cctype>
#include <cmath>
#include <numbers>

#include "ramsey_lab/errors.hpp"

namespace ramsey_lab {
namespace {

namespace mp = boost::multiprecision;

// x * 2^-shift truncated, with shift chosen so the result fits in 62 bits.
double log_positive(const BigInt& x) {
  const auto top = static_cast<std::int64_t>(mp::msb(x));
  if (top < 62) return std::log(x.convert_to<double>());
  const std::int64_t shift = top - 61;
  const BigInt head = x >> shift;
  return std::log(head.convert_to<double>()) +
         static_cast<double>(shift) * std::numbers::ln2;
}

BigInt ceil_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q;
}

std::int64_t ceil_log2_int(const BigInt& q) {
  if (q <= 1) return 0;
  const auto top = static_cast<std::int64_t>(mp::msb(q));
  const bool power_of_two = mp::lsb(q) == mp::msb(q);
  return power_of_two ? top : top + 1;
}

}  // namespace

double log_of(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("log_of: argument must be positive");
  return log_positive(x);
}

double log_of(const Rational& x) {
  if (x <= 0) throw InvalidArgument("log_of: argument must be positive");
  return log_positive(mp::numerator(x)) - log_positive(mp::denominator(x));
}

double to_double(const Rational& x) {
  if (x == 0) return 0.0;
  const bool negative = x < 0;
  const BigInt num = mp::abs(mp::numerator(x));
  const BigInt den = mp::denominator(x);
  const auto bits_num = static_cast<std::int64_t>(mp::msb(num));
  const auto bits_den = static_cast<std::int64_t>(mp::msb(den));
  const std::int64_t k = 64 - (bits_num - bits_den);
  BigInt q = k >= 0 ? BigInt((num << k) / den) : BigInt(num / (den << -k));
  const double value = std::ldexp(q.convert_to<double>(), static_cast<int>(-k));
  return negative ? -value : value;
}

std::int64_t ceil_log2(const Rational& x) {
  if (x < 1) throw InvalidArgument("ceil_log2: argument must be >= 1");
  return ceil_log2_int(ceil_div(mp::numerator(x), mp::denominator(x)));
}

std::int64_t ceil_log2(std::uint64_t x) {
  if (x < 1) throw InvalidArgument("ceil_log2: argument must be >= 1");
  return ceil_log2_int(BigInt(x));
}

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational {
    throw InvalidArgument("not a rational number: '" + text + "'");
  };
  if (text.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
  };
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    if (!digits(pos, slash) || !digits(slash + 1, text.size())) return fail();
    const BigInt num(text.substr(pos, slash - pos));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) return fail();
    value = Rational(num, den);
  } else if (const auto dot = text.find('.'); dot != std::string::npos) {
    const bool int_ok = dot == pos || digits(pos, dot);
    const bool frac_ok = dot + 1 == text.size() || digits(dot + 1, text.size());
    if (!int_ok || !frac_ok || (dot == pos && dot + 1 == text.size())) return fail();
    const std::string int_part = dot == pos ? "0" : text.substr(pos, dot - pos);
    const std::string frac_part = text.substr(dot + 1);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const BigInt frac = frac_part.empty() ? BigInt(0) : BigInt(frac_part);
    value = Rational(BigInt(int_part) * scale + frac, scale);
  } else {
    if (!digits(pos, text.size())) return fail();
    value = Rational(BigInt(text.substr(pos)));
  }
  return negative ? Rational(-value) : value;
}

}  // namespace ramsey_lab
