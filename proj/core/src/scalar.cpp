#include "qcalc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "qcalc/error.hpp"

namespace qcalc {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer pow10(unsigned long n) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, n);
  return r;
}

// Largest e with 10^e <= x, for x > 0.
long decimal_exponent(const Scalar& x) {
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle by comparison.
  auto at_least = [&](long k) {
    if (k >= 0) return Scalar(pow10(static_cast<unsigned long>(k))) <= x;
    return x * Scalar(pow10(static_cast<unsigned long>(-k))) >= 1;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;
  return e;
}

// Round num/den to the nearest integer, ties to even. Inputs positive.
Integer round_half_even(const Integer& num, const Integer& den) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer twice = 2 * r;
  int c = cmp(twice, den);
  if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
  return q;
}

}  // namespace

std::optional<Scalar> parse_scalar(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Scalar value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Integer d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    value = Scalar(Integer(std::string(num), 10), d);
    value.canonicalize();
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    Integer n(std::string(whole) + std::string(frac), 10);
    value = Scalar(n, pow10(frac.size()));
    value.canonicalize();
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Scalar(Integer(std::string(text), 10));
  }
  if (negative) value = -value;
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

std::string to_decimal(const Scalar& value, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal: digits must be positive");
  if (value == 0) return "0";
  Scalar x = abs(value);
  long e = decimal_exponent(x);

  Integer mantissa;
  for (;;) {
    long shift = digits - 1 - e;
    Integer num = x.get_num();
    Integer den = x.get_den();
    if (shift >= 0) num *= pow10(static_cast<unsigned long>(shift));
    else den *= pow10(static_cast<unsigned long>(-shift));
    mantissa = round_half_even(num, den);
    if (mantissa == pow10(static_cast<unsigned long>(digits))) {
      ++e;  // rounding carried into a new digit
      continue;
    }
    break;
  }

  std::string ds = mantissa.get_str();
  while (ds.size() > 1 && ds.back() == '0') ds.pop_back();

  std::string out = value < 0 ? "-" : "";
  if (e >= -5 && e < 15) {
    if (e >= 0) {
      auto int_len = static_cast<std::size_t>(e + 1);
      if (ds.size() <= int_len) {
        out += ds + std::string(int_len - ds.size(), '0');
      } else {
        out += ds.substr(0, int_len) + "." + ds.substr(int_len);
      }
    } else {
      out += "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + ds;
    }
  } else {
    out += ds.substr(0, 1);
    if (ds.size() > 1) out += "." + ds.substr(1);
    out += "e" + std::to_string(e);
  }
  return out;
}

std::string to_display(const Scalar& value) {
  std::string out = to_string(value);
  if (!is_integer(value)) out += " (~" + to_decimal(value) + ")";
  return out;
}

Scalar power(const Scalar& base, const Integer& exponent) {
  if (exponent == 0) return Scalar(1);
  if (base == 0) {
    if (exponent < 0) throw ZeroNotInvertible();
    return Scalar(0);
  }
  if (abs(base) == 1) {
    if (base == 1 || mpz_even_p(exponent.get_mpz_t())) return Scalar(1);
    return Scalar(-1);
  }
  if (!exponent.fits_slong_p()) throw std::overflow_error("scalar power: exponent too large");
  long n = exponent.get_si();
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  Scalar r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
  r.canonicalize();
  if (n < 0) r = 1 / r;
  return r;
}

}  // namespace qcalc
