#pragma once

// Exact scalar fields: the rationals and prime fields F_p.
//
// Every scalar type exposes a (possibly empty) Context describing the field,
// so that containers can manufacture 0 and 1 without holding an element.

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "detloci/error.hpp"

namespace detloci {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

template <class K>
concept ScalarField = std::regular<K> && requires(const K a, const K b, const typename K::Context c,
                                                  long n, std::string_view text) {
  { K::from_int(c, n) } -> std::same_as<K>;
  { K::parse(c, text) } -> std::same_as<K>;
  { a.context() } -> std::convertible_to<typename K::Context>;
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.inverse() } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.to_string() } -> std::same_as<std::string>;
};

struct RationalContext {
  friend bool operator==(const RationalContext&, const RationalContext&) = default;
};

/// Exact rational number, always in lowest terms with positive denominator
/// (GMP canonicalizes after every operation).
class Rational {
 public:
  using Context = RationalContext;

  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw InputError("rational with zero denominator");
    value_ = BigRational(BigInt(num), BigInt(den));
  }
  explicit Rational(BigRational v) : value_(std::move(v)) {}
  explicit Rational(const BigInt& v) : value_(v) {}

  static Rational from_int(const Context&, long n) { return Rational(n); }

  /// Accepts "n", "-n" and "num/den".
  static Rational parse(const Context&, std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigRational(BigInt(s)));
      BigInt num(s.substr(0, slash));
      BigInt den(s.substr(slash + 1));
      if (den == 0) throw InputError("rational with zero denominator: " + s);
      return Rational(BigRational(num, den));
    } catch (const std::runtime_error&) {
      throw InputError("cannot parse rational '" + s + "'");
    }
  }

  Context context() const { return {}; }
  const BigRational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  bool is_integer() const { return denominator() == 1; }

  bool is_zero() const { return value_ == 0; }
  Rational inverse() const {
    if (is_zero()) throw AlgebraError("division by zero");
    return Rational(BigRational(1) / value_);
  }

  Rational operator-() const { return Rational(BigRational(-value_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ + b.value_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ - b.value_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(BigRational(a.value_ * b.value_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw AlgebraError("division by zero");
    return Rational(BigRational(a.value_ / b.value_));
  }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

 private:
  BigRational value_{0};
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct PrimeContext {
  std::uint64_t prime = 101;
  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

inline constexpr std::uint64_t kDefaultPrime = 101;

/// Validated prime-field context. Only odd primes below 2^31 are accepted so
/// products fit in 64 bits.
inline PrimeContext prime_context(std::uint64_t p = kDefaultPrime) {
  if (p == 2 || p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("prime field modulus must be an odd prime below 2^31, got " + std::to_string(p));
  return PrimeContext{p};
}

/// Element of F_p stored as its canonical representative in [0, p).
class Fp {
 public:
  using Context = PrimeContext;

  Fp() = default;
  Fp(const Context& ctx, long n) : p_(ctx.prime) {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += static_cast<long>(p_);
    v_ = static_cast<std::uint64_t>(r);
  }

  static Fp from_int(const Context& ctx, long n) { return Fp(ctx, n); }

  static Fp parse(const Context& ctx, std::string_view text) {
    std::string s(text);
    if (s.find('/') != std::string::npos) {
      auto slash = s.find('/');
      return parse(ctx, s.substr(0, slash)) / parse(ctx, s.substr(slash + 1));
    }
    try {
      BigInt n(s);
      BigInt r = n % BigInt(ctx.prime);
      if (r < 0) r += ctx.prime;
      return Fp(ctx, r.convert_to<long>());
    } catch (const std::runtime_error&) {
      throw InputError("cannot parse field element '" + s + "'");
    }
  }

  Context context() const { return Context{p_}; }
  std::uint64_t value() const { return v_; }
  std::uint64_t prime() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  Fp inverse() const {
    if (is_zero()) throw AlgebraError("division by zero in F_" + std::to_string(p_));
    return pow(p_ - 2);
  }
  Fp pow(std::uint64_t e) const {
    Fp result = make(1 % p_), base = *this;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  Fp operator-() const { return make(v_ == 0 ? 0 : p_ - v_); }
  friend Fp operator+(const Fp& a, const Fp& b) {
    check(a, b);
    std::uint64_t s = a.v_ + b.v_;
    return a.make(s >= a.p_ ? s - a.p_ : s);
  }
  friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
  friend Fp operator*(const Fp& a, const Fp& b) {
    check(a, b);
    return a.make((a.v_ * b.v_) % a.p_);
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  Fp make(std::uint64_t v) const {
    Fp r;
    r.v_ = v;
    r.p_ = p_;
    return r;
  }
  static void check(const Fp& a, const Fp& b) {
    if (a.p_ != b.p_) throw InputError("mixing elements of different prime fields");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = kDefaultPrime;
};

static_assert(ScalarField<Rational>);
static_assert(ScalarField<Fp>);

template <ScalarField K>
K zero_of(const typename K::Context& ctx) {
  return K::from_int(ctx, 0);
}
template <ScalarField K>
K one_of(const typename K::Context& ctx) {
  return K::from_int(ctx, 1);
}

}  // namespace detloci
