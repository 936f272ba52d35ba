#pragma once

// Exact ground fields: arbitrary-precision rationals and prime fields.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "hpa/errors.hpp"

namespace hpa {

/// Rational number in lowest terms with positive denominator (backed by GMP).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw ParseError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q" or "p"; rejects a zero denominator.
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    mpz_class num, den(1);
    try {
      if (slash == std::string::npos) {
        num = mpz_class(s, 10);
      } else {
        num = mpz_class(s.substr(0, slash), 10);
        den = mpz_class(s.substr(slash + 1), 10);
      }
    } catch (const std::invalid_argument&) {
      throw ParseError("not a rational: '" + s + "'");
    }
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }

  static constexpr std::uint64_t characteristic() { return 0; }
  static std::string field_name() { return "q"; }

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] std::string str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }

 private:
  mpq_class q_{0};
};

/// Residue modulo a prime. The modulus is per-thread state installed with
/// ModP::Scope, in the style of NTL's ZZ_p contexts.
class ModP {
 public:
  class Scope {
   public:
    explicit Scope(std::uint64_t p) : saved_(modulus_) {
      if (!is_prime(p)) throw ParseError("fp modulus is not prime: " + std::to_string(p));
      modulus_ = p;
    }
    ~Scope() { modulus_ = saved_; }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    std::uint64_t saved_;
  };

  ModP() = default;
  ModP(long v) : v_(reduce(v)) {}  // NOLINT(google-explicit-constructor)
  ModP(int v) : v_(reduce(v)) {}   // NOLINT(google-explicit-constructor)

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }
  static std::uint64_t characteristic() { return modulus(); }
  static std::string field_name() { return "fp:" + std::to_string(modulus()); }
  static std::uint64_t modulus() {
    if (modulus_ == 0) throw DomainError("no prime field modulus in scope");
    return modulus_;
  }

  /// Decimal residue; "p/q" is accepted and read as p·q⁻¹.
  static ModP parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      ModP den = parse(s.substr(slash + 1));
      if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
      return parse(s.substr(0, slash)) / den;
    }
    mpz_class z;
    try {
      z = mpz_class(s, 10);
    } catch (const std::invalid_argument&) {
      throw ParseError("not an integer: '" + s + "'");
    }
    mpz_class r = z % mpz_class(static_cast<unsigned long>(modulus()));
    if (r < 0) r += static_cast<unsigned long>(modulus());
    ModP out;
    out.v_ = r.get_ui();
    return out;
  }

  [[nodiscard]] bool is_zero() const { return v_ == 0; }
  [[nodiscard]] std::string str() const { return std::to_string(v_); }
  [[nodiscard]] std::uint64_t value() const { return v_; }

  ModP& operator+=(const ModP& o) {
    auto p = modulus();
    v_ = (v_ + o.v_) % p;
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    auto p = modulus();
    v_ = (v_ + p - o.v_) % p;
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % modulus());
    return *this;
  }
  ModP& operator/=(const ModP& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    return *this *= o.inverse();
  }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a) { return ModP(0) - a; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_; }

 private:
  static std::uint64_t reduce(long v) {
    auto p = static_cast<long long>(modulus());
    long long r = static_cast<long long>(v) % p;
    if (r < 0) r += p;
    return static_cast<std::uint64_t>(r);
  }
  [[nodiscard]] ModP inverse() const {
    // Fermat: v^(p-2).
    std::uint64_t p = modulus(), e = p - 2;
    ModP base = *this, acc(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::uint64_t v_ = 0;
  static inline thread_local std::uint64_t modulus_ = 0;
};

template <class K>
concept ExactField = std::regular<K> && requires(K a, K b, std::string_view s) {
  { a + b } -> std::same_as<K>;
  { a - b } -> std::same_as<K>;
  { a * b } -> std::same_as<K>;
  { a / b } -> std::same_as<K>;
  { -a } -> std::same_as<K>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::same_as<std::string>;
  { K::parse(s) } -> std::same_as<K>;
  { K::characteristic() } -> std::convertible_to<std::uint64_t>;
  { K::field_name() } -> std::same_as<std::string>;
  K(1);
};

inline std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }
inline std::ostream& operator<<(std::ostream& os, const ModP& x) { return os << x.str(); }

/// True when n is invertible in K (n ≠ 0 in K).
template <ExactField K>
bool invertible_integer(long n) {
  return !K(n).is_zero();
}

}  // namespace hpa
