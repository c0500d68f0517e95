#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "lgv/errors.hpp"

namespace lgv {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t q = 3; q * q <= n; q += 2)
    if (n % q == 0) return false;
  return true;
}

/// Z/pZ for an odd prime p < 2^31. Elements are least nonnegative residues.
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime(p))
      throw PreconditionError("field characteristic must be an odd prime below 2^31, got " +
                              std::to_string(p));
  }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::string descriptor() const { return "fp:" + std::to_string(p_); }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  bool is_zero(Element a) const noexcept { return a == 0; }
  bool is_one(Element a) const noexcept { return a == 1; }

  Element add(Element a, Element b) const noexcept {
    std::uint32_t c = a + b;
    return c >= p_ ? c - p_ : c;
  }
  Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw ConsistencyError("inverse of zero in " + descriptor());
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_integer(const mpz_class& n) const {
    mpz_class r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r.get_ui());
  }
  Element from_integer(long long n) const { return from_integer(mpz_class(std::to_string(n))); }

  Element from_rational(const mpq_class& q) const {
    Element den = from_integer(q.get_den());
    if (den == 0)
      throw PreconditionError("denominator " + q.get_den().get_str() + " vanishes in " +
                              descriptor());
    return div(from_integer(q.get_num()), den);
  }

  /// Symmetric representative in (-p/2, p/2], which parses back to the same residue.
  std::string to_string(Element a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }

  Element random(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng);
  }
  Element random_nonzero(std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::uint32_t>(1, p_ - 1)(rng);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP. Elements are always canonical (mpq_class::canonicalize).
class RationalField {
 public:
  using Element = mpq_class;

  std::string descriptor() const { return "rat"; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) throw ConsistencyError("inverse of zero in rat");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  Element from_integer(const mpz_class& n) const { return mpq_class(n); }
  Element from_integer(long long n) const { return mpq_class(mpz_class(std::to_string(n))); }
  Element from_rational(const mpq_class& q) const {
    mpq_class c(q);
    c.canonicalize();
    return c;
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  // Small integers are enough for generic-form draws over Q.
  Element random(std::mt19937_64& rng) const {
    return mpq_class(std::uniform_int_distribution<int>(-64, 64)(rng));
  }
  Element random_nonzero(std::mt19937_64& rng) const {
    int v = 0;
    while (v == 0) v = std::uniform_int_distribution<int>(-64, 64)(rng);
    return mpq_class(v);
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

template <class F>
concept CoefficientField = requires(const F& f, typename F::Element a) {
  { f.add(a, a) } -> std::convertible_to<typename F::Element>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Element>;
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.descriptor() } -> std::convertible_to<std::string>;
};

/// Parsed form of a field descriptor: "rat" or "fp:<prime>".
struct FieldChoice {
  bool rational = false;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  std::string descriptor() const {
    return rational ? "rat" : "fp:" + std::to_string(prime);
  }
};

inline FieldChoice parse_field_descriptor(std::string_view text) {
  if (text == "rat" || text == "QQ") return {true, 0};
  if (text.substr(0, 3) == "fp:") {
    std::string digits(text.substr(3));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
        digits.size() > 10)
      throw ParseError("bad prime in field descriptor '" + std::string(text) + "'");
    auto p = std::stoull(digits);
    if (p <= 2 || p >= (1ull << 31) || !is_prime(p))
      throw ParseError("field descriptor needs an odd prime below 2^31, got " + digits);
    return {false, static_cast<std::uint32_t>(p)};
  }
  throw ParseError("unknown field descriptor '" + std::string(text) + "' (expected rat or fp:<p>)");
}

}  // namespace lgv
