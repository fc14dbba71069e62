#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "facering/error.hpp"

namespace facering {

/// The rationals with arbitrary precision (GMP).
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long long v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return Element(z);
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (a == 0) throw Error(ErrorKind::kInternal, "inverse of zero");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "rational"; }
  std::uint32_t characteristic() const { return 0; }
};

/// GF(p) for a prime p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  /// Throws `kInvalidInput` unless `p` is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(std::uint64_t{a} * b % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element pow(Element a, std::uint64_t e) const;
  /// Fermat inverse a^(p-2).
  Element inv(Element a) const {
    if (a == 0) throw Error(ErrorKind::kInternal, "inverse of zero");
    return pow(a, p_ - 2);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  std::string to_string(Element a) const { return std::to_string(a); }
  std::string name() const { return "gf:" + std::to_string(p_); }
  std::uint32_t characteristic() const { return p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

/// Runtime description of the coefficient field, as chosen on the command
/// line (`rational` or `gf:<p>`).
struct FieldSpec {
  enum class Kind { kRational, kPrime };

  Kind kind = Kind::kRational;
  std::uint32_t prime = 0;

  static FieldSpec rational() { return {}; }
  static FieldSpec gf(std::uint32_t p);
  /// Parses `rational` or `gf:<p>`; throws `kInvalidInput` otherwise.
  static FieldSpec parse(const std::string& text);

  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Calls `fn` with a concrete field object for `spec`.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldSpec::Kind::kRational) {
    return std::forward<Fn>(fn)(RationalField{});
  }
  return std::forward<Fn>(fn)(PrimeField{spec.prime});
}

}  // namespace facering
