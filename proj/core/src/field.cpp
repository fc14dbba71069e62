#include "facering/field.hpp"

#include <charconv>

namespace facering {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw Error(ErrorKind::kInvalidInput,
                "field characteristic " + std::to_string(p) +
                    " is not a prime below 2^31");
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element result = 1;
  Element base = a % p_;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldSpec FieldSpec::gf(std::uint32_t p) {
  PrimeField check(p);
  (void)check;
  FieldSpec spec;
  spec.kind = Kind::kPrime;
  spec.prime = p;
  return spec;
}

FieldSpec FieldSpec::parse(const std::string& text) {
  if (text == "rational" || text == "Q") return rational();
  const std::string prefix = "gf:";
  if (text.rfind(prefix, 0) == 0) {
    const char* first = text.data() + prefix.size();
    const char* last = text.data() + text.size();
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec == std::errc() && ptr == last && first != last && p < (1ull << 31)) {
      return gf(static_cast<std::uint32_t>(p));
    }
  }
  throw Error(ErrorKind::kInvalidInput,
              "unrecognized field '" + text +
                  "' (expected 'rational' or 'gf:<p>' with p prime)");
}

std::string FieldSpec::name() const {
  return kind == Kind::kRational ? "rational" : "gf:" + std::to_string(prime);
}

}  // namespace facering
