#ifndef SQPOW_FIELD_HPP
#define SQPOW_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sqpow {

/// Coefficient field for homology: the rationals or GF(p).
class FieldSpec {
 public:
  enum class Kind { rational, prime };

  static FieldSpec rationals() { return FieldSpec(Kind::rational, 0); }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "q", "f2", and "fp:<p>".
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  /// Inverse of parse(): "q", "f2", or "fp:<p>".
  std::string to_string() const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

/// Exact rationals.
struct RationalField {
  using Element = mpq_class;

  Element from_int(int v) const { return Element(v); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element inverse(const Element& a) const { return 1 / a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  /// a - c * b
  Element sub_mul(const Element& a, const Element& c, const Element& b) const { return a - c * b; }
};

/// Integers modulo a prime p < 2^31.
struct PrimeField {
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t prime) : p(prime) {}

  Element from_int(int v) const {
    const auto r = static_cast<std::int64_t>(v) % static_cast<std::int64_t>(p);
    return static_cast<Element>(r < 0 ? r + p : r);
  }
  bool is_zero(Element a) const { return a == 0; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p);
  }
  Element inverse(Element a) const {
    // a^(p-2) by square-and-multiply
    Element result = 1, base = a;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
      if (e & 1U) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }
  Element sub_mul(Element a, Element c, Element b) const {
    const Element cb = mul(c, b);
    return a >= cb ? a - cb : a + (p - cb);
  }

  std::uint32_t p;
};

}  // namespace sqpow

#endif  // SQPOW_FIELD_HPP
