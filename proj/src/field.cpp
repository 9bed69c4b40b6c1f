#include "sqpow/field.hpp"

#include <charconv>
#include <stdexcept>

namespace sqpow {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (std::uint32_t{1} << 31) || !is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(Kind::prime, p);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text == "f2") return prime(2);
  if (text.starts_with("fp:")) {
    std::string_view digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw std::invalid_argument("bad field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(text) + "' (expected q, f2 or fp:<p>)");
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::rational) return "q";
  if (p_ == 2) return "f2";
  return "fp:" + std::to_string(p_);
}

}  // namespace sqpow
