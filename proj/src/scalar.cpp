#include "vlat/scalar.hpp"

#include <cctype>

#include "vlat/error.hpp"

namespace vlat {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() { return Error(ErrorCode::ParseError, "scalar '" + original + "'"); };

  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  mpz_class num;
  mpz_class den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto p = text.substr(0, slash);
    auto q = text.substr(slash + 1);
    if (!all_digits(p) || !all_digits(q)) throw fail();
    num.set_str(std::string(p), 10);
    den.set_str(std::string(q), 10);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + original + "'");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw fail();
    }
    std::string digits = std::string(whole) + std::string(frac);
    num.set_str(digits, 10);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(text)) throw fail();
    num.set_str(std::string(text), 10);
  }

  Scalar value(num, den);
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_unit_fraction(const Scalar& value) {
  return sgn(value) > 0 && value.get_num() == 1;
}

}  // namespace vlat
