#include "gcstar/rational.hpp"

#include <cctype>

namespace gcstar {

namespace {

bool parse_integer(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = (text[0] == '-');
    pos = 1;
  }
  if (pos == text.size()) return false;
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) return false;
    value = value * 10 + (text[pos] - '0');
  }
  out = negative ? BigInt(-value) : value;
  return true;
}

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  text = trimmed(text);
  const std::size_t slash = text.find('/');
  BigInt num;
  if (slash == std::string_view::npos) {
    if (!parse_integer(text, num)) return std::nullopt;
    return Rational(num);
  }
  BigInt den;
  if (!parse_integer(trimmed(text.substr(0, slash)), num)) return std::nullopt;
  if (!parse_integer(trimmed(text.substr(slash + 1)), den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

}  // namespace gcstar
