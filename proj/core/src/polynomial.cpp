#include "gcstar/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace gcstar {

Polynomial Polynomial::constant(int nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::invalid_argument("Polynomial: variable out of range");
  Monomial m(static_cast<std::size_t>(nvars), 0);
  m[static_cast<std::size_t>(index)] = 1;
  Polynomial p(nvars);
  p.add_term(std::move(m), 1);
  return p;
}

void Polynomial::add_term(Monomial exponents, const Rational& coefficient) {
  if (static_cast<int>(exponents.size()) != nvars_)
    throw std::invalid_argument("Polynomial: exponent vector has wrong length");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
  if (coefficient == 0) return;
  const auto [it, inserted] = terms_.emplace(std::move(exponents), coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial +: variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial -: variable count mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a.nvars_);
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("Polynomial *: variable count mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Polynomial::Monomial m(ma);
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  Polynomial out(a.nvars_);
  if (c == 0) return out;
  for (const auto& [m, v] : a.terms_) out.terms_.emplace(m, c * v);
  return out;
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::invalid_argument("derivative: variable out of range");
  Polynomial out(nvars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial lowered(m);
    --lowered[static_cast<std::size_t>(var)];
    out.add_term(std::move(lowered), Rational(e) * c);
  }
  return out;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (static_cast<int>(images.size()) != nvars_)
    throw std::invalid_argument("substitute: one image per variable required");
  const int out_vars = images.empty() ? 0 : images.front().nvars();
  for (const auto& img : images)
    if (img.nvars() != out_vars) throw std::invalid_argument("substitute: mixed variable counts");

  // Memoize powers of each image up to the largest exponent that occurs.
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i)
    powers[i].push_back(Polynomial::constant(out_vars, 1));

  Polynomial out(out_vars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = Polynomial::constant(out_vars, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      const int e = m[i];
      while (static_cast<int>(powers[i].size()) <= e)
        powers[i].push_back(powers[i].back() * images[i]);
      if (e > 0) term = term * powers[i][static_cast<std::size_t>(e)];
    }
    out += term;
  }
  return out;
}

std::string coordinate_name(int index, int nvars) {
  if (nvars == 4) {
    switch (index) {
      case 0: return "t";
      case 1: return "x";
      case 2: return "y";
      case 3: return "z";
      default: break;
    }
  }
  return "x" + std::to_string(index);
}

namespace {

int coordinate_index(const std::string& name, int nvars) {
  if (nvars == 4) {
    if (name == "t") return 0;
    if (name == "x") return 1;
    if (name == "y") return 2;
    if (name == "z") return 3;
  }
  if (name.size() > 1 && name[0] == 'x') {
    int k = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return -1;
      k = k * 10 + (name[i] - '0');
    }
    if (k >= 0 && k < nvars) return k;
  }
  return -1;
}

struct PolyToken {
  enum Kind { Number, Ident, Plus, Minus, Star, Caret, Slash } kind;
  std::string text;
};

std::vector<PolyToken> poly_tokenize(std::string_view text) {
  std::vector<PolyToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({PolyToken::Number, std::string(text.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])))) ++j;
      out.push_back({PolyToken::Ident, std::string(text.substr(i, j - i))});
      i = j;
    } else {
      switch (c) {
        case '+': out.push_back({PolyToken::Plus, "+"}); break;
        case '-': out.push_back({PolyToken::Minus, "-"}); break;
        case '*': out.push_back({PolyToken::Star, "*"}); break;
        case '^': out.push_back({PolyToken::Caret, "^"}); break;
        case '/': out.push_back({PolyToken::Slash, "/"}); break;
        default:
          throw ParseError(std::string("polynomial: unexpected character '") + c + "'");
      }
      ++i;
    }
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int nvars) {
  const auto tokens = poly_tokenize(text);
  if (tokens.empty()) throw ParseError("polynomial: empty input");

  Polynomial out(nvars);
  std::size_t i = 0;
  while (i < tokens.size()) {
    Rational sign(1);
    if (tokens[i].kind == PolyToken::Plus || tokens[i].kind == PolyToken::Minus) {
      if (tokens[i].kind == PolyToken::Minus) sign = -1;
      ++i;
      if (i == tokens.size()) throw ParseError("polynomial: dangling sign");
    }

    Rational coefficient = sign;
    Polynomial::Monomial exponents(static_cast<std::size_t>(nvars), 0);
    bool saw_factor = false;
    while (i < tokens.size()) {
      if (tokens[i].kind == PolyToken::Number) {
        BigInt num(tokens[i].text);
        ++i;
        if (i < tokens.size() && tokens[i].kind == PolyToken::Slash) {
          ++i;
          if (i == tokens.size() || tokens[i].kind != PolyToken::Number)
            throw ParseError("polynomial: malformed rational");
          BigInt den(tokens[i].text);
          if (den == 0) throw ParseError("polynomial: zero denominator");
          coefficient *= Rational(num, den);
          ++i;
        } else {
          coefficient *= Rational(num);
        }
        saw_factor = true;
      } else if (tokens[i].kind == PolyToken::Ident) {
        const int var = coordinate_index(tokens[i].text, nvars);
        if (var < 0) throw ParseError("polynomial: unknown variable '" + tokens[i].text + "'");
        ++i;
        int exponent = 1;
        if (i < tokens.size() && tokens[i].kind == PolyToken::Caret) {
          ++i;
          if (i == tokens.size() || tokens[i].kind != PolyToken::Number)
            throw ParseError("polynomial: malformed exponent");
          try {
            exponent = std::stoi(tokens[i].text);
          } catch (const std::exception&) {
            throw ParseError("polynomial: exponent out of range");
          }
          ++i;
        }
        exponents[static_cast<std::size_t>(var)] += exponent;
        saw_factor = true;
      } else {
        throw ParseError("polynomial: expected a factor near '" + tokens[i].text + "'");
      }
      if (i < tokens.size() && tokens[i].kind == PolyToken::Star) {
        ++i;
        if (i == tokens.size()) throw ParseError("polynomial: dangling '*'");
        continue;
      }
      // Juxtaposition (e.g. "2 x") multiplies as well.
      if (i < tokens.size() &&
          (tokens[i].kind == PolyToken::Ident || tokens[i].kind == PolyToken::Number))
        continue;
      break;
    }
    if (!saw_factor) throw ParseError("polynomial: empty term");
    out.add_term(std::move(exponents), coefficient);

    if (i < tokens.size() && tokens[i].kind != PolyToken::Plus && tokens[i].kind != PolyToken::Minus)
      throw ParseError("polynomial: expected '+' or '-' near '" + tokens[i].text + "'");
  }
  return out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  // reverse map order = descending lex on exponent vectors: leading term
  // first, constants last
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += coordinate_name(static_cast<int>(i), p.nvars());
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

}  // namespace gcstar
