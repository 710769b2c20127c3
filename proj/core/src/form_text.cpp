#include "gcstar/form_text.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace gcstar {

namespace {

struct Token {
  enum Kind { Number, Ident, Plus, Minus, Slash, Wedge } kind;
  std::string text;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Number, std::string(text.substr(i, j - i))});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j]))) ++j;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Ident, std::string(text.substr(i, j - i))});
      i = j;
    } else if (c == '+') {
      out.push_back({Token::Plus, "+"});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::Minus, "-"});
      ++i;
    } else if (c == '/') {
      out.push_back({Token::Slash, "/"});
      ++i;
    } else if (c == '^') {
      out.push_back({Token::Wedge, "^"});
      ++i;
    } else {
      throw ParseError(std::string("form literal: unexpected character '") + c + "'");
    }
  }
  return out;
}

int coframe_index(const std::string& label, int dim) {
  if (label == "dt") return 0;
  if (dim == 4) {
    if (label == "dx") return 1;
    if (label == "dy") return 2;
    if (label == "dz") return 3;
  }
  if (label.size() > 2 && label.compare(0, 2, "dx") == 0) {
    int k = 0;
    for (std::size_t i = 2; i < label.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(label[i])))
        throw ParseError("form literal: unknown label '" + label + "'");
      k = k * 10 + (label[i] - '0');
    }
    if (k < 1 || k > dim - 1)
      throw ParseError("form literal: coordinate '" + label + "' out of range for dim " +
                       std::to_string(dim));
    return k;
  }
  throw ParseError("form literal: unknown label '" + label + "'");
}

}  // namespace

Form parse_form(std::string_view text, int dim) {
  if (dim < 1 || dim > MultiIndex::kMaxDim) throw ParseError("form literal: unsupported dimension");
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("form literal: empty input");

  std::optional<int> degree;  // pinned by the first degree-carrying term
  struct PendingTerm {
    std::vector<int> factors;
    Rational coefficient;
  };
  std::vector<PendingTerm> pending;

  std::size_t i = 0;
  while (i < tokens.size()) {
    Rational sign(1);
    if (tokens[i].kind == Token::Plus || tokens[i].kind == Token::Minus) {
      if (tokens[i].kind == Token::Minus) sign = -1;
      ++i;
      if (i == tokens.size()) throw ParseError("form literal: dangling sign");
    }

    Rational coefficient = sign;
    bool saw_number = false;
    if (tokens[i].kind == Token::Number) {
      saw_number = true;
      BigInt num(tokens[i].text);
      ++i;
      if (i < tokens.size() && tokens[i].kind == Token::Slash) {
        ++i;
        if (i == tokens.size() || tokens[i].kind != Token::Number)
          throw ParseError("form literal: malformed rational");
        BigInt den(tokens[i].text);
        if (den == 0) throw ParseError("form literal: zero denominator");
        coefficient *= Rational(num, den);
        ++i;
      } else {
        coefficient *= Rational(num);
      }
    }

    std::vector<int> factors;
    if (i < tokens.size() && tokens[i].kind == Token::Ident) {
      factors.push_back(coframe_index(tokens[i].text, dim));
      ++i;
      while (i < tokens.size() && tokens[i].kind == Token::Wedge) {
        ++i;
        if (i == tokens.size() || tokens[i].kind != Token::Ident)
          throw ParseError("form literal: dangling '^'");
        factors.push_back(coframe_index(tokens[i].text, dim));
        ++i;
      }
    }

    if (!saw_number && factors.empty())
      throw ParseError("form literal: expected a term near token '" + tokens[i].text + "'");

    const bool pins_degree = !factors.empty() || coefficient != 0;
    if (pins_degree) {
      const int term_degree = static_cast<int>(factors.size());
      if (degree && *degree != term_degree) throw ParseError("form literal: mixed degrees");
      degree = term_degree;
    }
    pending.push_back({std::move(factors), std::move(coefficient)});

    if (i < tokens.size() && tokens[i].kind != Token::Plus && tokens[i].kind != Token::Minus)
      throw ParseError("form literal: expected '+' or '-' near token '" + tokens[i].text + "'");
  }

  Form out = Form::zero(dim, degree.value_or(0));
  for (const auto& term : pending) {
    if (static_cast<int>(term.factors.size()) != out.degree) continue;  // zero, degree-neutral
    // Repeated factors wedge to zero; otherwise fold the sorting sign in.
    const int sign = levi_civita(term.factors);
    if (sign == 0 || term.coefficient == 0) continue;
    out.add_term(MultiIndex::from_indices(term.factors), Rational(sign) * term.coefficient);
  }
  return out;
}

std::string coframe_label(int index, int dim) {
  if (index == 0) return "dt";
  if (dim == 4) {
    switch (index) {
      case 1: return "dx";
      case 2: return "dy";
      case 3: return "dz";
      default: break;
    }
  }
  return "dx" + std::to_string(index);
}

std::string print_form(const Form& form) {
  if (form.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, value] : form.terms) {
    const bool negative = value < 0;
    const Rational magnitude = negative ? Rational(-value) : value;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string factors;
    for (int idx : key.indices()) {
      if (!factors.empty()) factors += "^";
      factors += coframe_label(idx, form.dim);
    }
    if (factors.empty()) {
      out += to_string(magnitude);  // scalar form
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + " " + factors;
    }
  }
  return out;
}

}  // namespace gcstar
