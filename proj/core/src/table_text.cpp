#include "gcstar/table_text.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>

#include "gcstar/hodge.hpp"
#include "gcstar/polynomial.hpp"

namespace gcstar {

namespace {

// Symbol ring: seven formal variables f, a1..a3, b1..b3.
constexpr int kSymbols = 7;
constexpr int kF = 0;
constexpr int kA = 1;  // a1, a2, a3 occupy slots 1..3
constexpr int kB = 4;  // b1, b2, b3 occupy slots 4..6

Polynomial symbol(int slot) { return Polynomial::variable(kSymbols, slot); }

using SymbolicForm = std::map<MultiIndex, Polynomial>;

MultiIndex key(std::initializer_list<int> idxs) {
  return MultiIndex::from_indices(std::span<const int>(idxs.begin(), idxs.size()));
}

// The general degree-p input: f / f dt + a.dr / dt^(a.dr) + b.dS /
// dt^(a.dS) + f dV / f dt^dV.
SymbolicForm general_input(int degree) {
  SymbolicForm form;
  switch (degree) {
    case 0:
      form[key({})] = symbol(kF);
      break;
    case 1:
      form[key({0})] = symbol(kF);
      for (int i = 0; i < 3; ++i) form[key({1 + i})] = symbol(kA + i);
      break;
    case 2:
      for (int i = 0; i < 3; ++i) form[key({0, 1 + i})] = symbol(kA + i);
      form[key({2, 3})] = symbol(kB);
      form[key({1, 3})] = -symbol(kB + 1);
      form[key({1, 2})] = symbol(kB + 2);
      break;
    case 3:
      form[key({0, 2, 3})] = symbol(kA);
      form[key({0, 1, 3})] = -symbol(kA + 1);
      form[key({0, 1, 2})] = symbol(kA + 2);
      form[key({1, 2, 3})] = symbol(kF);
      break;
    case 4:
      form[key({0, 1, 2, 3})] = symbol(kF);
      break;
    default:
      throw std::invalid_argument("general_input: degree out of range");
  }
  return form;
}

const char* input_text(int degree) {
  switch (degree) {
    case 0: return "f";
    case 1: return "f dt + a\xC2\xB7""dr";
    case 2: return "dt^(a\xC2\xB7""dr) + b\xC2\xB7""dS";
    case 3: return "dt^(a\xC2\xB7""dS) + f dV";
    case 4: return "f dt^dV";
  }
  return "";
}

SymbolicForm apply_star(const SymbolicForm& input, int degree, SpacetimeKind kind) {
  SymbolicForm out;
  for (const auto& [k, coefficient] : input) {
    const Form image = star_table_4d(Form::basis(4, k), kind);
    for (const auto& [out_key, weight] : image.terms) {
      auto [it, inserted] = out.emplace(out_key, weight * coefficient);
      if (!inserted) it->second += weight * coefficient;
    }
  }
  (void)degree;
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

// One recognized piece of the output: sign and vocabulary text.
struct Piece {
  int sign;  // +1 or -1
  std::string text;
};

std::optional<int> match_symbol(const Polynomial& p, int slot) {
  if (p == symbol(slot)) return 1;
  if (p == -symbol(slot)) return -1;
  return std::nullopt;
}

// Matches (v1, v2, v3) == sign * (a or b) and names the vector.
std::optional<Piece> match_vector(const std::array<Polynomial, 3>& v, const std::string& suffix) {
  for (const auto& [base, name] : {std::pair<int, const char*>{kA, "a"}, {kB, "b"}}) {
    for (int sign : {1, -1}) {
      bool all = true;
      for (int i = 0; i < 3 && all; ++i)
        all = v[static_cast<std::size_t>(i)] == Rational(sign) * symbol(base + i);
      if (all) return Piece{sign, std::string(name) + "\xC2\xB7" + suffix};
    }
  }
  return std::nullopt;
}

// Renders a purely spatial symbolic form of the given degree into the
// vocabulary, or nothing if it does not fit.
std::optional<Piece> match_spatial(const SymbolicForm& form, int degree) {
  const auto coeff = [&](std::initializer_list<int> idxs) {
    const auto it = form.find(key(idxs));
    return it == form.end() ? Polynomial(kSymbols) : it->second;
  };
  switch (degree) {
    case 0:
      if (auto s = match_symbol(coeff({}), kF)) return Piece{*s, "f"};
      return std::nullopt;
    case 1:
      return match_vector({coeff({1}), coeff({2}), coeff({3})}, "dr");
    case 2:
      // v.dS has components (v1, -v2, v3) on (dy^dz, dx^dz, dx^dy).
      return match_vector({coeff({2, 3}), -coeff({1, 3}), coeff({1, 2})}, "dS");
    case 3:
      if (auto s = match_symbol(coeff({1, 2, 3}), kF)) return Piece{*s, "f dV"};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::string render_output(const SymbolicForm& form, int degree) {
  if (form.empty()) return "0";

  SymbolicForm temporal, spatial;
  for (const auto& [k, c] : form) {
    if (k.has_temporal())
      temporal[k.without(0)] = c;
    else
      spatial[k] = c;
  }

  std::vector<Piece> pieces;
  bool matched = true;
  if (!temporal.empty()) {
    const int companion_degree = degree - 1;
    if (auto piece = match_spatial(temporal, companion_degree)) {
      if (companion_degree == 0)
        pieces.push_back({piece->sign, piece->text + " dt"});
      else if (companion_degree == 3)
        pieces.push_back({piece->sign, piece->text == "f dV" ? "f dt^dV" : "dt^(" + piece->text + ")"});
      else
        pieces.push_back({piece->sign, "dt^(" + piece->text + ")"});
    } else {
      matched = false;
    }
  }
  if (matched && !spatial.empty()) {
    if (auto piece = match_spatial(spatial, degree))
      pieces.push_back(*piece);
    else
      matched = false;
  }

  if (!matched) {
    // Fallback outside the vocabulary: raw term-by-term rendering.
    std::string out;
    for (const auto& [k, c] : form) {
      if (!out.empty()) out += " + ";
      std::string factors;
      for (int idx : k.indices()) {
        if (!factors.empty()) factors += "^";
        factors += idx == 0 ? "dt" : (idx == 1 ? "dx" : idx == 2 ? "dy" : "dz");
      }
      out += "(" + to_string(c) + ")" + (factors.empty() ? "" : " " + factors);
    }
    return out;
  }

  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i == 0)
      out += pieces[i].sign < 0 ? "-" : "";
    else
      out += pieces[i].sign < 0 ? " - " : " + ";
    out += pieces[i].text;
  }
  return out;
}

const char* table_header(SpacetimeKind kind) {
  switch (kind) {
    case SpacetimeKind::Minkowski: return "Minkowski Hodge star:";
    case SpacetimeKind::Galilean: return "Galilei Hodge star:";
    case SpacetimeKind::Carrollian: return "Carroll Hodge star:";
  }
  return "";
}

}  // namespace

std::vector<TableRow> star_table_rows(SpacetimeKind kind) {
  std::vector<TableRow> rows;
  for (int degree = 0; degree <= 4; ++degree) {
    const SymbolicForm input = general_input(degree);
    const SymbolicForm output = apply_star(input, degree, kind);
    rows.push_back(TableRow{degree, input_text(degree), render_output(output, 4 - degree)});
  }
  return rows;
}

std::string star_table_text(SpacetimeKind kind) {
  std::string out = table_header(kind);
  out += "\n";
  for (const auto& row : star_table_rows(kind)) {
    out += "  *(" + row.input + ") = " + row.output + "\n";
  }
  return out;
}

}  // namespace gcstar
