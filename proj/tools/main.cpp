// Command-line front end: star application, the four-dimensional star
// tables, the self-check suites, and electrodynamics residual extraction.
//
// Exit codes: 0 success, 1 property or residual failure, 2 input parse
// error, 3 semantic option error (unknown kind, incompatible variant, ...).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "gcstar/fields.hpp"
#include "gcstar/form_text.hpp"
#include "gcstar/hodge.hpp"
#include "gcstar/structures.hpp"
#include "gcstar/table_text.hpp"
#include "gcstar/verify.hpp"

namespace {

using namespace gcstar;

// Semantic misuse of an otherwise well-formed invocation.
struct OptionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SpacetimeKind parse_kind(const std::string& text) {
  const auto kind = kind_from_name(text);
  if (!kind) throw OptionError("unknown kind '" + text + "'");
  return *kind;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string term_label(const MultiIndex& key, int dim) {
  if (key.empty()) return "1";
  std::string out;
  for (int idx : key.indices()) {
    if (!out.empty()) out += "^";
    out += coframe_label(idx, dim);
  }
  return out;
}

int cmd_star(const std::string& form_text, const std::string& kind_text,
             const std::string& variant_text, int n, bool json) {
  const SpacetimeKind kind = parse_kind(kind_text);
  if (n < 1 || n + 1 > MultiIndex::kMaxDim) throw OptionError("spatial dimension out of range");
  const int dim = n + 1;
  const Form input = parse_form(form_text, dim);

  SpacetimeStructure s;
  switch (kind) {
    case SpacetimeKind::Minkowski: s = make_minkowski(n); break;
    case SpacetimeKind::Galilean: s = make_galilean(n); break;
    case SpacetimeKind::Carrollian: s = make_carrollian(n); break;
  }

  Form result = Form::zero(dim, dim - input.degree);
  if (variant_text == "table") {
    result = star_spliced(input, s);
  } else if (variant_text == "h") {
    switch (kind) {
      case SpacetimeKind::Minkowski:
        result = star_closed(input, s, StarVariant::MinkowskiMetric);
        break;
      case SpacetimeKind::Galilean:
        result = star_closed(input, s, StarVariant::GalileanH);
        break;
      case SpacetimeKind::Carrollian:
        result = star_closed(input, s, StarVariant::CarrollianH);
        break;
    }
  } else if (variant_text == "k") {
    switch (kind) {
      case SpacetimeKind::Minkowski:
        throw OptionError("variant 'k' is incompatible with kind 'minkowski'");
      case SpacetimeKind::Galilean:
        result = star_closed(input, s, StarVariant::GalileanK);
        break;
      case SpacetimeKind::Carrollian:
        result = star_closed(input, s, StarVariant::CarrollianK);
        break;
    }
  } else {
    throw OptionError("unknown variant '" + variant_text + "' (table, h, k)");
  }

  if (json) {
    nlohmann::json j;
    j["degree"] = result.degree;
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [key, value] : result.terms) terms[term_label(key, dim)] = to_string(value);
    j["terms"] = std::move(terms);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << print_form(result) << "\n";
  }
  return 0;
}

int cmd_table(const std::string& kind_text, bool json) {
  const SpacetimeKind kind = parse_kind(kind_text);
  if (json) {
    nlohmann::json j;
    j["kind"] = kind_name(kind);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : star_table_rows(kind)) {
      nlohmann::json r;
      r["degree"] = row.degree;
      r["input"] = row.input;
      r["output"] = row.output;
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << star_table_text(kind);
  }
  return 0;
}

int cmd_verify(const std::string& suite, int max_dim, std::uint64_t seed,
               const std::string& structure_path, bool json) {
  VerifyOptions options;
  options.max_dim = max_dim;
  options.seed = seed;
  if (max_dim < 2) throw OptionError("--max-dim must be at least 2");
  if (!structure_path.empty()) options.structure = structure_from_json(read_file(structure_path));

  std::vector<VerifyReport> reports;
  if (suite == "all") {
    reports = verify_all(options);
  } else if (suite == "oracle") {
    reports.push_back(verify_oracle(options));
  } else if (suite == "nilpotency") {
    reports.push_back(verify_nilpotency(options));
  } else if (suite == "kernels") {
    reports.push_back(verify_kernels(options));
  } else if (suite == "naturality") {
    reports.push_back(verify_naturality(options));
  } else {
    throw OptionError("unknown suite '" + suite +
                      "' (nilpotency, oracle, naturality, kernels, all)");
  }

  bool ok = true;
  if (json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& report : reports) {
      nlohmann::json r;
      r["suite"] = report.suite;
      r["cases"] = report.cases;
      r["failures"] = report.failures;
      r["ok"] = report.ok();
      ok = ok && report.ok();
      j.push_back(std::move(r));
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& report : reports) {
      std::cout << "suite " << report.suite << ": " << report.cases << " cases, "
                << report.failures.size() << " failures\n";
      for (const auto& failure : report.failures) std::cout << "  " << failure << "\n";
      ok = ok && report.ok();
    }
  }
  return ok ? 0 : 1;
}

int cmd_maxwell(const std::string& path, const std::string& kind_text) {
  const SpacetimeKind kind = parse_kind(kind_text);
  const FieldPair fields = fields_from_json(read_file(path));
  const EquationSet set = extract_equations(fields.E, fields.B, kind);
  std::cout << equations_to_json(set) << "\n";
  return set.satisfied() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hodge star operators for metric and degenerate flat spacetimes"};
  app.require_subcommand(1);

  std::string form_text, kind_text, variant_text = "table", suite, structure_path, fields_path;
  int n = 3, max_dim = 4;
  std::uint64_t seed = 0;
  bool star_json = false, table_json = false, verify_json = false, maxwell_json = false;

  auto* star_cmd = app.add_subcommand("star", "apply the star of a kind to a form literal");
  star_cmd->add_option("form", form_text, "form literal, e.g. \"dt^dx + 2/3 dy^dz\"")->required();
  star_cmd->add_option("--kind", kind_text, "minkowski, galilei, or carroll")->required();
  star_cmd->add_option("--n", n, "spatial dimensions (default 3)");
  star_cmd->add_option("--variant", variant_text,
                       "table (degreewise splice, default), h, or k");
  star_cmd->add_flag("--json", star_json, "machine-readable output");

  auto* table_cmd = app.add_subcommand("table", "print the four-dimensional star table");
  table_cmd->add_option("--kind", kind_text, "minkowski, galilei, or carroll")->required();
  table_cmd->add_flag("--json", table_json, "machine-readable output");

  auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
  verify_cmd->add_option("suite", suite, "nilpotency, oracle, naturality, kernels, or all")
      ->required();
  verify_cmd->add_option("--max-dim", max_dim, "largest spacetime dimension to sweep (default 4)");
  verify_cmd->add_option("--seed", seed, "seed for the randomized checks (default 0)");
  verify_cmd->add_option("--structure", structure_path, "JSON file with a custom structure");
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  auto* maxwell_cmd =
      app.add_subcommand("maxwell", "extract the field equations of a kind from E and B");
  maxwell_cmd->add_option("fields", fields_path, "JSON file with E and B component polynomials")
      ->required();
  maxwell_cmd->add_option("--kind", kind_text, "minkowski, galilei, or carroll")->required();
  maxwell_cmd->add_flag("--json", maxwell_json, "machine-readable output (always on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  }

  try {
    if (star_cmd->parsed()) return cmd_star(form_text, kind_text, variant_text, n, star_json);
    if (table_cmd->parsed()) return cmd_table(kind_text, table_json);
    if (verify_cmd->parsed())
      return cmd_verify(suite, max_dim, seed, structure_path, verify_json);
    if (maxwell_cmd->parsed()) {
      (void)maxwell_json;
      return cmd_maxwell(fields_path, kind_text);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OptionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
