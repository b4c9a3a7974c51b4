#include "cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "cli/spec_document.hpp"
#include "gentaut/errors.hpp"
#include "gentaut/symrep.hpp"
#include "gentaut/verify.hpp"

namespace gentaut::cli {

namespace {

using nlohmann::json;

json integer_json(const BigInt& z) { return rational_to_json(Rational(z)); }

std::string render_partition(const OrderedSetPartition& partition) {
  std::string out = "(";
  for (std::size_t a = 0; a < partition.size(); ++a) {
    if (a) out += ",";
    out += "{";
    for (std::size_t b = 0; b < partition[a].size(); ++b) {
      if (b) out += ",";
      out += std::to_string(partition[a][b] + 1);
    }
    out += "}";
  }
  return out + ")";
}

const HomTable& require_table(const SpecDocument& doc) {
  if (!doc.hom_table) throw ValidationError("hom_table: required by this command");
  return *doc.hom_table;
}

void run_chern(const std::string& path, bool as_json, std::ostream& out) {
  const SpecDocument doc = parse_spec_file(path);
  const DivisorClass cls = c1(doc.spec);
  if (as_json) {
    const json j = {{"class", cls.to_json()},
                    {"rank", integer_json(rank_G(doc.spec))},
                    {"spec_echo", doc.echo()}};
    out << j.dump(2) << "\n";
  } else {
    out << cls.to_string() << "\n";
  }
}

void run_rank(const std::string& path, std::ostream& out) {
  const SpecDocument doc = parse_spec_file(path);
  out << to_string(rank_G(doc.spec)) << "\n";
}

void run_ext(const std::string& path, bool as_json, std::ostream& out) {
  const SpecDocument doc = parse_spec_file(path);
  const HomTable& table = require_table(doc);
  const EndDimensions end = equivariant_end_dims(doc.spec, table);

  std::optional<ModuliDimension> moduli;
  if (end.general_formula_applies) moduli = moduli_component_dim(table, doc.spec);

  if (as_json) {
    json mult = json::array();
    for (const auto& m : end.multiplicities) mult.push_back(integer_json(m));
    json j = {{"end0", integer_json(end.end0)},
              {"end1", integer_json(end.end1)},
              {"multiplicities", mult},
              {"offdiagonal_ext1_vanishes", end.general_formula_applies}};
    if (end.obstruction) {
      j["obstruction"] = {{"coset", end.obstruction->coset.to_string()},
                          {"degree0", integer_json(end.obstruction->dims.degree0)},
                          {"degree1", integer_json(end.obstruction->dims.degree1)}};
    }
    if (moduli) {
      j["moduli"] = {{"image_dim", integer_json(moduli->image_dim)},
                     {"tangent_dim", integer_json(moduli->tangent_dim)},
                     {"component", moduli->is_component()}};
    }
    out << j.dump(2) << "\n";
    return;
  }

  out << "end0 " << to_string(end.end0) << "\n";
  out << "end1 " << to_string(end.end1) << "\n";
  if (!end.general_formula_applies) {
    out << "warning: Ext^1 survives on coset " << end.obstruction->coset.to_string()
        << " (degree1 " << to_string(end.obstruction->dims.degree1)
        << "); end1 is the identity-coset contribution only\n";
    return;
  }
  if (moduli->is_component()) {
    out << "moduli dimension " << to_string(moduli->tangent_dim) << "\n";
  } else {
    out << "moduli dimension mismatch: image " << to_string(moduli->image_dim) << " vs tangent "
        << to_string(moduli->tangent_dim) << "\n";
  }
}

void run_conditions(const std::string& path, std::ostream& out) {
  const SpecDocument doc = parse_spec_file(path);
  const ConditionReport report = check_conditions(require_table(doc));
  out << "distinct " << (report.distinct_ok ? "yes" : "no") << "\n";
  if (report.homvanish_partition) {
    out << "homvanish " << render_partition(*report.homvanish_partition) << " l="
        << report.homvanish_partition->size() << "\n";
  } else {
    out << "homvanish none\n";
  }
  for (const auto& w : report.witnesses) out << "witness: " << w << "\n";
}

void run_stability(const std::string& path, std::ostream& out) {
  const SpecDocument doc = parse_spec_file(path);
  const StabilityCertificate cert =
      stability_certificate(doc.spec.lambda(), require_table(doc));
  for (const auto& w : cert.witnesses) {
    out << w.coset.to_string() << ": position " << w.position + 1 << "\n";
  }
  for (const auto& f : cert.failures) out << f.to_string() << ": no witness (diagonal)\n";
  if (cert.certified()) {
    out << "certified for " << cert.witnesses.size() << " nontrivial cosets\n";
  } else {
    out << "not certified: " << cert.failures.size() << " diagonal cosets\n";
  }
}

void run_char(int n, const std::vector<int>& diagram, std::ostream& out) {
  const CharacterTable& table = character_table(n);
  if (!diagram.empty()) {
    const YoungDiagram d{Partition(diagram)};
    if (d.size() != n) {
      throw ValidationError("--diagram: " + d.to_string() + " is not a partition of " +
                            std::to_string(n));
    }
    for (const auto& cls : table.classes()) {
      out << cls.type.to_string() << " " << table.value(d, cls.type) << "\n";
    }
    return;
  }
  std::vector<std::vector<std::string>> cells;
  cells.push_back({""});
  for (const auto& cls : table.classes()) cells.back().push_back(cls.type.to_string());
  for (std::size_t r = 0; r < table.irreducibles().size(); ++r) {
    cells.push_back({table.irreducibles()[r].to_string()});
    for (std::size_t c = 0; c < table.classes().size(); ++c) {
      cells.back().push_back(std::to_string(table.at(r, c)));
    }
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    out << line << "\n";
  }
}

GeneratingVariant parse_variant(const std::string& name) {
  if (name == "trivial") return GeneratingVariant::Trivial;
  if (name == "sign") return GeneratingVariant::Sign;
  return GeneratingVariant::Regular;  // CLI11 restricts the choices
}

void run_generating(int n, const std::vector<int>& ranks, const std::vector<std::string>& symbols,
                    const std::string& variant, const std::vector<int>& coeff,
                    std::ostream& out) {
  if (ranks.size() != symbols.size()) {
    throw ValidationError("--symbols: expected one symbol per rank");
  }
  std::vector<GeneratingInput> inputs;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    inputs.push_back({ranks[i], DivisorClass::parse(symbols[i])});
  }
  const ClassPolynomial poly = generating_polynomial(n, inputs, parse_variant(variant));
  if (coeff.empty()) {
    out << to_string(poly);
    return;
  }
  if (coeff.size() != ranks.size()) {
    throw ValidationError("--coeff: expected " + std::to_string(ranks.size()) + " exponents");
  }
  out << coefficient_of(poly, coeff).to_string() << "\n";
}

int run_verify(int max_n, std::ostream& out) {
  const auto results = run_verification(max_n);
  std::ostringstream buffer;
  for (const auto& r : results) {
    buffer << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.passed) buffer << ": " << r.detail;
    buffer << "\n";
  }
  const bool ok = all_passed(results);
  buffer << (ok ? "all oracles passed" : "oracle mismatch") << "\n";
  out << buffer.str();
  return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of generalised tautological bundles", "gentaut"};
  app.require_subcommand(1);

  std::string spec_path;
  bool as_json = false;

  auto* chern = app.add_subcommand("chern", "First Chern class c1 = B - R delta");
  chern->add_option("--spec", spec_path, "Input JSON file")->required();
  chern->add_flag("--json", as_json, "Emit JSON");

  auto* rank = app.add_subcommand("rank", "Rank of the bundle");
  rank->add_option("--spec", spec_path, "Input JSON file")->required();

  auto* ext = app.add_subcommand("ext", "Equivariant End dimensions and moduli tangent dimension");
  ext->add_option("--spec", spec_path, "Input JSON file with hom_table")->required();
  ext->add_flag("--json", as_json, "Emit JSON");

  auto* conditions = app.add_subcommand("conditions", "Label distinctness and Hom/Ext^1 vanishing");
  conditions->add_option("--spec", spec_path, "Input JSON file with hom_table")->required();

  auto* stability = app.add_subcommand("stability", "Per-coset Hom-vanishing certificates");
  stability->add_option("--spec", spec_path, "Input JSON file with hom_table")->required();

  int n = 0;
  std::vector<int> diagram;
  auto* chr = app.add_subcommand("char", "Character table of S_n");
  chr->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, kDefaultMaxDegree));
  chr->add_option("--diagram", diagram, "Single row, e.g. 2,1")->delimiter(',');

  std::vector<int> ranks;
  std::vector<std::string> symbols;
  std::string variant;
  std::vector<int> coeff;
  auto* gen = app.add_subcommand("generating", "Generating polynomial in t_1..t_k");
  gen->add_option("--n", n, "Number of points")->required()->check(CLI::Range(2, 64));
  gen->add_option("--ranks", ranks, "Comma-separated ranks")->required()->delimiter(',');
  gen->add_option("--symbols", symbols, "Comma-separated c1 symbols")->required()->delimiter(',');
  gen->add_option("--variant", variant, "trivial, sign or regular")
      ->required()
      ->check(CLI::IsMember({"trivial", "sign", "regular"}));
  gen->add_option("--coeff", coeff, "Exponents of one coefficient")->delimiter(',');

  int max_n = 6;
  auto* verify = app.add_subcommand("verify", "Run all closed-form versus oracle checks");
  verify->add_option("--max-n", max_n, "Largest degree swept")->check(CLI::Range(1, 7));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kExitUsage;
  }

  try {
    if (chern->parsed()) run_chern(spec_path, as_json, out);
    if (rank->parsed()) run_rank(spec_path, out);
    if (ext->parsed()) run_ext(spec_path, as_json, out);
    if (conditions->parsed()) run_conditions(spec_path, out);
    if (stability->parsed()) run_stability(spec_path, out);
    if (chr->parsed()) run_char(n, diagram, out);
    if (gen->parsed()) run_generating(n, ranks, symbols, variant, coeff, out);
    if (verify->parsed()) return run_verify(max_n, out);
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInconsistent;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace gentaut::cli
