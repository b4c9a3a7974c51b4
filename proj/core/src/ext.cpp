#include "gentaut/ext.hpp"

#include <algorithm>
#include <set>

#include "gentaut/classes.hpp"
#include "gentaut/errors.hpp"
#include "gentaut/symrep.hpp"

namespace gentaut {

namespace {

std::string one_based(int i) { return std::to_string(i + 1); }

void check_square(const DimMatrix& m, int k, const std::string& name) {
  if (static_cast<int>(m.size()) != k) {
    throw ValidationError(name + ": expected " + std::to_string(k) + " rows");
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (static_cast<int>(m[i].size()) != k) {
      throw ValidationError(name + "[" + std::to_string(i) + "]: expected " +
                            std::to_string(k) + " entries");
    }
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (m[i][j] < 0) {
        throw ValidationError(name + "[" + std::to_string(i) + "][" +
                              std::to_string(j) + "]: negative dimension");
      }
    }
  }
}

void check_table_matches(const LabeledComposition& lambda, const HomTable& table) {
  if (lambda.blocks() != table.k) {
    throw ShapeError("composition " + lambda.to_string() + " has " +
                     std::to_string(lambda.blocks()) + " blocks but the table has " +
                     std::to_string(table.k));
  }
}

DimMatrix matrix_from_json(const nlohmann::json& j, const std::string& name) {
  if (!j.is_array()) throw ParseError("\"" + name + "\" must be an array of arrays");
  DimMatrix m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("\"" + name + "\" rows must be arrays");
    auto& out = m.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number_integer()) {
        throw ParseError("\"" + name + "\" entries must be integers");
      }
      out.push_back(x.get<std::int64_t>());
    }
  }
  return m;
}

}  // namespace

// HomTable

void HomTable::validate() const {
  if (k < 1) throw ValidationError("k: must be positive");
  check_square(hom, k, "hom");
  check_square(ext1, k, "ext1");
  if (ext2) check_square(*ext2, k, "ext2");
  if (static_cast<int>(labels.size()) != k) {
    throw ValidationError("labels: expected " + std::to_string(k) + " entries");
  }
  if (static_cast<int>(slopes.size()) != k) {
    throw ValidationError("slopes: expected " + std::to_string(k) + " entries");
  }
  for (int i = 0; i < k; ++i) {
    if (hom[i][i] < 1) {
      throw ValidationError("hom[" + std::to_string(i) + "][" + std::to_string(i) +
                            "]: a nonzero bundle has nonzero endomorphisms");
    }
    for (int j = 0; j < i; ++j) {
      if (labels[i] == labels[j] && slopes[i] != slopes[j]) {
        throw ValidationError("slopes: blocks " + one_based(j) + " and " +
                              one_based(i) + " share label '" + labels[i] +
                              "' but have different slopes");
      }
    }
  }
}

nlohmann::json HomTable::to_json() const {
  nlohmann::json j = {{"k", k}, {"hom", hom}, {"ext1", ext1}, {"labels", labels}};
  nlohmann::json s = nlohmann::json::array();
  for (const auto& q : slopes) s.push_back(to_string(q));
  j["slopes"] = s;
  if (ext2) j["ext2"] = *ext2;
  j["locally_free"] = locally_free;
  return j;
}

HomTable HomTable::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("hom table must be a JSON object");
  for (const char* key : {"k", "hom", "ext1", "labels", "slopes"}) {
    if (!j.contains(key)) throw ParseError(std::string("hom table: missing \"") + key + "\"");
  }
  HomTable t;
  if (!j["k"].is_number_integer()) throw ParseError("\"k\" must be an integer");
  t.k = j["k"].get<int>();
  t.hom = matrix_from_json(j["hom"], "hom");
  t.ext1 = matrix_from_json(j["ext1"], "ext1");
  if (j.contains("ext2")) t.ext2 = matrix_from_json(j["ext2"], "ext2");
  if (!j["labels"].is_array()) throw ParseError("\"labels\" must be an array");
  for (const auto& l : j["labels"]) {
    if (!l.is_string()) throw ParseError("\"labels\" entries must be strings");
    t.labels.push_back(l.get<std::string>());
  }
  if (!j["slopes"].is_array()) throw ParseError("\"slopes\" must be an array");
  for (const auto& s : j["slopes"]) t.slopes.push_back(rational_from_json(s));
  if (j.contains("locally_free")) {
    if (!j["locally_free"].is_boolean()) throw ParseError("\"locally_free\" must be a boolean");
    t.locally_free = j["locally_free"].get<bool>();
  }
  t.validate();
  return t;
}

// Conditions

bool satisfies_homvanish(const HomTable& table, const OrderedSetPartition& partition) {
  std::vector<int> part_of(table.k, -1);
  for (std::size_t a = 0; a < partition.size(); ++a) {
    if (partition[a].empty()) return false;
    for (int i : partition[a]) {
      if (i < 0 || i >= table.k || part_of[i] != -1) return false;
      part_of[i] = static_cast<int>(a);
    }
  }
  for (int i = 0; i < table.k; ++i) {
    if (part_of[i] == -1 || !table.is_simple(i)) return false;
  }
  for (int i = 0; i < table.k; ++i) {
    for (int j = 0; j < table.k; ++j) {
      if (i == j) continue;
      if (part_of[i] == part_of[j] && table.hom[i][j] != 0) return false;
      if (part_of[i] < part_of[j] && (table.hom[j][i] != 0 || table.ext1[j][i] != 0)) {
        return false;
      }
    }
  }
  return true;
}

ConditionReport check_conditions(const HomTable& table, int max_k) {
  if (table.k > max_k) {
    throw SizeError("condition search limited to " + std::to_string(max_k) + " blocks");
  }
  const int k = table.k;
  ConditionReport report;

  report.distinct_ok = true;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (table.labels[i] == table.labels[j]) {
        report.distinct_ok = false;
        report.witnesses.push_back("blocks " + one_based(i) + " and " + one_based(j) +
                                   " share isomorphism label '" + table.labels[i] + "'");
      }
    }
  }

  bool feasible = true;
  for (int i = 0; i < k; ++i) {
    if (!table.is_simple(i)) {
      feasible = false;
      report.witnesses.push_back("E_" + one_based(i) + " is not simple: hom[" +
                                 one_based(i) + "][" + one_based(i) + "] = " +
                                 std::to_string(table.hom[i][i]));
    }
  }

  // j must sit in a part no later than i whenever Hom(E_j, E_i) or
  // Ext^1(E_j, E_i) is nonzero. Mutually forced pairs share a part.
  std::vector<std::vector<char>> before(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    before[i][i] = 1;
    for (int j = 0; j < k; ++j) {
      if (i != j && (table.hom[j][i] != 0 || table.ext1[j][i] != 0)) before[j][i] = 1;
    }
  }
  for (int m = 0; m < k; ++m) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (before[a][m] && before[m][b]) before[a][b] = 1;
      }
    }
  }

  std::vector<int> component(k, -1);
  std::vector<std::vector<int>> components;
  for (int i = 0; i < k; ++i) {
    if (component[i] != -1) continue;
    auto& members = components.emplace_back();
    for (int j = i; j < k; ++j) {
      if (before[i][j] && before[j][i]) {
        component[j] = static_cast<int>(components.size()) - 1;
        members.push_back(j);
      }
    }
  }

  for (const auto& members : components) {
    for (int a : members) {
      for (int b : members) {
        if (a >= b || (table.hom[a][b] == 0 && table.hom[b][a] == 0)) continue;
        feasible = false;
        const auto [from, to] = table.hom[a][b] != 0 ? std::pair{a, b} : std::pair{b, a};
        report.witnesses.push_back(
            "E_" + one_based(a) + " and E_" + one_based(b) +
            " are forced into one part by cyclic Hom/Ext^1 but hom[" + one_based(from) +
            "][" + one_based(to) + "] = " + std::to_string(table.hom[from][to]));
      }
    }
  }
  if (!feasible) return report;

  // Topological order on components, smallest member first among ready ones.
  const int c = static_cast<int>(components.size());
  std::vector<int> indegree(c, 0);
  std::vector<std::set<int>> succ(c);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (component[a] != component[b] && before[a][b] &&
          succ[component[a]].insert(component[b]).second) {
        ++indegree[component[b]];
      }
    }
  }
  std::set<std::pair<int, int>> ready;  // (smallest member, component)
  for (int x = 0; x < c; ++x) {
    if (indegree[x] == 0) ready.emplace(components[x].front(), x);
  }
  OrderedSetPartition order;
  while (!ready.empty()) {
    const int x = ready.begin()->second;
    ready.erase(ready.begin());
    order.push_back(components[x]);
    for (int y : succ[x]) {
      if (--indegree[y] == 0) ready.emplace(components[y].front(), y);
    }
  }
  if (!satisfies_homvanish(table, order)) {
    throw ConsistencyError("constructed vanishing partition fails verification");
  }
  report.homvanish_partition = std::move(order);
  return report;
}

// Kunneth

KunnethDims kunneth_dims(const LabeledComposition& lambda,
                         const LabeledSetPartition& coset, const HomTable& table) {
  check_table_matches(lambda, table);
  const auto source = lambda.identity_labels();
  // Degree-0 product and the degree-1 sum via prefix/suffix products.
  const int n = lambda.size();
  std::vector<BigInt> prefix(n + 1, 1), suffix(n + 1, 1);
  for (int p = 0; p < n; ++p) {
    prefix[p + 1] = prefix[p] * table.hom[source[p]][coset.label(p)];
  }
  for (int p = n - 1; p >= 0; --p) {
    suffix[p] = suffix[p + 1] * table.hom[source[p]][coset.label(p)];
  }
  KunnethDims dims{prefix[n], 0};
  for (int p = 0; p < n; ++p) {
    dims.degree1 += BigInt(table.ext1[source[p]][coset.label(p)]) * prefix[p] * suffix[p + 1];
  }
  return dims;
}

Ext1VanishingReport offdiagonal_ext1_vanishing(const LabeledComposition& lambda,
                                               const HomTable& table,
                                               std::uint64_t max_cosets) {
  check_table_matches(lambda, table);
  Ext1VanishingReport report;
  for (const auto& coset : enumerate_cosets(lambda, max_cosets)) {
    if (coset.is_identity()) continue;
    ++report.nontrivial_cosets;
    KunnethDims dims = kunneth_dims(lambda, coset, table);
    if (dims.degree1 != 0 && report.vanishes) {
      report.vanishes = false;
      report.witness = CosetKunneth{coset, std::move(dims)};
    }
  }
  return report;
}

// End dimensions

EndDimensions equivariant_end_dims(const BundleSpec& spec, const HomTable& table) {
  check_table_matches(spec.lambda(), table);
  for (int i = 0; i < table.k; ++i) {
    if (!table.is_simple(i)) {
      throw PreconditionError("E_" + one_based(i) + " is not simple (hom[" +
                              one_based(i) + "][" + one_based(i) + "] = " +
                              std::to_string(table.hom[i][i]) + ")");
    }
  }
  EndDimensions out;
  out.end0 = 1;
  out.end1 = 0;
  for (int i = 0; i < spec.k(); ++i) {
    out.multiplicities.push_back(standard_tensor_multiplicity(spec.block(i).rep));
    out.end1 += out.multiplicities.back() * table.end1_self(i);
  }
  auto vanishing = offdiagonal_ext1_vanishing(spec.lambda(), table);
  if (!vanishing.vanishes) {
    out.general_formula_applies = false;
    out.obstruction = std::move(vanishing.witness);
  }
  return out;
}

ModuliDimension moduli_component_dim(const HomTable& table, const BundleSpec& spec) {
  const EndDimensions end = equivariant_end_dims(spec, table);
  if (!end.general_formula_applies) {
    throw NotApplicableError("Ext^1 survives on coset " +
                             end.obstruction->coset.to_string() +
                             "; tangent dimension is not determined");
  }
  ModuliDimension out{0, end.end1};
  for (int i = 0; i < table.k; ++i) out.image_dim += table.end1_self(i);
  return out;
}

BigInt hom_between(const BundleSpec& a, const BundleSpec& b, const DimMatrix& cross) {
  if (!(a.lambda() == b.lambda())) throw ShapeError("specs have different compositions");
  for (int j = 0; j < a.k(); ++j) {
    if (!(a.block(j).rep == b.block(j).rep)) {
      throw ShapeError("block " + one_based(j) + " has different representations");
    }
  }
  const int k = a.k();
  if (static_cast<int>(cross.size()) != k) throw ShapeError("cross table has wrong size");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(cross[i].size()) != k) throw ShapeError("cross table has wrong size");
    for (int j = 0; j < k; ++j) {
      if (cross[i][j] < 0) throw ValidationError("cross table has a negative entry");
      if (i != j && cross[i][j] != 0) {
        throw NotApplicableError("Hom(E_" + one_based(i) + ", E'_" + one_based(j) +
                                 ") is nonzero; the identity-coset formula needs it to vanish");
      }
    }
  }
  BigInt result = 1;
  for (int j = 0; j < k; ++j) {
    result *= boost::multiprecision::pow(BigInt(cross[j][j]), a.lambda()[j]);
  }
  return result;
}

Rational slope_of_induced(const LabeledComposition& lambda,
                          std::span<const Rational> slopes) {
  if (static_cast<int>(slopes.size()) != lambda.blocks()) {
    throw ShapeError("one slope per block expected");
  }
  Rational total = 0;
  for (int i = 0; i < lambda.blocks(); ++i) total += lambda[i] * slopes[i];
  return total;
}

// Stability

bool is_diagonal_coset(const LabeledComposition& lambda, const LabeledSetPartition& coset,
                       const HomTable& table) {
  check_table_matches(lambda, table);
  const auto source = lambda.identity_labels();
  for (int p = 0; p < lambda.size(); ++p) {
    if (table.labels[source[p]] != table.labels[coset.label(p)]) return false;
  }
  return true;
}

StabilityCertificate stability_certificate(const LabeledComposition& lambda,
                                           const HomTable& table,
                                           std::uint64_t max_cosets) {
  check_table_matches(lambda, table);
  const auto source = lambda.identity_labels();
  StabilityCertificate cert;
  for (const auto& coset : enumerate_cosets(lambda, max_cosets)) {
    if (coset.is_identity()) continue;
    int found = -1;
    for (int p = 0; p < lambda.size() && found < 0; ++p) {
      const int from = source[p];
      const int to = coset.label(p);
      if (table.labels[from] != table.labels[to] && table.slopes[from] >= table.slopes[to]) {
        found = p;
      }
    }
    if (found >= 0) {
      cert.witnesses.push_back({coset, found});
    } else {
      cert.failures.push_back(coset);
    }
  }
  return cert;
}

}  // namespace gentaut
