// Copyright 2026 The Realz Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "realz_cli/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace realz::cli {
namespace {

const Json& require(const Json& doc, const char* key, const std::string& where) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw FormatError(where + ": missing \"" + key + "\"");
  }
  return doc.at(key);
}

int parse_int(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw FormatError(where + ": expected an integer");
  return value.get<int>();
}

double parse_real(const Json& value, const std::string& where) {
  if (!value.is_number()) throw FormatError(where + ": expected a number");
  return value.get<double>();
}

std::vector<int> parse_int_list(const Json& value, const std::string& where) {
  if (!value.is_array()) throw FormatError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t k = 0; k < value.size(); ++k) {
    out.push_back(parse_int(value[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

int parse_cap(const Json& value, const std::string& where) {
  if (value.is_null()) return kUnboundedCap;
  if (value.is_string() && value.get<std::string>() == "inf") return kUnboundedCap;
  const int cap = parse_int(value, where);
  if (cap < 0) throw FormatError(where + ": caps must be nonnegative");
  return cap;
}

Domain parse_domain(const Json& doc, std::optional<std::vector<int>>& torus) {
  if (!doc.is_object()) throw FormatError("domain: expected an object");
  std::vector<int> caps;
  std::optional<double> exclusion;
  if (doc.contains("exclusion_diameter") && !doc.at("exclusion_diameter").is_null()) {
    exclusion = parse_real(doc.at("exclusion_diameter"), "domain.exclusion_diameter");
  }

  if (doc.contains("torus")) {
    torus = parse_int_list(doc.at("torus"), "domain.torus");
    const Json& cap = require(doc, "caps", "domain");
    if (!cap.is_number_integer()) {
      throw FormatError("domain.caps: a torus takes a single integer cap");
    }
    Domain t = Domain::torus(*torus, parse_cap(cap, "domain.caps"), exclusion);
    if (!doc.contains("total_cap") && !doc.contains("total_exact")) return t;
    DomainSpec spec{t.labels(), t.distance(), t.caps(), exclusion, {}, {}};
    if (doc.contains("total_cap")) spec.total_cap = parse_int(doc.at("total_cap"), "domain.total_cap");
    if (doc.contains("total_exact")) {
      spec.total_exact = parse_int(doc.at("total_exact"), "domain.total_exact");
    }
    return Domain(std::move(spec));
  }

  DomainSpec spec;
  std::optional<std::size_t> sites;
  if (doc.contains("sites")) {
    const int s = parse_int(doc.at("sites"), "domain.sites");
    if (s <= 0) throw FormatError("domain.sites: must be positive");
    sites = static_cast<std::size_t>(s);
  }
  if (doc.contains("labels")) {
    const Json& labels = doc.at("labels");
    if (!labels.is_array()) throw FormatError("domain.labels: expected an array");
    for (const auto& l : labels) {
      if (!l.is_string()) throw FormatError("domain.labels: expected strings");
      spec.labels.push_back(l.get<std::string>());
    }
    if (!sites) sites = spec.labels.size();
  }
  if (doc.contains("distance")) {
    const Json& rows = doc.at("distance");
    if (!rows.is_array()) throw FormatError("domain.distance: expected an array of rows");
    std::vector<std::vector<double>> values;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::string where = "domain.distance[" + std::to_string(r) + "]";
      if (!rows[r].is_array()) throw FormatError(where + ": expected an array");
      std::vector<double> row;
      for (const auto& x : rows[r]) row.push_back(parse_real(x, where));
      values.push_back(std::move(row));
    }
    spec.distance = Matrix<double>::from_rows(values);
    if (!sites) sites = values.size();
  }
  if (!sites) throw FormatError("domain: give sites, labels, distance or torus");
  if (!doc.contains("distance")) {
    spec.distance = Matrix<double>(*sites, *sites, 1.0);
    for (std::size_t i = 0; i < *sites; ++i) spec.distance(i, i) = 0.0;
  }
  const Json& cap = require(doc, "caps", "domain");
  if (cap.is_array()) {
    for (std::size_t k = 0; k < cap.size(); ++k) {
      spec.caps.push_back(parse_cap(cap[k], "domain.caps[" + std::to_string(k) + "]"));
    }
  } else {
    spec.caps.assign(*sites, parse_cap(cap, "domain.caps"));
  }
  spec.exclusion_diameter = exclusion;
  if (doc.contains("total_cap")) spec.total_cap = parse_int(doc.at("total_cap"), "domain.total_cap");
  if (doc.contains("total_exact")) {
    spec.total_exact = parse_int(doc.at("total_exact"), "domain.total_exact");
  }
  return Domain(std::move(spec));
}

ExactCorrelationPair parse_correlations(const Json& doc, std::size_t sites) {
  const Json& rho1 = require(doc, "rho1", "correlations");
  const Json& rho2 = require(doc, "rho2", "correlations");
  if (!rho1.is_array() || rho1.size() != sites) {
    throw FormatError("correlations.rho1: expected " + std::to_string(sites) + " entries");
  }
  if (!rho2.is_array() || rho2.size() != sites) {
    throw FormatError("correlations.rho2: expected " + std::to_string(sites) + " rows");
  }
  ExactCorrelationPair corr{{}, Matrix<Rational>(sites, sites)};
  for (std::size_t i = 0; i < sites; ++i) {
    corr.rho1.push_back(parse_number(rho1[i], "correlations.rho1[" + std::to_string(i) + "]"));
    const std::string where = "correlations.rho2[" + std::to_string(i) + "]";
    if (!rho2[i].is_array() || rho2[i].size() != sites) {
      throw FormatError(where + ": expected " + std::to_string(sites) + " entries");
    }
    for (std::size_t j = 0; j < sites; ++j) corr.rho2(i, j) = parse_number(rho2[i][j], where);
  }
  return corr;
}

TestFamily parse_family(const Json& doc, const std::string& where) {
  const Json& kind = require(doc, "kind", where);
  if (!kind.is_string()) throw FormatError(where + ".kind: expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "singletons") return TestFamily::singletons();
  if (k == "pairs") return TestFamily::pairs();
  if (k == "balls") return TestFamily::balls(parse_real(require(doc, "radius", where), where));
  if (k == "custom") {
    const Json& fs = require(doc, "functions", where);
    if (!fs.is_array()) throw FormatError(where + ".functions: expected an array");
    std::vector<TestFunction> functions;
    for (const auto& f : fs) {
      const Json& id = require(f, "id", where);
      const Json& values = require(f, "values", where);
      if (!id.is_string() || !values.is_array()) {
        throw FormatError(where + ": custom functions need a string id and a values array");
      }
      TestFunction fn{id.get<std::string>(), {}};
      for (const auto& v : values) fn.values.push_back(parse_real(v, where));
      functions.push_back(std::move(fn));
    }
    return TestFamily::custom(std::move(functions));
  }
  throw FormatError(where + ".kind: unknown family \"" + k + "\"");
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Rational parse_number(const Json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return Rational(value.get<long long>());
    if (value.is_number_unsigned()) return Rational(value.get<unsigned long long>());
    if (value.is_number_float()) return parse_rational(value.dump());
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const InvalidInputError& e) {
    throw FormatError(where + ": " + e.what());
  }
  throw FormatError(where + ": expected a number or a \"p/q\" string");
}

Instance parse_instance(const Json& doc, const std::string& name) {
  if (!doc.is_object()) throw FormatError(name + ": expected a JSON object");
  const Json& schema = require(doc, "schema", name);
  if (!schema.is_string() || schema.get<std::string>() != kInstanceSchema) {
    throw FormatError(name + ": schema must be \"" + std::string(kInstanceSchema) + "\"");
  }
  std::optional<std::vector<int>> torus;
  Domain domain = parse_domain(require(doc, "domain", name), torus);
  ExactCorrelationPair exact = parse_correlations(require(doc, "correlations", name),
                                                  domain.size());
  CorrelationPair corr = to_double(exact);

  std::optional<std::vector<int>> group;
  bool trivial = false;
  if (doc.contains("group") && !doc.at("group").is_null()) {
    const Json& g = doc.at("group");
    if (g.is_string() && g.get<std::string>() == "trivial") {
      trivial = true;
    } else if (g.is_object() && g.contains("torus")) {
      group = parse_int_list(g.at("torus"), "group.torus");
    } else {
      throw FormatError("group: expected \"trivial\" or {\"torus\": [...]}");
    }
  }

  std::optional<std::vector<TestFamily>> families;
  if (doc.contains("families")) {
    const Json& fs = doc.at("families");
    if (!fs.is_array()) throw FormatError("families: expected an array");
    families.emplace();
    for (std::size_t k = 0; k < fs.size(); ++k) {
      families->push_back(parse_family(fs[k], "families[" + std::to_string(k) + "]"));
    }
  }
  return Instance{name,  std::move(domain), std::move(exact), std::move(corr),
                  torus, group,             trivial,          std::move(families)};
}

Instance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_json_file(path), path.filename().string());
}

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream ss(text);
  std::string part;
  if (!text.empty() && text.back() == 'x') {
    throw FormatError("group: expected dimensions like 5 or 2x3, got \"" + text + "\"");
  }
  while (std::getline(ss, part, 'x')) {
    std::size_t used = 0;
    int d = 0;
    try {
      d = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty() || d <= 0) {
      throw FormatError("group: expected dimensions like 5 or 2x3, got \"" + text + "\"");
    }
    dims.push_back(d);
  }
  if (dims.empty()) throw FormatError("group: empty dimension list");
  return dims;
}

std::vector<TestFamily> parse_families(const std::string& text) {
  std::vector<TestFamily> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part == "singletons") {
      out.push_back(TestFamily::singletons());
    } else if (part == "pairs") {
      out.push_back(TestFamily::pairs());
    } else if (part.rfind("balls:", 0) == 0) {
      try {
        out.push_back(TestFamily::balls(std::stod(part.substr(6))));
      } catch (const std::exception&) {
        throw FormatError("family: bad radius in \"" + part + "\"");
      }
    } else {
      throw FormatError("family: unknown family \"" + part + "\"");
    }
  }
  return out;
}

Json to_json(const Configuration& config) { return Json(config.occupancy); }

Json to_json(const Distribution& dist) {
  Json atoms = Json::array();
  for (const auto& atom : canonicalize(dist).atoms) {
    atoms.push_back({{"occupancy", to_json(atom.config)}, {"weight", atom.weight}});
  }
  return {{"atoms", std::move(atoms)}};
}

Json to_json(const Distribution& dist, const ExactDistribution& exact) {
  Json atoms = Json::array();
  const auto sorted = canonicalize(dist);
  const auto sorted_exact = canonicalize(exact);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    atoms.push_back({{"occupancy", to_json(sorted.atoms[k].config)},
                     {"weight", sorted.atoms[k].weight},
                     {"weight_exact", format_rational(sorted_exact.atoms[k].weight)}});
  }
  return {{"atoms", std::move(atoms)}};
}

Json to_json(const QuadraticPolynomial& p) {
  Json f2 = Json::array();
  for (std::size_t i = 0; i < p.f2.rows(); ++i) {
    f2.push_back(std::vector<double>(p.f2.row(i).begin(), p.f2.row(i).end()));
  }
  return {{"f0", p.f0}, {"f1", p.f1}, {"f2", std::move(f2)}};
}

Json to_json(const ConditionVerdict& v) {
  return {{"condition", v.condition_name}, {"test_function", v.test_function_id},
          {"lhs", v.lhs},                  {"rhs", v.rhs},
          {"margin", v.margin},            {"passed", v.passed},
          {"delegated", v.delegated}};
}

Json to_json(const ConditionReport& report) {
  Json verdicts = Json::array();
  for (const auto& v : report.verdicts) verdicts.push_back(to_json(v));
  return {{"overall", report.overall},
          {"worst", report.worst ? to_json(*report.worst) : Json(nullptr)},
          {"verdicts", std::move(verdicts)}};
}

Json to_json(const SolveStats& stats) {
  return {{"configurations", stats.configurations},
          {"lp_rows", stats.lp_rows},
          {"lp_columns", stats.lp_columns},
          {"iterations", stats.iterations}};
}

Json to_json(const ReducedPairCorrelation& reduced) {
  Json table = Json::array();
  std::vector<int> d(reduced.dims.size(), 0);
  for (double g : reduced.g2) {
    table.push_back({{"displacement", d}, {"g2", g}});
    for (std::size_t a = d.size(); a-- > 0;) {
      if (++d[a] < reduced.dims[a]) break;
      d[a] = 0;
    }
  }
  return {{"rho", reduced.rho}, {"dims", reduced.dims}, {"g2", std::move(table)}};
}

QuadraticPolynomial polynomial_from_json(const Json& doc, std::size_t sites) {
  const Json& f1 = require(doc, "f1", "certificate");
  const Json& f2 = require(doc, "f2", "certificate");
  auto p = QuadraticPolynomial::zero(sites);
  p.f0 = to_double(parse_number(require(doc, "f0", "certificate"), "certificate.f0"));
  if (!f1.is_array() || f1.size() != sites) {
    throw FormatError("certificate.f1: expected " + std::to_string(sites) + " entries");
  }
  if (!f2.is_array() || f2.size() != sites) {
    throw FormatError("certificate.f2: expected " + std::to_string(sites) + " rows");
  }
  for (std::size_t i = 0; i < sites; ++i) {
    p.f1[i] = to_double(parse_number(f1[i], "certificate.f1"));
    if (!f2[i].is_array() || f2[i].size() != sites) {
      throw FormatError("certificate.f2: expected square rows");
    }
    for (std::size_t j = 0; j < sites; ++j) {
      p.f2(i, j) = to_double(parse_number(f2[i][j], "certificate.f2"));
    }
  }
  return p;
}

}  // namespace realz::cli
