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
#ifndef REALZ_CLI_IO_HPP_
#define REALZ_CLI_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "realz/realz.hpp"

namespace realz::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kInstanceSchema = "realz.instance/1";
inline constexpr const char* kReportSchema = "realz.report/1";
inline constexpr const char* kCertificateSchema = "realz.certificate/1";
inline constexpr const char* kBatchSchema = "realz.batch/1";

// Parse or I/O failure in a document; always maps to exit code 2.
class FormatError : public Error {
 public:
  using Error::Error;
};

struct Instance {
  std::string name;
  Domain domain;
  ExactCorrelationPair exact;  // entries as written, read exactly
  CorrelationPair corr;        // rounding of exact
  std::optional<std::vector<int>> torus;  // torus shape of the domain, if declared so
  std::optional<std::vector<int>> group;  // explicit translation group
  bool trivial_group = false;
  std::optional<std::vector<TestFamily>> families;
};

Json read_json_file(const std::filesystem::path& path);

Instance parse_instance(const Json& doc, const std::string& name = "instance");
Instance load_instance(const std::filesystem::path& path);

// Numbers are read through their shortest decimal spelling; strings may be
// integers, decimals or "p/q".
Rational parse_number(const Json& value, const std::string& where);

// "5" or "2x3" -> {5} / {2, 3}.
std::vector<int> parse_dims(const std::string& text);

// "singletons", "pairs", "balls:R", comma separated.
std::vector<TestFamily> parse_families(const std::string& text);

Json to_json(const Configuration& config);
Json to_json(const Distribution& dist);
Json to_json(const Distribution& dist, const ExactDistribution& exact);
Json to_json(const QuadraticPolynomial& p);
Json to_json(const ConditionVerdict& v);
Json to_json(const ConditionReport& report);
Json to_json(const SolveStats& stats);
Json to_json(const ReducedPairCorrelation& reduced);

QuadraticPolynomial polynomial_from_json(const Json& doc, std::size_t sites);

}  // namespace realz::cli

#endif  // REALZ_CLI_IO_HPP_
