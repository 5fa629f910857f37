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
#include "realz_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>

namespace realz::cli {
namespace {

using Clock = std::chrono::steady_clock;

SolverOptions solver_options(const Flags& flags) {
  SolverOptions opts;
  opts.tolerance = flags.tolerance;
  opts.arithmetic_mode = flags.rational ? ArithmeticMode::kRational : ArithmeticMode::kFloat;
  if (flags.pivot == "bland") {
    opts.pivot_rule = PivotRule::kBland;
  } else if (flags.pivot == "dantzig") {
    opts.pivot_rule = PivotRule::kDantzig;
  } else {
    throw FormatError("pivot rule must be bland or dantzig, got \"" + flags.pivot + "\"");
  }
  opts.validate();
  return opts;
}

Json options_json(const Flags& flags) {
  auto opt = [](const auto& v) { return v ? Json(*v) : Json(nullptr); };
  return {{"tolerance", flags.tolerance},
          {"arithmetic", flags.rational ? "rational" : "float"},
          {"pivot_rule", flags.pivot},
          {"cap_override", opt(flags.cap_override)},
          {"group", opt(flags.group)},
          {"family", opt(flags.family)}};
}

Instance prepare(const std::filesystem::path& path, const Flags& flags) {
  Instance inst = load_instance(path);
  if (flags.cap_override) {
    if (*flags.cap_override < 0) throw FormatError("cap override must be nonnegative");
    inst.domain = inst.domain.with_cap(*flags.cap_override);
  }
  return inst;
}

std::vector<TestFamily> families_for(const Instance& inst, const Flags& flags) {
  if (flags.family) return parse_families(*flags.family);
  if (inst.families) return *inst.families;
  return {TestFamily::singletons(), TestFamily::pairs()};
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const FormatError*>(&e)) return "format";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const CapacityError*>(&e)) return "capacity";
  if (dynamic_cast<const IterationLimitError*>(&e)) return "iteration_limit";
  if (dynamic_cast<const NumericalError*>(&e)) return "numerical";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const InvalidInputError*>(&e)) return "invalid_input";
  return "internal";
}

// Runs body, stamps the common fields and turns exceptions into exit 2.
CommandResult guarded(const std::string& command, const std::filesystem::path& instance,
                      const Flags& flags, const std::function<CommandResult()>& body) {
  const auto start = Clock::now();
  CommandResult result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result.exit_code = kExitError;
    result.report = {{"verdict", "error"},
                     {"diagnostic", {{"kind", error_kind(e)}, {"message", e.what()}}}};
  }
  Json report = {{"schema", kReportSchema},
                 {"command", command},
                 {"instance", instance.filename().string()}};
  report.update(result.report);
  report["options"] = options_json(flags);
  report["timings"] = {
      {"total_seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
  result.report = std::move(report);
  return result;
}

void describe(Json& report, const RealizationResult& r) {
  if (r.feasible()) {
    report["verdict"] = "feasible";
    const auto& part = r.feasible_part();
    report["witness"] =
        part.exact_witness ? to_json(part.witness, *part.exact_witness) : to_json(part.witness);
  } else {
    report["verdict"] = "infeasible";
    report["certificate"] = to_json(r.certificate());
    report["pairing"] = r.infeasible_part().pairing;
    report["shortcut"] = r.infeasible_part().shortcut;
  }
  report["stats"] = to_json(r.stats);
}

std::optional<std::vector<int>> group_dims(const Instance& inst, const Flags& flags,
                                           bool& trivial) {
  trivial = false;
  if (flags.group) {
    if (*flags.group == "trivial") {
      trivial = true;
      return std::nullopt;
    }
    return parse_dims(*flags.group);
  }
  if (inst.trivial_group) {
    trivial = true;
    return std::nullopt;
  }
  if (inst.group) return inst.group;
  if (inst.torus) return inst.torus;
  throw FormatError("stationary: no group given; use --group or an instance \"group\"");
}

}  // namespace

CommandResult cmd_check(const std::filesystem::path& path, const Flags& flags) {
  return guarded("check", path, flags, [&] {
    const SolverOptions opts = solver_options(flags);
    const Instance inst = prepare(path, flags);
    const RealizationResult r = flags.rational
                                    ? check_realizability(inst.domain, inst.exact, opts)
                                    : check_realizability(inst.domain, inst.corr, opts);
    CommandResult out;
    describe(out.report, r);
    out.report["conditions"] = to_json(
        run_battery(inst.domain, inst.corr, families_for(inst, flags), opts.enumeration_limit));
    out.exit_code = r.feasible() ? kExitOk : kExitNegative;
    return out;
  });
}

CommandResult cmd_conditions(const std::filesystem::path& path, const Flags& flags) {
  return guarded("conditions", path, flags, [&] {
    const Instance inst = prepare(path, flags);
    const auto report = run_battery(inst.domain, inst.corr, families_for(inst, flags));
    CommandResult out;
    out.report["verdict"] = report.overall ? "pass" : "fail";
    out.report["conditions"] = to_json(report);
    out.exit_code = report.overall ? kExitOk : kExitNegative;
    return out;
  });
}

CommandResult cmd_third_moment(const std::filesystem::path& path, const Flags& flags) {
  return guarded("third-moment", path, flags, [&] {
    const SolverOptions opts = solver_options(flags);
    const Instance inst = prepare(path, flags);
    const ThirdMomentResult r = flags.rational
                                    ? minimal_third_moment(inst.domain, inst.exact, opts)
                                    : minimal_third_moment(inst.domain, inst.corr, opts);
    CommandResult out;
    if (r.finite()) {
      const auto& fin = r.finite_part();
      out.report["verdict"] = "finite";
      out.report["r_star"] = fin.r_star;
      if (fin.exact_r_star) out.report["r_star_exact"] = format_rational(*fin.exact_r_star);
      out.report["witness"] =
          fin.exact_witness ? to_json(fin.witness, *fin.exact_witness) : to_json(fin.witness);
      out.report["optimality_certificate"] = {
          {"quadratic", to_json(fin.optimality_certificate.quadratic)},
          {"f3", fin.optimality_certificate.f3}};
      out.exit_code = kExitOk;
    } else {
      out.report["verdict"] = "infeasible";
      out.report["certificate"] = to_json(r.infeasible_part().certificate);
      out.report["pairing"] = r.infeasible_part().pairing;
      out.report["shortcut"] = r.infeasible_part().shortcut;
      out.exit_code = kExitNegative;
    }
    out.report["stats"] = to_json(r.stats);
    return out;
  });
}

CommandResult cmd_stationary(const std::filesystem::path& path, const Flags& flags) {
  return guarded("stationary", path, flags, [&] {
    const SolverOptions opts = solver_options(flags);
    const Instance inst = prepare(path, flags);
    bool trivial = false;
    const auto dims = group_dims(inst, flags, trivial);
    const FiniteGroup group = trivial ? FiniteGroup::trivial(inst.domain.size())
                                      : translation_group(*dims);
    if (group.sites() != inst.domain.size()) {
      throw FormatError("group acts on " + std::to_string(group.sites()) +
                        " sites but the domain has " + std::to_string(inst.domain.size()));
    }
    const bool stationary = flags.rational ? is_stationary(inst.exact, group)
                                           : is_stationary(inst.corr, group);
    if (!stationary) {
      throw PreconditionError("correlations are not invariant under the group");
    }
    const RealizationResult r =
        flags.rational ? check_realizability_stationary(inst.domain, inst.exact, group, opts)
                       : check_realizability_stationary(inst.domain, inst.corr, group, opts);
    CommandResult out;
    out.report["group"] = {{"dims", dims ? Json(*dims) : Json(nullptr)},
                           {"order", group.order()}};
    describe(out.report, r);
    if (dims && inst.corr.rho1[0] > 0.0) {
      out.report["reduced"] = to_json(reduce_pair_correlation(inst.corr, *dims));
    } else {
      out.report["reduced"] = nullptr;
    }
    out.exit_code = r.feasible() ? kExitOk : kExitNegative;
    return out;
  });
}

CommandResult cmd_certify(const std::filesystem::path& path,
                          const std::filesystem::path& certificate, const Flags& flags) {
  return guarded("certify", path, flags, [&] {
    if (!(flags.tolerance > 0.0)) throw FormatError("tolerance must be positive");
    const Instance inst = prepare(path, flags);
    const Json doc = read_json_file(certificate);
    const std::string schema = doc.value("schema", "");
    Json poly;
    if (schema == kReportSchema || schema == kCertificateSchema) {
      if (!doc.contains("certificate")) {
        throw FormatError(certificate.filename().string() + ": no certificate present");
      }
      poly = doc.at("certificate");
    } else {
      throw FormatError(certificate.filename().string() + ": schema must be \"" +
                        kReportSchema + "\" or \"" + kCertificateSchema + "\"");
    }
    const QuadraticPolynomial p = polynomial_from_json(poly, inst.domain.size());
    double min_value = INFINITY;
    for_each_configuration(inst.domain, [&](const Configuration& c) {
      min_value = std::min(min_value, eval_quadratic(p, c));
    });
    const bool valid = verify_certificate(inst.domain, p, inst.corr, flags.tolerance);
    CommandResult out;
    out.report["verdict"] = valid ? "valid" : "invalid";
    out.report["certificate_file"] = certificate.filename().string();
    out.report["min_value"] = min_value;
    out.report["pairing"] = pairing(p, inst.corr);
    out.exit_code = valid ? kExitOk : kExitNegative;
    return out;
  });
}

}  // namespace realz::cli
