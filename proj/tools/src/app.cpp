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
#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>

#include "CLI11.hpp"
#include "realz_cli/commands.hpp"

namespace realz::cli {
namespace {

namespace fs = std::filesystem;

using Runner = std::function<CommandResult(const fs::path&)>;

int combine(int a, int b) {
  if (a == kExitError || b == kExitError) return kExitError;
  if (a == kExitNegative || b == kExitNegative) return kExitNegative;
  return kExitOk;
}

CommandResult run_batch(const std::string& command, const fs::path& dir, const Runner& runner) {
  if (!fs::is_directory(dir)) throw FormatError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  std::vector<std::future<CommandResult>> pending;
  pending.reserve(files.size());
  for (const auto& f : files) pending.push_back(std::async(std::launch::async, runner, f));
  CommandResult batch;
  batch.exit_code = kExitOk;
  Json reports = Json::array();
  for (auto& p : pending) {
    CommandResult r = p.get();
    batch.exit_code = combine(batch.exit_code, r.exit_code);
    reports.push_back(std::move(r.report));
  }
  batch.report = {{"schema", kBatchSchema},
                  {"command", command},
                  {"directory", dir.filename().string()},
                  {"reports", std::move(reports)}};
  return batch;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Realizability of first and second correlation functions on finite domains",
               "realz"};
  app.require_subcommand(1);

  Flags flags;
  std::string out_path;
  std::string all_dir;
  std::optional<int> cap_override;
  std::string group;
  std::string family;

  app.add_option("--tol", flags.tolerance, "Solver tolerance")
      ->envname("REALZ_TOL")
      ->capture_default_str();
  app.add_flag("--rational", flags.rational, "Exact rational arithmetic")
      ->envname("REALZ_RATIONAL");
  app.add_option("--pivot", flags.pivot, "Pivot rule: bland or dantzig")
      ->envname("REALZ_PIVOT")
      ->capture_default_str();
  app.add_option("--cap-override", cap_override, "Replace every occupancy cap")
      ->envname("REALZ_CAP_OVERRIDE");
  app.add_option("--group", group, "Translation group: 5, 2x2 or trivial")
      ->envname("REALZ_GROUP");
  app.add_option("--family", family, "Test families: singletons,pairs,balls:R")
      ->envname("REALZ_FAMILY");
  app.add_option("--out", out_path, "Write the report here instead of stdout")
      ->envname("REALZ_OUT");
  app.add_option("--all", all_dir, "Run on every *.json instance in a directory")
      ->envname("REALZ_ALL");

  std::string instance;
  std::string certificate;
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("instance", instance, "Instance file");
    return sub;
  };
  CLI::App* check = add("check", "Decide realizability");
  CLI::App* conditions = add("conditions", "Run the necessary-condition battery");
  CLI::App* third = add("third-moment", "Minimal third factorial moment");
  CLI::App* stationary = add("stationary", "Stationary realizability under a group");
  CLI::App* certify = add("certify", "Replay a certificate against an instance");
  certify->add_option("certificate", certificate, "Report or certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  if (cap_override) flags.cap_override = cap_override;
  if (!group.empty()) flags.group = group;
  if (!family.empty()) flags.family = family;

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  Runner runner;
  if (chosen == check) {
    runner = [&](const fs::path& p) { return cmd_check(p, flags); };
  } else if (chosen == conditions) {
    runner = [&](const fs::path& p) { return cmd_conditions(p, flags); };
  } else if (chosen == third) {
    runner = [&](const fs::path& p) { return cmd_third_moment(p, flags); };
  } else if (chosen == stationary) {
    runner = [&](const fs::path& p) { return cmd_stationary(p, flags); };
  } else {
    runner = [&](const fs::path& p) { return cmd_certify(p, certificate, flags); };
  }

  CommandResult result;
  try {
    if (!all_dir.empty() == !instance.empty()) {
      throw FormatError("give exactly one of an instance file or --all DIR");
    }
    result = all_dir.empty() ? runner(instance) : run_batch(command, all_dir, runner);
  } catch (const std::exception& e) {
    err << "realz: " << e.what() << "\n";
    return kExitError;
  }

  if (result.report.value("verdict", "") == "error") {
    err << "realz: " << result.report["diagnostic"].value("message", "error") << "\n";
  }
  const std::string text = result.report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "realz: cannot write " << out_path << "\n";
      return kExitError;
    }
    file << text;
  }
  return result.exit_code;
}

}  // namespace realz::cli
