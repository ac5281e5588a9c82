// Copyright 2026 The gfqsim Authors.
//
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


#include "cli.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "gfq/errors.hpp"
#include "output.hpp"

namespace gfqsim {

namespace {

Report domain_report(const std::string& command, const std::string& status, const std::string& message) {
  Report r;
  r.command = command;
  r.summary["status"] = status;
  r.summary["message"] = message;
  r.exit_code = kExitDomain;
  return r;
}

void emit(const Report& r, const RunConfig& cfg, Format format, const std::string& out_path,
          const std::string& svg_path, std::ostream& out, std::ostream& err) {
  const std::string text = format == Format::json ? render_json(r, cfg) : render_csv(r, cfg);
  if (out_path.empty()) {
    out << text;
    out.flush();
    if (!out) throw OutputError("standard output is not writable");
  } else {
    write_atomic(out_path, text);
  }
  if (!svg_path.empty()) {
    if (r.svg.empty()) {
      err << "gfqsim: " << r.command << " draws no figure; --svg ignored\n";
    } else {
      write_atomic(svg_path, r.svg);
    }
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gradiometric flux qubit simulator", "gfqsim"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_path, svg_path;
  app.add_option("--config", config_path, "INI configuration file (default: $GFQ_CONFIG)");
  app.add_option("--out", out_path, "write the report here instead of standard output");
  app.add_option("--svg", svg_path, "also write the command's figure as SVG");

  const std::vector<KeySpec>& keys = key_table();
  std::vector<std::string> flag_values(keys.size());
  std::vector<CLI::Option*> flag_options(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const KeySpec& k = keys[i];
    const std::string help = k.help + " [" + k.section + "." + k.key + ", default " + k.default_value + "]";
    if (k.kind == Kind::boolean) {
      flag_options[i] = app.add_flag("--" + k.flag + "{true}", flag_values[i], help)->group("Parameters");
    } else {
      flag_options[i] = app.add_option("--" + k.flag, flag_values[i], help)->group("Parameters");
    }
  }

  std::map<std::string, const CommandSpec*> by_name;
  for (const CommandSpec& c : command_table()) {
    app.add_subcommand(c.name, c.help);
    by_name[c.name] = &c;
  }
  app.add_subcommand("config", "Print the effective configuration as INI");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  RunConfig cfg;
  try {
    if (config_path.empty()) {
      if (const char* env = std::getenv("GFQ_CONFIG"); env != nullptr && *env != '\0') config_path = env;
    }
    if (!config_path.empty()) cfg.load_ini(config_path);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (flag_options[i]->count() > 0) cfg.set(keys[i].section, keys[i].key, flag_values[i]);
    }
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    err << "gfqsim: configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (command == "config") {
    try {
      if (out_path.empty()) {
        out << cfg.to_ini();
      } else {
        write_atomic(out_path, cfg.to_ini());
      }
    } catch (const OutputError& e) {
      err << "gfqsim: " << e.what() << "\n";
      return kExitIo;
    }
    return kExitOk;
  }

  const CommandSpec& spec = *by_name.at(command);
  const std::string& fmt = cfg.text("output", "format");
  const Format format = fmt == "auto" ? spec.default_format : (fmt == "json" ? Format::json : Format::csv);

  Report report;
  try {
    report = spec.run(cfg);
  } catch (const gfq::NoDoubleWell& e) {
    report = domain_report(command, "no_double_well", e.what());
  } catch (const gfq::WellsMerged& e) {
    report = domain_report(command, "wells_merged", e.what());
  } catch (const gfq::DispersiveInvalid& e) {
    report = domain_report(command, "dispersive_invalid", e.what());
  } catch (const gfq::SolverError& e) {
    err << "gfqsim: solver failure: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::invalid_argument& e) {
    err << "gfqsim: configuration error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    emit(report, cfg, format, out_path, svg_path, out, err);
  } catch (const OutputError& e) {
    err << "gfqsim: " << e.what() << "\n";
    return kExitIo;
  }

  if (report.exit_code == kExitDomain) {
    err << "gfqsim: " << command << ": " << report.summary.value("status", std::string("domain status")) << "\n";
  }
  if (report.exit_code == kExitScorecard) {
    err << "gfqsim: reproduce: failing entries:";
    for (const auto& name : report.summary["failed"]) err << " " << name.get<std::string>();
    err << "\n";
  }
  return report.exit_code;
}

}  // namespace gfqsim
