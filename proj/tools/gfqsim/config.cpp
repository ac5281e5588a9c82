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

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

#include "gfq/errors.hpp"

namespace gfqsim {

namespace {

using gfq::ConfigError;

std::vector<KeySpec> make_table() {
  const Kind R = Kind::real, I = Kind::integer, B = Kind::boolean, T = Kind::text, L = Kind::real_list;
  return {
      {"circuit", "ej_ratio", "ej-ratio", R, "2", "branch to alpha-loop junction energy ratio", {}},
      {"circuit", "f1", "f1", R, "0.94", "left trapping-loop flux (flux quanta)", {}},
      {"circuit", "f2", "f2", R, "0.94", "right trapping-loop flux (flux quanta)", {}},
      {"circuit", "f_alpha", "f-alpha", R, "0.2", "alpha-loop flux (flux quanta)", {}},
      {"circuit", "n1", "n1", I, "-1", "left winding number", {}},
      {"circuit", "n2", "n2", I, "-1", "right winding number", {}},
      {"circuit", "n", "n", I, "1", "alpha-loop winding number", {}},
      {"circuit", "stiffness_loop", "stiffness-loop", R, "1000", "Phi0^2/(4 L_eff E_J)", {}},
      {"circuit", "stiffness_alpha", "stiffness-alpha", R, "3000", "Phi0^2/(4 (L_K+L_g) E_J)", {}},
      {"circuit", "ej_over_ec", "ej-over-ec", R, "40", "E_J / E_C", {}},
      {"inductance", "kinetic", "l-kinetic", R, "1", "L_K", {}},
      {"inductance", "kinetic_branch", "l-kinetic-branch", R, "0.5", "L'_K", {}},
      {"inductance", "kinetic_center", "l-kinetic-center", R, "0.25", "L~_K", {}},
      {"inductance", "geometric", "l-geometric", R, "4", "L_g", {}},
      {"inductance", "geometric_branch", "l-geometric-branch", R, "2.5", "L'_g", {}},
      {"inductance", "geometric_center", "l-geometric-center", R, "1.75", "L~_g", {}},
      {"inductance", "mutual", "l-mutual", R, "2", "L_M", {}},
      {"inductance", "mutual_branch", "l-mutual-branch", R, "1", "L'_M", {}},
      {"drive", "beta0", "beta0", R, "0", "alpha-loop bias Phi0 I0/(2 pi E_J)", {}},
      {"drive", "beta_branch", "beta-branch", R, "0", "branch bias Phi0 I'0/(2 pi E_J)", {}},
      {"physical", "l_eff_ph", "l-eff-ph", R, "15", "L_eff in pH for SI currents", {}},
      {"physical", "ej_over_h_ghz", "ej-over-h-ghz", R, "200", "E_J/h in GHz", {}},
      {"solver", "potential", "potential", T, "reduced", "potential for minima/landscape/cut", {"reduced", "full"}},
      {"solver", "grid_phi_p", "grid-phi-p", I, "201", "landscape points along phi_p", {}},
      {"solver", "grid_phitilde_m", "grid-phitilde-m", I, "201", "landscape points along phitilde_m", {}},
      {"solver", "cut_points", "cut-points", I, "801", "samples of the double-well cut", {}},
      {"solver", "seeds", "seeds", I, "17", "multi-start seeds per axis", {}},
      {"solver", "m_prime", "m-prime", T, "auto", "trapping winding m' (integer or auto)", {}},
      {"gap", "points", "gap-points", I, "2001", "1D grid points including walls", {}},
      {"gap", "nx", "gap-nx", I, "201", "2D grid interior points along phi_p", {}},
      {"gap", "ny", "gap-ny", I, "201", "2D grid interior points along phitilde_m", {}},
      {"gap", "solver", "gap-solver", T, "both", "1d, 2d or both", {"1d", "2d", "both"}},
      {"gap", "sweep_f_alpha", "gap-sweep", L, "0.1,0.15,0.2,0.25", "f_alpha values of the 1D sweep", {}},
      {"gap", "band_min_ghz", "gap-band-min", R, "0.3", "lower edge of the accepted gap band", {}},
      {"gap", "band_max_ghz", "gap-band-max", R, "3", "upper edge of the accepted gap band", {}},
      {"coupling", "ratios", "coupling-ratios", L, "1.5,2,2.5", "junction ratios of the g curve", {}},
      {"coupling", "f_alpha_min", "coupling-f-min", R, "0", "first f_alpha of the g curve", {}},
      {"coupling", "f_alpha_max", "coupling-f-max", R, "0.5", "last f_alpha of the g curve", {}},
      {"coupling", "f_alpha_step", "coupling-f-step", R, "0.01", "f_alpha step of the g curve", {}},
      {"rabi", "delta", "rabi-delta", R, "1", "qubit gap (units of omega)", {}},
      {"rabi", "g", "rabi-g", R, "0.01", "coupling", {}},
      {"rabi", "omega", "rabi-omega", R, "1", "resonator frequency", {}},
      {"rabi", "fock_cutoff", "rabi-fock", I, "10", "Fock levels", {}},
      {"rabi", "periods", "rabi-periods", R, "10", "vacuum Rabi periods to simulate", {}},
      {"rabi", "samples", "rabi-samples", I, "500", "output samples", {}},
      {"twoqubit", "delta_l", "tq-delta-l", R, "1.5", "left qubit gap", {}},
      {"twoqubit", "delta_r", "tq-delta-r", R, "1.5", "right qubit gap", {}},
      {"twoqubit", "g_l", "tq-g-l", R, "0.025", "left coupling", {}},
      {"twoqubit", "g_r", "tq-g-r", R, "0.025", "right coupling", {}},
      {"twoqubit", "omega1", "tq-omega1", R, "1", "resonator frequency", {}},
      {"twoqubit", "fock_cutoff", "tq-fock", I, "6", "Fock levels", {}},
      {"twoqubit", "force", "tq-force", B, "false", "skip the dispersive validity check", {}},
      {"twoqubit", "samples", "tq-samples", I, "400", "output samples over one swap period", {}},
      {"output", "format", "format", T, "auto", "json, csv or auto (per command)", {"auto", "json", "csv"}},
  };
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& raw, const std::string& where) {
  const std::string s = trim(raw);
  double v = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError(where + ": expected a finite number, got '" + raw + "'");
  }
  return v;
}

long parse_integer(const std::string& raw, const std::string& where) {
  const std::string s = trim(raw);
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw ConfigError(where + ": expected an integer, got '" + raw + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string canonical(const KeySpec& k, const std::string& raw) {
  const std::string where = k.section + "." + k.key;
  switch (k.kind) {
    case Kind::real:
      return format_number(parse_real(raw, where));
    case Kind::integer:
      return std::to_string(parse_integer(raw, where));
    case Kind::boolean: {
      const std::string s = trim(raw);
      if (s == "true" || s == "1" || s == "yes") return "true";
      if (s == "false" || s == "0" || s == "no") return "false";
      throw ConfigError(where + ": expected true or false, got '" + raw + "'");
    }
    case Kind::text: {
      const std::string s = trim(raw);
      if (!k.choices.empty() && std::find(k.choices.begin(), k.choices.end(), s) == k.choices.end()) {
        throw ConfigError(where + ": unsupported value '" + raw + "'");
      }
      return s;
    }
    case Kind::real_list: {
      std::string out;
      for (const std::string& item : split(raw, ',')) {
        if (!out.empty()) out += ",";
        out += format_number(parse_real(item, where));
      }
      if (out.empty()) throw ConfigError(where + ": empty list");
      return out;
    }
  }
  return raw;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  return fmt::format("{}", v);
}

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = make_table();
  return table;
}

RunConfig::RunConfig() {
  for (const KeySpec& k : key_table()) values_[k.section + "." + k.key] = canonical(k, k.default_value);
}

const KeySpec& RunConfig::spec(const std::string& section, const std::string& key) const {
  for (const KeySpec& k : key_table()) {
    if (k.section == section && k.key == key) return k;
  }
  throw ConfigError("unknown configuration key '" + section + "." + key + "'");
}

void RunConfig::set(const std::string& section, const std::string& key, const std::string& value) {
  values_[section + "." + key] = canonical(spec(section, key), value);
}

void RunConfig::load_ini_text(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed configuration: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("configuration key '" + section + "' is outside a section");
    for (const auto& [key, value] : body) set(section, key, value.data());
  }
}

void RunConfig::load_ini(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read configuration file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  load_ini_text(ss.str());
}

double RunConfig::real(const std::string& section, const std::string& key) const {
  return parse_real(values_.at(section + "." + key), section + "." + key);
}

int RunConfig::integer(const std::string& section, const std::string& key) const {
  return static_cast<int>(parse_integer(values_.at(section + "." + key), section + "." + key));
}

bool RunConfig::boolean(const std::string& section, const std::string& key) const {
  return values_.at(section + "." + key) == "true";
}

const std::string& RunConfig::text(const std::string& section, const std::string& key) const {
  return values_.at(section + "." + key);
}

std::vector<double> RunConfig::real_list(const std::string& section, const std::string& key) const {
  std::vector<double> out;
  for (const std::string& s : split(values_.at(section + "." + key), ',')) {
    out.push_back(parse_real(s, section + "." + key));
  }
  return out;
}

gfq::CircuitParams RunConfig::circuit() const {
  gfq::InductanceSet ind;
  ind.kinetic = real("inductance", "kinetic");
  ind.kinetic_branch = real("inductance", "kinetic_branch");
  ind.kinetic_center = real("inductance", "kinetic_center");
  ind.geometric = real("inductance", "geometric");
  ind.geometric_branch = real("inductance", "geometric_branch");
  ind.geometric_center = real("inductance", "geometric_center");
  ind.mutual = real("inductance", "mutual");
  ind.mutual_branch = real("inductance", "mutual_branch");
  const gfq::FluxBias flux{real("circuit", "f1"), real("circuit", "f2"), real("circuit", "f_alpha")};
  const gfq::WindingNumbers wind{integer("circuit", "n1"), integer("circuit", "n2"),
                                 integer("circuit", "n")};
  gfq::JunctionEnergies jj;
  jj.e_j = 1.0;
  jj.e_j_branch = real("circuit", "ej_ratio");
  jj.e_c = 1.0 / ej_over_ec();
  jj.stiffness_loop = real("circuit", "stiffness_loop");
  jj.stiffness_alpha = real("circuit", "stiffness_alpha");
  try {
    return gfq::CircuitParams(ind, flux, wind, jj);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

gfq::DriveParams RunConfig::drive() const {
  return {real("drive", "beta0"), real("drive", "beta_branch")};
}

gfq::PhysicalConstants RunConfig::constants() const {
  gfq::PhysicalConstants c;
  c.l_eff = real("physical", "l_eff_ph") * 1e-12;
  c.ej_over_h = real("physical", "ej_over_h_ghz") * 1e9;
  c.validate();
  return c;
}

double RunConfig::ej_ratio() const { return real("circuit", "ej_ratio"); }

double RunConfig::ej_over_ec() const {
  const double r = real("circuit", "ej_over_ec");
  if (!(r > 0.0)) throw ConfigError("circuit.ej_over_ec must be positive");
  return r;
}

gfq::ReducedPotential RunConfig::reduced_potential() const {
  const gfq::CircuitParams p = circuit();
  return {ej_ratio(), p.flux(), p.winding(), drive().beta0};
}

std::optional<int> RunConfig::m_prime() const {
  const std::string& s = text("solver", "m_prime");
  if (s == "auto") return std::nullopt;
  return static_cast<int>(parse_integer(s, "solver.m_prime"));
}

void RunConfig::validate() const {
  circuit();
  constants();
  m_prime();
  for (const char* k : {"grid_phi_p", "grid_phitilde_m"}) {
    if (integer("solver", k) < 32) throw ConfigError(std::string("solver.") + k + " must be at least 32");
  }
  if (integer("solver", "cut_points") < 3) throw ConfigError("solver.cut_points must be at least 3");
  if (integer("solver", "seeds") < 2) throw ConfigError("solver.seeds must be at least 2");
  if (integer("gap", "points") < 101) throw ConfigError("gap.points must be at least 101");
  if (integer("gap", "nx") < 32 || integer("gap", "ny") < 32) throw ConfigError("gap.nx and gap.ny must be at least 32");
  if (!(real("coupling", "f_alpha_step") > 0.0)) throw ConfigError("coupling.f_alpha_step must be positive");
  if (integer("rabi", "fock_cutoff") < gfq::kMinFockCutoff || integer("twoqubit", "fock_cutoff") < gfq::kMinFockCutoff) {
    throw ConfigError("Fock cutoffs must be at least 5");
  }
  if (integer("rabi", "samples") < 2 || integer("twoqubit", "samples") < 2) throw ConfigError("sample counts must be at least 2");
  if (!(real("rabi", "periods") > 0.0)) throw ConfigError("rabi.periods must be positive");
}

std::string RunConfig::to_ini() const {
  std::string out;
  std::string current;
  for (const KeySpec& k : key_table()) {
    if (k.section != current) {
      if (!current.empty()) out += "\n";
      out += "[" + k.section + "]\n";
      current = k.section;
    }
    out += k.key + " = " + values_.at(k.section + "." + k.key) + "\n";
  }
  return out;
}

std::vector<std::string> RunConfig::echo_lines() const {
  std::vector<std::string> out;
  for (const KeySpec& k : key_table()) {
    out.push_back(k.section + "." + k.key + " = " + values_.at(k.section + "." + k.key));
  }
  return out;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const KeySpec& k : key_table()) {
    const std::string& v = values_.at(k.section + "." + k.key);
    switch (k.kind) {
      case Kind::real:
        j[k.section][k.key] = real(k.section, k.key);
        break;
      case Kind::integer:
        j[k.section][k.key] = integer(k.section, k.key);
        break;
      case Kind::boolean:
        j[k.section][k.key] = boolean(k.section, k.key);
        break;
      case Kind::text:
        j[k.section][k.key] = v;
        break;
      case Kind::real_list:
        j[k.section][k.key] = real_list(k.section, k.key);
        break;
    }
  }
  return j;
}

}  // namespace gfqsim
