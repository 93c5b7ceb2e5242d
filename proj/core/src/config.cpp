#include "eit/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <regex>
#include <sstream>

#include "eit/errors.hpp"
#include "eit/format.hpp"
#include "eit/units.hpp"

namespace eit {

namespace {

enum class Kind {
  Frequency,
  Energy,
  Density,
  DipoleSq,
  Dipole,
  Length,
  Field,
  Time,
  Dimensionless,
  Count,
  Choice,
  FrequencyList,
};

using Converter = std::function<double(double)>;

Converter scale(double factor) {
  return [factor](double v) { return v * factor; };
}

// Dividing by an exact power of ten keeps "30 um" equal to 3e-5.
Converter shrink(double divisor) {
  return [divisor](double v) { return v / divisor; };
}

const std::map<std::string, Converter>& units_for(Kind kind) {
  static const std::map<std::string, Converter> frequency{
      {"rad/s", scale(1.0)},
      {"krad/s", scale(1e3)},
      {"Mrad/s", scale(1e6)},
      {"Grad/s", scale(1e9)},
      {"Trad/s", scale(1e12)},
      {"eV", [](double v) { return ev_to_angular_frequency(v); }},
      {"meV", [](double v) { return energy_to_angular_frequency(v); }},
      {"ueV", [](double v) { return energy_to_angular_frequency(v / 1e3); }},
  };
  static const std::map<std::string, Converter> energy{
      {"eV", scale(1.0)}, {"meV", shrink(1e3)}, {"ueV", shrink(1e6)}};
  static const std::map<std::string, Converter> density{
      {"m^-3", scale(1.0)}, {"cm^-3", scale(1e6)}};
  static const std::map<std::string, Converter> dipole_sq{
      {"C^2m^2", scale(1.0)}, {"C^2*m^2", scale(1.0)}};
  static const std::map<std::string, Converter> dipole{
      {"C*m", scale(1.0)}, {"Cm", scale(1.0)}, {"D", scale(3.33564095198152e-30)}};
  static const std::map<std::string, Converter> length{
      {"m", scale(1.0)},   {"cm", shrink(1e2)}, {"mm", shrink(1e3)},
      {"um", shrink(1e6)}, {"nm", shrink(1e9)}};
  static const std::map<std::string, Converter> field{
      {"V/m", scale(1.0)}, {"V/cm", scale(1e2)}, {"kV/cm", scale(1e5)}};
  static const std::map<std::string, Converter> time{
      {"s", scale(1.0)},    {"ms", shrink(1e3)},  {"us", shrink(1e6)},
      {"ns", shrink(1e9)},  {"ps", shrink(1e12)}, {"fs", shrink(1e15)}};
  static const std::map<std::string, Converter> dimensionless{{"1", scale(1.0)}};
  static const std::map<std::string, Converter> none{};
  switch (kind) {
    case Kind::Frequency:
    case Kind::FrequencyList:
      return frequency;
    case Kind::Energy:
      return energy;
    case Kind::Density:
      return density;
    case Kind::DipoleSq:
      return dipole_sq;
    case Kind::Dipole:
      return dipole;
    case Kind::Length:
      return length;
    case Kind::Field:
      return field;
    case Kind::Time:
      return time;
    case Kind::Dimensionless:
      return dimensionless;
    default:
      return none;
  }
}

const char* canonical_unit(Kind kind) {
  switch (kind) {
    case Kind::Frequency:
    case Kind::FrequencyList:
      return "rad/s";
    case Kind::Energy:
      return "eV";
    case Kind::Density:
      return "m^-3";
    case Kind::DipoleSq:
      return "C^2m^2";
    case Kind::Dipole:
      return "C*m";
    case Kind::Length:
      return "m";
    case Kind::Field:
      return "V/m";
    case Kind::Time:
      return "s";
    default:
      return "";
  }
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Value {
  std::vector<double> numbers;  // converted to canonical units
  std::string word;             // Choice keys
  int line = 0;
  int column = 0;
};

struct Key {
  Kind kind;
  std::function<void(ScenarioConfig&, const Value&)> apply;
  std::vector<std::string> choices{};
};

[[noreturn]] void fail(const std::string& msg, int line, int column) {
  throw ConfigError(msg, line, column);
}

void require_positive(double v, const Value& val, const std::string& key) {
  if (!(v > 0.0)) fail(key + " must be > 0", val.line, val.column);
}

void require_non_negative(double v, const Value& val, const std::string& key) {
  if (!(v >= 0.0)) fail(key + " must be >= 0", val.line, val.column);
}

int as_count(const Value& v, const std::string& key, int minimum) {
  const double x = v.numbers.front();
  if (x < minimum || x > 1e8) {
    fail(key + " must be an integer >= " + std::to_string(minimum), v.line, v.column);
  }
  return static_cast<int>(x);
}

const std::map<std::string, Key>& key_table() {
  using C = ScenarioConfig;
  using V = Value;
  static const std::map<std::string, Key> table = [] {
    std::map<std::string, Key> t;
    auto scalar = [&](const std::string& name, Kind kind, auto setter) {
      t.emplace(name, Key{kind, [setter](C& c, const V& v) { setter(c, v.numbers.front(), v); }});
    };
    scalar("omega_ab", Kind::Frequency, [](C& c, double x, const V& v) { require_positive(x, v, "omega_ab"); c.omega_ab = x; });
    scalar("omega_ac", Kind::Frequency, [](C& c, double x, const V& v) { require_positive(x, v, "omega_ac"); c.omega_ac = x; });
    scalar("gamma_ab", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "gamma_ab"); c.gamma_ab = x; });
    scalar("gamma_bc", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "gamma_bc"); c.gamma_bc = x; });
    scalar("gamma_ac", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "gamma_ac"); c.gamma_ac = x; });
    scalar("Gamma_ab", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "Gamma_ab"); c.population_ab = x; });
    scalar("Gamma_ca", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "Gamma_ca"); c.population_ca = x; });
    scalar("N", Kind::Density, [](C& c, double x, const V& v) { require_non_negative(x, v, "N"); c.density = x; });
    scalar("dipole_ab_sq", Kind::DipoleSq, [](C& c, double x, const V& v) { require_non_negative(x, v, "dipole_ab_sq"); c.dipole_ab_sq = x; });
    scalar("dipole_ac", Kind::Dipole, [](C& c, double x, const V& v) { require_non_negative(x, v, "dipole_ac"); c.dipole_ac = x; });
    scalar("delta1", Kind::Frequency, [](C& c, double x, const V&) { c.delta1 = x; });
    scalar("delta2", Kind::Frequency, [](C& c, double x, const V&) { c.delta2 = x; });
    scalar("Omega1", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "Omega1"); c.rabi_probe = x; });
    scalar("Omega2", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "Omega2"); c.rabi_control = x; });
    scalar("omega_min", Kind::Frequency, [](C& c, double x, const V&) { c.omega.min = x; });
    scalar("omega_max", Kind::Frequency, [](C& c, double x, const V&) { c.omega.max = x; });
    scalar("omega_points", Kind::Count, [](C& c, double, const V& v) { c.omega.points = as_count(v, "omega_points", 1); });
    scalar("sweep_Omega2_min", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "sweep_Omega2_min"); c.sweep.min = x; });
    scalar("sweep_Omega2_max", Kind::Frequency, [](C& c, double x, const V& v) { require_non_negative(x, v, "sweep_Omega2_max"); c.sweep.max = x; });
    scalar("sweep_Omega2_points", Kind::Count, [](C& c, double, const V& v) { c.sweep.points = as_count(v, "sweep_Omega2_points", 1); });
    scalar("E_g", Kind::Energy, [](C& c, double x, const V&) { c.levels.gap_energy = x; });
    scalar("R_star", Kind::Energy, [](C& c, double x, const V& v) { require_positive(x, v, "R_star"); c.levels.rydberg = x; });
    scalar("a_star", Kind::Length, [](C& c, double x, const V& v) { require_positive(x, v, "a_star"); c.levels.bohr_radius = x; });
    scalar("gamma_aniso", Kind::Dimensionless, [](C& c, double x, const V& v) { require_positive(x, v, "gamma_aniso"); c.levels.anisotropy = x; });
    scalar("eps_b", Kind::Dimensionless, [](C& c, double x, const V& v) { require_positive(x, v, "eps_b"); c.levels.background_dielectric = x; });
    scalar("Delta_LT", Kind::Energy, [](C& c, double x, const V& v) { require_non_negative(x, v, "Delta_LT"); c.levels.lt_splitting = x; });
    scalar("r0", Kind::Length, [](C& c, double x, const V& v) { require_positive(x, v, "r0"); c.levels.coherence_radius = x; });
    scalar("F", Kind::Field, [](C& c, double x, const V&) { c.levels.field = x; });
    scalar("levels_n_max", Kind::Count, [](C& c, double, const V& v) { c.levels_n_max = as_count(v, "levels_n_max", 2); });
    scalar("slab_length", Kind::Length, [](C& c, double x, const V& v) { require_positive(x, v, "slab_length"); c.slab_length = x; });
    scalar("z_steps", Kind::Count, [](C& c, double, const V& v) { c.z_steps = as_count(v, "z_steps", 1); });
    scalar("t_steps", Kind::Count, [](C& c, double, const V& v) { c.t_steps = as_count(v, "t_steps", 16); });

    t.emplace("pulse_duration",
              Key{Kind::Time,
                  [](C& c, const V& v) {
                    if (v.word == "auto") {
                      c.pulse_duration.reset();
                      return;
                    }
                    require_positive(v.numbers.front(), v, "pulse_duration");
                    c.pulse_duration = v.numbers.front();
                  },
                  {"auto"}});
    t.emplace("spectrum_Omega2", Key{Kind::FrequencyList, [](C& c, const V& v) {
                for (double x : v.numbers) require_non_negative(x, v, "spectrum_Omega2");
                c.spectrum_controls = v.numbers;
              }});
    t.emplace("sweep_Omega2", Key{Kind::FrequencyList, [](C& c, const V& v) {
                for (std::size_t i = 1; i < v.numbers.size(); ++i) {
                  if (!(v.numbers[i] > v.numbers[i - 1])) {
                    fail("sweep_Omega2 must be strictly increasing", v.line, v.column);
                  }
                }
                c.sweep_controls = v.numbers;
              }});
    t.emplace("propagation_source",
              Key{Kind::Choice,
                  [](C& c, const V& v) {
                    c.propagation_source =
                        v.word == "full" ? SourceModel::FullBloch : SourceModel::Linearized;
                  },
                  {"linear", "full"}});
    t.emplace("convergence_check",
              Key{Kind::Choice, [](C& c, const V& v) { c.convergence_check = v.word == "on"; },
                  {"on", "off"}});
    t.emplace("bloch_damping",
              Key{Kind::Choice,
                  [](C& c, const V& v) {
                    c.bloch.damping = v.word == "standard" ? DampingConvention::StandardDecay
                                                           : DampingConvention::Literal;
                  },
                  {"literal", "standard"}});
    t.emplace("bloch_ac_term",
              Key{Kind::Choice,
                  [](C& c, const V& v) {
                    c.bloch.ac_term = v.word == "as_printed" ? AcCoherenceTerm::AsPrinted
                                                             : AcCoherenceTerm::SelfConsistent;
                  },
                  {"self_consistent", "as_printed"}});
    t.emplace("output_format",
              Key{Kind::Choice,
                  [](C& c, const V& v) {
                    c.output_format = v.word == "csv"    ? OutputFormat::Csv
                                      : v.word == "json" ? OutputFormat::Json
                                                         : OutputFormat::Both;
                  },
                  {"csv", "json", "both"}});
    return t;
  }();
  return table;
}

std::string trim(std::string_view s, int& offset) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  offset += static_cast<int>(b);
  return std::string(s.substr(b, e - b));
}

std::vector<Token> split_ws(std::string_view s, int column0) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back(Token{std::string(s.substr(i, j - i)), column0 + static_cast<int>(i)});
    i = j;
  }
  return out;
}

std::string unit_list(Kind kind) {
  std::string out;
  for (const auto& [name, conv] : units_for(kind)) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

double convert(const Token& number, const Token* unit, Kind kind, const std::string& key,
               int line) {
  const auto value = parse_double(number.text);
  if (!value) fail("malformed number '" + number.text + "' for " + key, line, number.column);
  if (kind == Kind::Count) {
    if (unit) fail(key + " is a count and takes no unit", line, unit->column);
    if (*value != std::floor(*value)) {
      fail(key + " must be an integer", line, number.column);
    }
    return *value;
  }
  if (kind == Kind::Dimensionless && !unit) return *value;
  if (!unit) {
    fail(key + " needs a unit (one of: " + unit_list(kind) + ")", line,
         number.column + static_cast<int>(number.text.size()));
  }
  if (kind == Kind::Frequency || kind == Kind::FrequencyList) {
    if (unit->text.ends_with("Hz")) {
      fail("unit '" + unit->text + "' is ambiguous for angular frequencies; use rad/s, "
           "Grad/s, Trad/s or an energy unit",
           line, unit->column);
    }
  }
  const auto& table = units_for(kind);
  const auto it = table.find(unit->text);
  if (it == table.end()) {
    fail("unit '" + unit->text + "' is not valid for " + key + " (expected one of: " +
             unit_list(kind) + ")",
         line, unit->column);
  }
  return it->second(*value);
}

const std::regex& damping_key() {
  static const std::regex re(R"(level_damping_(\d+)_(\d+)_(-?\d+))");
  return re;
}

std::string with_unit(double value, Kind kind) {
  const char* unit = canonical_unit(kind);
  return *unit ? format_double(value) + " " + unit : format_double(value);
}

std::string list_with_unit(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(values[i]);
  }
  return out + " rad/s";
}

}  // namespace

std::vector<double> GridSpec::values() const {
  if (points < 1) throw DomainError("grid needs at least one point");
  if (points == 1) return {min};
  if (!(max > min)) throw DomainError("grid maximum must exceed its minimum");
  std::vector<double> v(points);
  for (int i = 0; i < points; ++i) {
    v[i] = min + (max - min) * static_cast<double>(i) / (points - 1);
  }
  v.back() = max;
  return v;
}

levels::LevelModelParams ScenarioConfig::default_level_params() {
  levels::LevelModelParams p;
  // The anisotropy puts 2P0 just above 2S so the larger root is the P-like
  // one, and makes the mixed 10S - 2Pz splitting equal omega_ac (20.6714
  // meV). The gap places 10S at omega_ab (2150.3 meV) and r0 tunes |M_10|^2
  // to 0.334e-60 C^2 m^2.
  p.gap_energy = 2.15131;
  p.rydberg = 87.78e-3;
  p.bohr_radius = 1.1e-9;
  p.anisotropy = 1.01;
  p.background_dielectric = 7.5;
  p.lt_splitting = 1.25e-6;
  p.coherence_radius = 0.2872e-9;
  p.field = 1500.0;  // 15 V/cm
  // Widths follow gamma = Gamma / 2 with gamma_bc (2P) = 5 ueV and
  // gamma_ab (10S) = 30 ueV.
  p.damping = {{{2, 0, 0}, 10e-6}, {{2, 1, 0}, 10e-6},
               {{10, 0, 0}, 60e-6}, {{10, 1, 0}, 60e-6}};
  return p;
}

LadderSystem ScenarioConfig::system() const {
  LadderSystem s = LadderSystem::from_transitions(omega_ab, omega_ac, gamma_ab, gamma_bc,
                                                  density, dipole_ab_sq);
  if (population_ab) s.population_damping_ab = *population_ab;
  if (population_ca) s.population_damping_ca = *population_ca;
  s.coherence_damping_ac = gamma_ac ? *gamma_ac : 0.5 * s.population_damping_ca;
  s.dipole_ac = dipole_ac;
  return s;
}

FieldDrive ScenarioConfig::drive() const {
  return FieldDrive::from_detunings(system(), delta1, delta2, Complex(rabi_probe, 0.0),
                                    Complex(rabi_control, 0.0));
}

std::vector<double> ScenarioConfig::sweep_values() const {
  return sweep_controls ? *sweep_controls : sweep.values();
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig config;
  std::map<std::string, int> seen;
  const auto& table = key_table();
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    int col = 1;
    const std::string body = trim(line, col);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'", line_no, col);
    int key_col = col;
    const std::string key = trim(std::string_view(body).substr(0, eq), key_col);
    if (key.empty()) fail("missing key before '='", line_no, col);
    int rhs_col = col + static_cast<int>(eq) + 1;
    const std::string rhs_view(std::string_view(body).substr(eq + 1));

    Kind kind = Kind::Energy;
    const Key* spec = nullptr;
    std::smatch m;
    const bool is_damping = std::regex_match(key, m, damping_key());
    if (!is_damping) {
      const auto it = table.find(key);
      if (it == table.end()) fail("unknown key '" + key + "'", line_no, key_col);
      spec = &it->second;
      kind = spec->kind;
    }
    if (auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
      fail("duplicate key '" + key + "' (first set on line " + std::to_string(it->second) + ")",
           line_no, key_col);
    }

    // Split on commas: every item but the last is a bare number; the last
    // may carry the unit.
    std::vector<std::vector<Token>> items;
    {
      std::size_t start = 0;
      while (true) {
        const std::size_t comma = rhs_view.find(',', start);
        const std::size_t stop = comma == std::string::npos ? rhs_view.size() : comma;
        items.push_back(split_ws(std::string_view(rhs_view).substr(start, stop - start),
                                 rhs_col + static_cast<int>(start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    for (const auto& item : items) {
      if (item.empty()) fail("missing value for " + key, line_no, rhs_col);
    }
    Value value;
    value.line = line_no;
    value.column = items.front().front().column;

    if (kind == Kind::Choice || (spec && !spec->choices.empty() &&
                                 items.size() == 1 && items[0].size() == 1 &&
                                 !parse_double(items[0][0].text))) {
      if (items.size() != 1 || items[0].size() != 1) {
        fail(key + " takes a single word", line_no, value.column);
      }
      const auto& word = items[0][0].text;
      if (std::find(spec->choices.begin(), spec->choices.end(), word) == spec->choices.end()) {
        std::string allowed;
        for (const auto& c : spec->choices) allowed += (allowed.empty() ? "" : ", ") + c;
        fail("invalid value '" + word + "' for " + key + " (expected one of: " + allowed + ")",
             line_no, value.column);
      }
      value.word = word;
      spec->apply(config, value);
      continue;
    }

    if (kind != Kind::FrequencyList && items.size() != 1) {
      fail(key + " takes a single value", line_no, items[1].front().column);
    }
    const Token* unit = nullptr;
    const auto& last = items.back();
    if (last.size() > 2) fail("unexpected token '" + last[2].text + "'", line_no, last[2].column);
    if (last.size() == 2) unit = &last[1];
    for (std::size_t i = 0; i + 1 < items.size(); ++i) {
      if (items[i].size() != 1) {
        fail("list items before the last may not carry a unit", line_no, items[i][1].column);
      }
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      // List entries share the unit written after the last one.
      value.numbers.push_back(convert(items[i][0], unit, kind, key, line_no));
    }

    if (is_damping) {
      const levels::StateIndex s{std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3])};
      if (s.n < 1 || s.l < 0 || s.l >= s.n || std::abs(s.m) > s.l) {
        fail("invalid state in '" + key + "'", line_no, key_col);
      }
      require_non_negative(value.numbers.front(), value, key);
      config.levels.damping[s] = value.numbers.front();
    } else {
      spec->apply(config, value);
    }
  }

  auto line_of = [&](const char* key) {
    const auto it = seen.find(key);
    return it == seen.end() ? 0 : it->second;
  };
  try {
    config.omega.values();
  } catch (const DomainError& e) {
    fail(std::string("omega grid: ") + e.what(), line_of("omega_max"), 1);
  }
  if (!config.sweep_controls) {
    try {
      config.sweep.values();
    } catch (const DomainError& e) {
      fail(std::string("sweep grid: ") + e.what(), line_of("sweep_Omega2_max"), 1);
    }
  }
  try {
    config.system().validate();
  } catch (const DomainError& e) {
    fail(e.what(), line_of("omega_ac"), 1);
  }
  return config;
}

std::vector<std::pair<std::string, std::string>> provenance(const ScenarioConfig& c) {
  const LadderSystem s = c.system();
  std::vector<std::pair<std::string, std::string>> out;
  auto add = [&](const std::string& k, double v, Kind kind) {
    out.emplace_back(k, with_unit(v, kind));
  };
  add("omega_ab", c.omega_ab, Kind::Frequency);
  add("omega_ac", c.omega_ac, Kind::Frequency);
  add("gamma_ab", c.gamma_ab, Kind::Frequency);
  add("gamma_bc", c.gamma_bc, Kind::Frequency);
  add("gamma_ac", s.coherence_damping_ac, Kind::Frequency);
  add("Gamma_ab", s.population_damping_ab, Kind::Frequency);
  add("Gamma_ca", s.population_damping_ca, Kind::Frequency);
  add("N", c.density, Kind::Density);
  add("dipole_ab_sq", c.dipole_ab_sq, Kind::DipoleSq);
  add("dipole_ac", c.dipole_ac, Kind::Dipole);
  add("delta1", c.delta1, Kind::Frequency);
  add("delta2", c.delta2, Kind::Frequency);
  add("Omega1", c.rabi_probe, Kind::Frequency);
  add("Omega2", c.rabi_control, Kind::Frequency);
  add("omega_min", c.omega.min, Kind::Frequency);
  add("omega_max", c.omega.max, Kind::Frequency);
  out.emplace_back("omega_points", std::to_string(c.omega.points));
  out.emplace_back("spectrum_Omega2", list_with_unit(c.spectrum_controls));
  add("sweep_Omega2_min", c.sweep.min, Kind::Frequency);
  add("sweep_Omega2_max", c.sweep.max, Kind::Frequency);
  out.emplace_back("sweep_Omega2_points", std::to_string(c.sweep.points));
  if (c.sweep_controls) out.emplace_back("sweep_Omega2", list_with_unit(*c.sweep_controls));
  add("E_g", c.levels.gap_energy, Kind::Energy);
  add("R_star", c.levels.rydberg, Kind::Energy);
  add("a_star", c.levels.bohr_radius, Kind::Length);
  add("gamma_aniso", c.levels.anisotropy, Kind::Dimensionless);
  add("eps_b", c.levels.background_dielectric, Kind::Dimensionless);
  add("Delta_LT", c.levels.lt_splitting, Kind::Energy);
  add("r0", c.levels.coherence_radius, Kind::Length);
  add("F", c.levels.field, Kind::Field);
  out.emplace_back("levels_n_max", std::to_string(c.levels_n_max));
  for (const auto& [state, width] : c.levels.damping) {
    add("level_damping_" + std::to_string(state.n) + "_" + std::to_string(state.l) + "_" +
            std::to_string(state.m),
        width, Kind::Energy);
  }
  add("slab_length", c.slab_length, Kind::Length);
  out.emplace_back("z_steps", std::to_string(c.z_steps));
  out.emplace_back("t_steps", std::to_string(c.t_steps));
  out.emplace_back("pulse_duration",
                   c.pulse_duration ? with_unit(*c.pulse_duration, Kind::Time) : "auto");
  out.emplace_back("propagation_source",
                   c.propagation_source == SourceModel::FullBloch ? "full" : "linear");
  out.emplace_back("convergence_check", c.convergence_check ? "on" : "off");
  out.emplace_back("bloch_damping",
                   c.bloch.damping == DampingConvention::Literal ? "literal" : "standard");
  out.emplace_back("bloch_ac_term", c.bloch.ac_term == AcCoherenceTerm::SelfConsistent
                                        ? "self_consistent"
                                        : "as_printed");
  out.emplace_back("output_format", c.output_format == OutputFormat::Csv    ? "csv"
                                    : c.output_format == OutputFormat::Json ? "json"
                                                                            : "both");
  return out;
}

std::string serialize_config(const ScenarioConfig& config) {
  std::ostringstream os;
  for (const auto& [key, value] : provenance(config)) {
    // Derived rates stay implicit so a round trip keeps them derived.
    if ((key == "gamma_ac" && !config.gamma_ac) || (key == "Gamma_ab" && !config.population_ab) ||
        (key == "Gamma_ca" && !config.population_ca)) {
      continue;
    }
    os << key << " = " << value << '\n';
  }
  return os.str();
}

}  // namespace eit
