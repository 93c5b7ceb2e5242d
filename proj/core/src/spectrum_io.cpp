#include "eit/spectrum_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eit/errors.hpp"
#include "eit/format.hpp"

namespace eit::io {

namespace {

using Json = nlohmann::ordered_json;

std::string csv_header(const Provenance& provenance, const std::string& kind) {
  std::string out = "# kind = " + kind + "\n# schema_version = " +
                    std::to_string(kSchemaVersion) + "\n";
  out += "# frequencies are angular: rad/s (1 Grad/s = 1e9 rad/s, not GHz)\n";
  for (const auto& [key, value] : provenance) out += "# " + key + " = " + value + "\n";
  return out;
}

Json json_header(const Provenance& provenance, const std::string& kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["frequency_unit"] = "rad/s (angular)";
  Json params = Json::object();
  for (const auto& [key, value] : provenance) params[key] = value;
  j["parameters"] = std::move(params);
  return j;
}

Json number(double v) { return format_double(v); }

Json numbers(const std::vector<double>& values) {
  Json a = Json::array();
  for (double v : values) a.push_back(format_double(v));
  return a;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

double milli(double ev) { return ev * 1e3; }

}  // namespace

std::string spectrum_csv(const SpectrumTable& table, const Provenance& provenance) {
  std::string out = csv_header(provenance, "spectrum");
  out += "# Omega2_rad_s = " + format_double(std::abs(table.drive.rabi_control)) + "\n";
  out += "omega_rad_s,chi_re,chi_im,n_g\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += format_double(table.omega[i]) + ',' + format_double(table.chi_re[i]) + ',' +
           format_double(table.chi_im[i]) + ',' + format_double(table.n_g[i]) + '\n';
  }
  return out;
}

std::string spectrum_json(const SpectrumTable& table, const WindowMetrics& window,
                          const Provenance& provenance) {
  Json j = json_header(provenance, "spectrum");
  j["Omega2_rad_s"] = number(std::abs(table.drive.rabi_control));
  Json w;
  w["present"] = window.present;
  w["dip"] = window.dip;
  w["center_rad_s"] = number(window.center);
  w["chi_im_center"] = number(window.center_abs);
  w["bare_peak_chi_im"] = number(window.bare_peak);
  w["width_rad_s"] = number(window.width);
  w["left_edge_rad_s"] = number(window.left_edge);
  w["right_edge_rad_s"] = number(window.right_edge);
  w["n_g_center"] = number(window.ng_center);
  j["window"] = std::move(w);
  Json cols;
  cols["omega_rad_s"] = numbers(table.omega);
  cols["chi_re"] = numbers(table.chi_re);
  cols["chi_im"] = numbers(table.chi_im);
  cols["n_g"] = numbers(table.n_g);
  j["columns"] = std::move(cols);
  return dump(j);
}

std::string sweep_csv(const ControlSweep& sweep, const Provenance& provenance) {
  std::string out = csv_header(provenance, "control_sweep");
  const auto& best = sweep.rows.at(sweep.argmax);
  out += "# argmax_Omega2_rad_s = " + format_double(best.rabi_control) + "\n";
  out += "# argmax_n_g = " + format_double(best.ng_center) + "\n";
  out += "# refined_argmax_Omega2_rad_s = " + format_double(sweep.refined_argmax) + "\n";
  out += "# refined_max_n_g = " + format_double(sweep.refined_max) + "\n";
  out += "Omega2_rad_s,n_g_center,chi_im_center\n";
  for (const auto& row : sweep.rows) {
    out += format_double(row.rabi_control) + ',' + format_double(row.ng_center) + ',' +
           format_double(row.chi_im_center) + '\n';
  }
  return out;
}

std::string sweep_json(const ControlSweep& sweep, const Provenance& provenance) {
  Json j = json_header(provenance, "control_sweep");
  const auto& best = sweep.rows.at(sweep.argmax);
  Json a;
  a["index"] = sweep.argmax;
  a["Omega2_rad_s"] = number(best.rabi_control);
  a["n_g_center"] = number(best.ng_center);
  a["refined_Omega2_rad_s"] = number(sweep.refined_argmax);
  a["refined_n_g_center"] = number(sweep.refined_max);
  j["argmax"] = std::move(a);
  std::vector<double> w2, ng, im;
  for (const auto& row : sweep.rows) {
    w2.push_back(row.rabi_control);
    ng.push_back(row.ng_center);
    im.push_back(row.chi_im_center);
  }
  Json cols;
  cols["Omega2_rad_s"] = numbers(w2);
  cols["n_g_center"] = numbers(ng);
  cols["chi_im_center"] = numbers(im);
  j["columns"] = std::move(cols);
  return dump(j);
}

std::string levels_csv(const std::vector<levels::LevelRow>& rows,
                       const Provenance& provenance) {
  std::string out = csv_header(provenance, "levels");
  out += "# energies are relative to the gap; E_imag_meV = -Gamma\n";
  out += "n,l,m,eta,E_real_meV,E_imag_meV,branch\n";
  for (const auto& r : rows) {
    out += std::to_string(r.state.n) + ',' + std::to_string(r.state.l) + ',' +
           std::to_string(r.state.m) + ',' + format_double(r.eta) + ',' +
           format_double(milli(r.energy.real())) + ',' +
           format_double(milli(r.energy.imag())) + ',' + r.branch + '\n';
  }
  return out;
}

std::string levels_json(const std::vector<levels::LevelRow>& rows,
                        const std::vector<levels::MixedState>& mixed, double dipole_sq,
                        const Provenance& provenance) {
  Json j = json_header(provenance, "levels");
  Json table = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["n"] = r.state.n;
    row["l"] = r.state.l;
    row["m"] = r.state.m;
    row["eta"] = number(r.eta);
    row["E_real_meV"] = number(milli(r.energy.real()));
    row["E_imag_meV"] = number(milli(r.energy.imag()));
    row["branch"] = r.branch;
    table.push_back(std::move(row));
  }
  j["rows"] = std::move(table);
  Json mix = Json::array();
  for (const auto& m : mixed) {
    Json e;
    e["label"] = m.label;
    e["state"] = {m.state.n, m.state.l, m.state.m};
    e["partner"] = {m.partner.n, m.partner.l, m.partner.m};
    e["branch"] = m.branch == levels::Branch::Upper ? "upper" : "lower";
    e["coupling_meV"] = number(milli(m.coupling));
    e["selected_real_eV"] = number(m.selected().real());
    e["selected_imag_eV"] = number(m.selected().imag());
    e["other_real_eV"] = number(m.other().real());
    e["other_imag_eV"] = number(m.other().imag());
    mix.push_back(std::move(e));
  }
  j["mixed_states"] = std::move(mix);
  j["dipole_ab_sq_C2m2"] = number(dipole_sq);
  return dump(j);
}

std::string pulse_csv(const PulseRecord& record, const Provenance& provenance) {
  std::string out = csv_header(provenance, "pulse");
  out += "# t is retarded time t - z/c\n";
  out += "t_s,abs_env_in,arg_env_in,abs_env_out,arg_env_out\n";
  for (std::size_t i = 0; i < record.times.size(); ++i) {
    const Complex in = record.envelope_in[i];
    const Complex o = record.envelope_out[i];
    out += format_double(record.times[i]) + ',' + format_double(std::abs(in)) + ',' +
           format_double(std::arg(in)) + ',' + format_double(std::abs(o)) + ',' +
           format_double(std::arg(o)) + '\n';
  }
  return out;
}

std::string pulse_json(const PulseRecord& record, const PropagationParams& grid,
                       const PulseSummary& summary, const Provenance& provenance) {
  Json j = json_header(provenance, "pulse");
  Json s;
  s["delay_s"] = number(record.measured_delay);
  s["transit_s"] = number(record.transit_time);
  s["attenuation"] = number(record.measured_attenuation);
  s["phase_rad"] = number(record.measured_phase);
  s["slowdown"] = number(record.slowdown_factor());
  s["group_velocity_over_c"] = number(1.0 / record.slowdown_factor());
  s["expected_transit_s"] = number(summary.expected_transit);
  s["expected_attenuation"] = number(summary.expected_attenuation);
  s["analytic_l2_deviation"] = number(summary.analytic_l2_deviation);
  s["pulse_duration_s"] = number(summary.pulse_duration);
  j["summary"] = std::move(s);
  Json g;
  g["length_m"] = number(grid.length);
  g["z_steps"] = grid.z_steps;
  g["dz_m"] = number(grid.dz);
  g["t_steps"] = grid.t_steps;
  g["t_start_s"] = number(grid.t_start);
  g["dt_s"] = number(grid.dt);
  j["grid"] = std::move(g);
  j["warnings"] = record.warnings;
  return dump(j);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace eit::io
