#include "dcs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "dcs/bilinear.hpp"
#include "dcs/errors.hpp"
#include "json.hpp"

namespace dcs {

namespace {

using nlohmann::json;

std::vector<double> number_list(const json& j, const char* field) {
  if (!j.is_array() || j.empty())
    throw ConfigError(std::string(field) + ": expected a non-empty array");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number())
      throw ConfigError(std::string(field) + ": expected numbers");
    out.push_back(v.get<double>());
    if (!std::isfinite(out.back()))
      throw ConfigError(std::string(field) + ": non-finite value");
  }
  return out;
}

double positive_number(const json& j, const char* field) {
  if (!j.is_number())
    throw ConfigError(std::string(field) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v) || v <= 0.0)
    throw ConfigError(std::string(field) + ": must be positive and finite");
  return v;
}

json tf_to_json(const TransferFunction& tf) {
  json j;
  j["num"] = std::vector<double>(tf.num().coeffs().begin(),
                                 tf.num().coeffs().end());
  j["den"] = std::vector<double>(tf.den().coeffs().begin(),
                                 tf.den().coeffs().end());
  switch (tf.domain().kind()) {
    case Domain::Kind::S: j["domain"] = "s"; break;
    case Domain::Kind::Z: j["domain"] = "z"; break;
    case Domain::Kind::W: j["domain"] = "w"; break;
  }
  if (tf.domain().is_discrete())
    j["sample_period"] = tf.domain().sample_period();
  return j;
}

TransferFunction tf_from_json(const json& j) {
  const auto num = number_list(j.at("num"), "num");
  const auto den = number_list(j.at("den"), "den");
  const std::string dom = j.at("domain").get<std::string>();
  Domain d = Domain::s();
  if (dom == "z")
    d = Domain::z(positive_number(j.at("sample_period"), "sample_period"));
  else if (dom == "w")
    d = Domain::w(positive_number(j.at("sample_period"), "sample_period"));
  else if (dom != "s")
    throw ConfigError("domain: expected one of s/z/w");
  return TransferFunction(Polynomial(num), Polynomial(den), d);
}

}  // namespace

TransferFunction ProjectConfig::plant_s() const {
  return TransferFunction(Polynomial(plant_num), Polynomial(plant_den),
                          Domain::s());
}

ProjectConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");

  ProjectConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "plant_num") cfg.plant_num = number_list(value, "plant_num");
    else if (key == "plant_den") cfg.plant_den = number_list(value, "plant_den");
    else if (key == "sample_period")
      cfg.sample_period = positive_number(value, "sample_period");
    else if (key == "kpot") cfg.kpot = positive_number(value, "kpot");
    else if (key == "step_amplitude") {
      if (!value.is_number() || value.get<double>() == 0.0 ||
          !std::isfinite(value.get<double>()))
        throw ConfigError("step_amplitude: must be nonzero and finite");
      cfg.step_amplitude = value.get<double>();
    } else {
      throw ConfigError("config: unknown field '" + key + "'");
    }
  }
  if (Polynomial(cfg.plant_den).is_zero())
    throw ConfigError("plant_den: zero polynomial");
  return cfg;
}

ProjectConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string transfer_function_to_json(const TransferFunction& tf) {
  return tf_to_json(tf).dump(2) + "\n";
}

TransferFunction transfer_function_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("transfer function: ") + e.what());
  }
  try {
    return tf_from_json(j);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("transfer function: ") + e.what());
  }
}

std::string design_to_json(const ControllerDesign& d) {
  json j;
  j["method"] = to_string(d.method);
  j["goal"] = {{"phase_margin_deg", d.goal.phase_margin_deg},
               {"omega_wc", d.goal.omega_wc},
               {"sample_period", d.goal.sample_period}};
  j["theta_r_deg"] = d.theta_r_deg;
  j["params"] = d.params;
  j["d_w"] = tf_to_json(d.d_w);
  j["d_z"] = tf_to_json(d.d_z);
  j["loop_at_wc"] = {{"mag", d.loop_at_wc.mag},
                     {"phase_deg", d.loop_at_wc.phase_deg}};
  json a;
  if (d.achieved.phase_margin_deg) {
    a["phase_margin_deg"] = *d.achieved.phase_margin_deg;
    a["gain_crossover_w"] = *d.achieved.gain_crossover_w;
  }
  if (d.achieved.gain_margin_db) {
    a["gain_margin_db"] = *d.achieved.gain_margin_db;
    a["phase_crossover_w"] = *d.achieved.phase_crossover_w;
  }
  j["achieved"] = a;
  return j.dump(2) + "\n";
}

ControllerDesign design_from_json(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("design record: ") + e.what());
  }
  try {
    ControllerDesign d{method_from_string(j.at("method").get<std::string>()),
                       {j.at("goal").at("phase_margin_deg").get<double>(),
                        j.at("goal").at("omega_wc").get<double>(),
                        j.at("goal").at("sample_period").get<double>()},
                       j.at("theta_r_deg").get<double>(),
                       j.at("params").get<std::map<std::string, double>>(),
                       tf_from_json(j.at("d_w")),
                       tf_from_json(j.at("d_z")),
                       {j.at("loop_at_wc").at("mag").get<double>(),
                        j.at("loop_at_wc").at("phase_deg").get<double>()},
                       {}};
    const auto& a = j.at("achieved");
    if (a.contains("phase_margin_deg")) {
      d.achieved.phase_margin_deg = a.at("phase_margin_deg").get<double>();
      d.achieved.gain_crossover_w = a.at("gain_crossover_w").get<double>();
    }
    if (a.contains("gain_margin_db")) {
      d.achieved.gain_margin_db = a.at("gain_margin_db").get<double>();
      d.achieved.phase_crossover_w = a.at("phase_crossover_w").get<double>();
    }
    return d;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("design record: ") + e.what());
  }
}

ControllerDesign load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("design record: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return design_from_json(ss.str());
}

std::string metrics_to_json(const StepMetrics& m) {
  json j;
  j["steady_state_error"] = m.steady_state_error;
  j["percent_overshoot"] = m.percent_overshoot;
  j["rise_time_s"] = m.rise_time_s;
  j["settling_time_s"] = m.settling_time_s;
  return j.dump(2) + "\n";
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_bode_csv(std::ostream& os, std::span<const FrequencyPoint> points,
                    Domain domain) {
  os << "omega_rad_s,omega_warped_rad_s,mag_db,phase_deg\n";
  for (const auto& p : points) {
    const double warped = domain.kind() == Domain::Kind::Z
                              ? warp_frequency(p.omega, domain.sample_period())
                              : p.omega;
    os << format_number(p.omega) << ',' << format_number(warped) << ','
       << format_number(p.mag_db) << ',' << format_number(p.phase_deg) << '\n';
  }
}

void write_step_csv(std::ostream& os, std::span<const double> y,
                    double sample_period, double kpot) {
  os << "t_s,y_volts,y_deg\n";
  for (std::size_t k = 0; k < y.size(); ++k) {
    os << format_number(static_cast<double>(k) * sample_period) << ','
       << format_number(y[k]) << ',' << format_number(y[k] / kpot) << '\n';
  }
}

}  // namespace dcs
