// Apache License, Version 2.0, refer to LICENSE.txt

#include "tilt/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tilt {

namespace {

using nlohmann::json;
constexpr double kInf = std::numeric_limits<double>::infinity();

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void dump_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
}

Outcome outcome_from_json(const json& j, const char* field) {
  if (j.is_number()) return Outcome(j.get<double>());
  if (j.is_string()) return Outcome(j.get<std::string>());
  throw InputError(std::string("field '") + field +
                   "': outcome must be a number or a string");
}

// tabular keys live in JSON object position, so numbers arrive as strings
Outcome outcome_from_key(const std::string& key) {
  char* end = nullptr;
  double v = std::strtod(key.c_str(), &end);
  if (end && *end == '\0' && end != key.c_str()) return Outcome(v);
  return Outcome(key);
}

std::string outcome_to_key(const Outcome& o) {
  if (!o.is_numeric()) return o.label();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", o.numeric());
  return buf;
}

json outcome_to_json(const Outcome& o) {
  if (o.is_numeric()) return json(o.numeric());
  return json(o.label());
}

double extended_from_json(const json& j, const char* field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string() && j.get<std::string>() == "inf") return kInf;
  throw InputError(std::string("field '") + field +
                   "': expected a number or \"inf\"");
}

json extended_to_json(double v) {
  if (std::isinf(v) && v > 0.0) return json("inf");
  return json(v);
}

double number_field(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number())
    throw InputError(std::string("missing or non-numeric field '") + field +
                     "'");
  return j.at(field).get<double>();
}

std::vector<double> number_array(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array())
    throw InputError(std::string("missing or non-array field '") + field + "'");
  std::vector<double> out;
  for (const auto& e : j.at(field)) {
    if (!e.is_number())
      throw InputError(std::string("field '") + field +
                       "' must contain numbers only");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<Outcome> outcome_array(const json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_array())
    throw InputError(std::string("missing or non-array field '") + field + "'");
  std::vector<Outcome> out;
  for (const auto& e : j.at(field)) out.push_back(outcome_from_json(e, field));
  return out;
}

Measure measure_from(const json& j) {
  if (!j.contains("type") || !j.at("type").is_string())
    throw InputError("missing or non-string field 'type'");
  std::string type = j.at("type").get<std::string>();
  if (type == "discrete") {
    return make_discrete(outcome_array(j, "points"),
                         number_array(j, "weights"));
  }
  if (type == "grid") {
    double lo = number_field(j, "lo");
    double hi = number_field(j, "hi");
    auto density = number_array(j, "density");
    if (j.contains("n") &&
        j.at("n").get<std::size_t>() != density.size())
      throw InputError("field 'n' does not match the density length");
    return GridMeasure(lo, hi, std::move(density));
  }
  throw InputError("field 'type': expected \"discrete\" or \"grid\"");
}

json measure_to(const Measure& m) {
  json j;
  if (const auto* d = std::get_if<DiscreteMeasure>(&m)) {
    j["type"] = "discrete";
    j["points"] = json::array();
    for (const auto& p : d->points()) j["points"].push_back(outcome_to_json(p));
    j["weights"] = d->weights();
  } else {
    const auto& g = std::get<GridMeasure>(m);
    j["type"] = "grid";
    j["lo"] = g.lo();
    j["hi"] = g.hi();
    j["n"] = g.n();
    j["density"] = g.density();
  }
  return j;
}

LossFunction loss_from(const json& j) {
  if (!j.contains("variant") || !j.at("variant").is_string())
    throw InputError("missing or non-string field 'variant'");
  std::string variant = j.at("variant").get<std::string>();
  double k = j.contains("k") ? number_field(j, "k") : 1.0;

  if (variant == "tabular") {
    if (!j.contains("values") || !j.at("values").is_object())
      throw InputError("missing or non-object field 'values'");
    std::map<Outcome, double> values;
    for (const auto& [key, v] : j.at("values").items())
      values.emplace(outcome_from_key(key), extended_from_json(v, "values"));
    return tabular_loss(std::move(values), k);
  }
  if (variant == "quadratic") return quadratic_loss(number_field(j, "w"), k);
  if (variant == "restriction") {
    auto pts = outcome_array(j, "B");
    return restriction_loss(std::set<Outcome>(pts.begin(), pts.end()), k);
  }
  if (variant == "sum") {
    if (!j.contains("terms") || !j.at("terms").is_array())
      throw InputError("missing or non-array field 'terms'");
    LossFunction::Sum sum;
    for (const auto& t : j.at("terms")) sum.terms.push_back(loss_from(t));
    return LossFunction(std::move(sum), k);
  }
  throw InputError("field 'variant': unknown loss variant '" + variant + "'");
}

json loss_to(const LossFunction& h) {
  json j;
  j["k"] = h.scale();
  struct Visit {
    json& j;
    void operator()(const LossFunction::Zero&) const {
      j["variant"] = "tabular";
      j["values"] = json::object();
    }
    void operator()(const LossFunction::Tabular& t) const {
      j["variant"] = "tabular";
      json values = json::object();
      for (const auto& [o, v] : t.values)
        values[outcome_to_key(o)] = extended_to_json(v);
      j["values"] = std::move(values);
    }
    void operator()(const LossFunction::Quadratic& q) const {
      j["variant"] = "quadratic";
      j["w"] = q.w;
    }
    void operator()(const LossFunction::Restriction& r) const {
      j["variant"] = "restriction";
      j["B"] = json::array();
      for (const auto& o : r.allowed) j["B"].push_back(outcome_to_json(o));
    }
    void operator()(const LossFunction::Sum& s) const {
      j["variant"] = "sum";
      j["terms"] = json::array();
      for (const auto& t : s.terms) j["terms"].push_back(loss_to(t));
    }
  };
  std::visit(Visit{j}, h.variant());
  return j;
}

JointTable joint_from(const json& j) {
  auto xs = outcome_array(j, "x_labels");
  auto ys = outcome_array(j, "y_labels");
  if (!j.contains("mass") || !j.at("mass").is_array())
    throw InputError("missing or non-array field 'mass'");
  std::vector<std::vector<double>> mass;
  for (const auto& row : j.at("mass")) {
    if (!row.is_array())
      throw InputError("field 'mass' must be an array of arrays");
    std::vector<double> r;
    for (const auto& e : row) {
      if (!e.is_number())
        throw InputError("field 'mass' must contain numbers only");
      r.push_back(e.get<double>());
    }
    mass.push_back(std::move(r));
  }
  return JointTable(std::move(xs), std::move(ys), std::move(mass));
}

}  // namespace

Measure read_measure(const std::string& path) {
  return measure_from(parse_file(path));
}

Measure measure_from_json(const std::string& text) {
  try {
    return measure_from(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_measure(const std::string& path, const Measure& m) {
  dump_file(path, measure_to(m));
}

std::string measure_to_json(const Measure& m) { return measure_to(m).dump(2); }

LossFunction read_loss(const std::string& path) {
  return loss_from(parse_file(path));
}

LossFunction loss_from_json(const std::string& text) {
  try {
    return loss_from(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_loss(const std::string& path, const LossFunction& h) {
  dump_file(path, loss_to(h));
}

std::string loss_to_json(const LossFunction& h) { return loss_to(h).dump(2); }

JointTable read_joint(const std::string& path) {
  return joint_from(parse_file(path));
}

JointTable joint_from_json(const std::string& text) {
  try {
    return joint_from(json::parse(text));
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

void write_report(const std::string& path, const UpdateReport& rep) {
  json j;
  j["log_normalizer"] = rep.log_normalizer;
  j["cumulative_loss"] = rep.cumulative_loss_at_posterior;
  j["integrable"] = rep.integrable;
  if (rep.multiplier) j["multiplier"] = extended_to_json(*rep.multiplier);
  if (rep.degenerate) j["degenerate"] = true;
  dump_file(path, j);
}

void write_report(const std::string& path, const GridUpdateReport& rep) {
  json j;
  j["log_normalizer"] = rep.log_normalizer;
  j["cumulative_loss"] = rep.cumulative_loss_at_posterior;
  j["integrable"] = rep.integrable;
  dump_file(path, j);
}

}  // namespace tilt
