#include "morrap/config.hpp"

#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "morrap/error.hpp"

namespace morrap {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(ErrorKind::config, fmt::format("{}: missing field '{}'", where, key));
  }
  return obj.at(key);
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number()) fail(ErrorKind::config, fmt::format("{}: field '{}' must be a number", where, key));
  return v.get<double>();
}

double number_or(const json& obj, const char* key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

std::string string_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) fail(ErrorKind::config, fmt::format("{}: field '{}' must be a string", where, key));
  return v.get<std::string>();
}

const json& array_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_array()) fail(ErrorKind::config, fmt::format("{}: field '{}' must be an array", where, key));
  return v;
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) fail(ErrorKind::config, where + ": expected an integer");
  return v.get<int>();
}

CentroidInterval interval(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3 || !v[0].is_number() || !v[1].is_number() || !v[2].is_number()) {
    fail(ErrorKind::config, where + ": expected [y_l, y_r, defuzzified]");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

ReferenceRow parse_row(const json& j, const std::string& where) {
  ReferenceRow row;
  row.method = string_field(j, "method", where);
  if (j.contains("label")) row.label = string_field(j, "label", where);
  row.desirability_k = number_or(j, "t1", 1.0, where);
  row.reliability = number(j, "R", where);
  row.cost = number(j, "C", where);
  for (const json& v : array_field(j, "n", where)) {
    if (v.is_null()) {
      row.n.emplace_back(std::nullopt);
    } else {
      row.n.emplace_back(integer(v, where + ".n"));
    }
  }
  return row;
}

void parse_reference(const json& ref, PlantConfig& cfg) {
  if (ref.contains("defuzzification")) {
    std::size_t i = 0;
    for (const json& j : array_field(ref, "defuzzification", "reference")) {
      const std::string where = fmt::format("reference.defuzzification[{}]", i++);
      DefuzzReference d;
      d.km = interval(field(j, "km", where), where + ".km");
      d.ub = interval(field(j, "ub", where), where + ".ub");
      d.nt = number(j, "nt", where);
      d.gc = number(j, "gc", where);
      cfg.defuzz_reference.push_back(d);
    }
  }
  if (ref.contains("tables")) {
    std::size_t i = 0;
    for (const json& j : array_field(ref, "tables", "reference")) {
      const std::string where = fmt::format("reference.tables[{}]", i++);
      ReferenceTable t;
      t.id = string_field(j, "id", where);
      t.reduction = parse_reduction(string_field(j, "reduction", where));
      t.max_reliability = number(j, "max_R", where);
      t.min_cost = number(j, "min_C", where);
      std::size_t k = 0;
      for (const json& row : array_field(j, "rows", where)) {
        t.rows.push_back(parse_row(row, fmt::format("{}.rows[{}]", where, k++)));
      }
      if (j.contains("convergence")) {
        for (const json& v : array_field(j, "convergence", where)) {
          if (!v.is_number()) fail(ErrorKind::config, where + ".convergence: expected numbers");
          t.convergence.push_back(v.get<double>());
        }
      }
      cfg.reference_tables.push_back(std::move(t));
    }
  }
}

}  // namespace

const ReferenceTable* PlantConfig::reference(std::string_view id) const noexcept {
  for (const ReferenceTable& t : reference_tables) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

PlantConfig parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::config, fmt::format("configuration is not valid JSON: {}", e.what()));
  }
  if (!root.is_object()) fail(ErrorKind::config, "configuration must be a JSON object");

  PlantConfig cfg;
  if (root.contains("name")) cfg.name = string_field(root, "name", "config");
  cfg.volume_limit = number(root, "V", "config");
  cfg.weight_limit = number(root, "W", "config");
  cfg.mission_time = number(root, "T", "config");
  if (root.contains("grid")) {
    const int g = integer(root.at("grid"), "config.grid");
    if (g < 3) fail(ErrorKind::config, "config.grid must be at least 3");
    cfg.grid = static_cast<std::size_t>(g);
  }

  try {
    std::size_t i = 0;
    for (const json& s : array_field(root, "subsystems", "config")) {
      const std::string where = fmt::format("subsystems[{}]", i++);
      SubsystemParams p;
      p.alpha = number(s, "alpha_scaled_1e5", where) * 1e-5;
      p.beta = number(s, "beta", where);
      p.v = number(s, "v", where);
      p.w = number(s, "w", where);
      if (s.contains("n_max")) p.n_max = integer(s.at("n_max"), where + ".n_max");
      p.r_min = number_or(s, "r_min", p.r_min, where);
      p.r_max = number_or(s, "r_max", p.r_max, where);
      cfg.subsystems.push_back(p);
      if (s.contains("it2")) cfg.it2.push_back(parse_it2(string_field(s, "it2", where)));
      if (s.contains("t1")) cfg.t1.push_back(parse_t1(string_field(s, "t1", where)));
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::config) throw;
    fail(ErrorKind::config, e.what());
  }
  const std::size_t m = cfg.subsystems.size();
  if (m == 0) fail(ErrorKind::config, "config: no subsystems");

  if (root.contains("generation")) {
    const json& g = root.at("generation");
    GenerationSpec spec;
    spec.a = number_or(g, "a", spec.a, "generation");
    spec.b = number_or(g, "b", spec.b, "generation");
    const json& seed = field(g, "seed", "generation");
    if (!seed.is_number_unsigned()) fail(ErrorKind::config, "generation.seed must be a nonnegative integer");
    spec.seed = seed.get<std::uint64_t>();
    for (const json& r : array_field(g, "r", "generation")) {
      if (!r.is_number()) fail(ErrorKind::config, "generation.r: expected numbers");
      spec.r_values.push_back(r.get<double>());
    }
    try {
      spec.validate();
    } catch (const Error& e) {
      fail(ErrorKind::config, fmt::format("generation: {}", e.what()));
    }
    if (spec.r_values.size() != m) {
      fail(ErrorKind::config, fmt::format("generation.r has {} values for {} subsystems",
                                          spec.r_values.size(), m));
    }
    cfg.generation = spec;
    if (cfg.it2.empty()) {
      cfg.it2 = generate_set(spec).it2;
      cfg.it2_generated = true;
    }
  }

  if (cfg.it2.size() != m) {
    fail(ErrorKind::config,
         fmt::format("every subsystem needs an 'it2' reliability (or a generation block); "
                     "found {} of {}", cfg.it2.size(), m));
  }
  if (!cfg.t1.empty() && cfg.t1.size() != m) {
    fail(ErrorKind::config, fmt::format("'t1' given for {} of {} subsystems", cfg.t1.size(), m));
  }

  if (root.contains("reference")) {
    try {
      parse_reference(root.at("reference"), cfg);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::config) throw;
      fail(ErrorKind::config, e.what());
    }
  }
  return cfg;
}

PlantConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::config, fmt::format("cannot open configuration '{}'", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::vector<double> crisp_reliabilities(const PlantConfig& cfg, Reduction method,
                                        std::size_t grid) {
  std::vector<double> out;
  out.reserve(cfg.subsystems.size());
  if (method == Reduction::t1) {
    std::vector<TriangularFuzzyNumber> t1 = cfg.t1;
    if (t1.empty() && cfg.generation) t1 = generate_set(*cfg.generation).t1;
    if (t1.empty()) {
      fail(ErrorKind::config, "t1-centroid needs 't1' reliabilities or a generation block");
    }
    for (const TriangularFuzzyNumber& t : t1) out.push_back(t1_centroid(t));
    return out;
  }
  for (const IntervalType2FuzzyNumber& f : cfg.it2) out.push_back(defuzzify(f, method, grid));
  return out;
}

void reseed(PlantConfig& cfg, std::uint64_t seed) {
  if (!cfg.generation) fail(ErrorKind::config, "a seed needs a generation block in the configuration");
  cfg.generation->seed = seed;
  if (cfg.it2_generated) cfg.it2 = generate_set(*cfg.generation).it2;
}

ProblemInstance make_instance(const PlantConfig& cfg, std::vector<double> reliabilities,
                              RedundancyProfile profile) {
  ProblemInstance inst;
  inst.subsystems = cfg.subsystems;
  inst.volume_limit = cfg.volume_limit;
  inst.weight_limit = cfg.weight_limit;
  inst.mission_time = cfg.mission_time;
  inst.reliabilities = std::move(reliabilities);
  apply_profile(inst, profile);
  inst.validate();
  return inst;
}

}  // namespace morrap
