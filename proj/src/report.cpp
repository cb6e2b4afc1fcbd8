#include "morrap/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fmt/format.h>
#include <json.hpp>
#include <limits>

#include "morrap/error.hpp"

namespace morrap {

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  fail(ErrorKind::invalid_argument, fmt::format("unknown output format '{}' (expected csv or json)", name));
}

std::size_t Section::column(std::string_view c) const {
  const auto it = std::find(columns.begin(), columns.end(), c);
  if (it == columns.end()) {
    fail(ErrorKind::invalid_argument, fmt::format("section '{}' has no column '{}'", name, c));
  }
  return static_cast<std::size_t>(it - columns.begin());
}

const Section* Report::find(std::string_view name) const noexcept {
  for (const Section& s : sections) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

namespace {

std::string csv_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const {
      if (std::isnan(d)) return "nan";
      return fmt::format("{}", d);
    }
    std::string operator()(const std::string& s) const {
      if (s.find_first_of(",\"\n") == std::string::npos) return s;
      std::string out = "\"";
      for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
      }
      return out + '"';
    }
  } v;
  return std::visit(v, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(std::int64_t i) const { return i; }
    nlohmann::ordered_json operator()(double d) const {
      if (!std::isfinite(d)) return nullptr;
      return d;
    }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  } v;
  return std::visit(v, c);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) fail(ErrorKind::config, "unterminated quote in CSV report");
  out.push_back(std::move(cur));
  return out;
}

double as_double(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  if (const auto* s = std::get_if<std::string>(&c)) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s->data(), s->data() + s->size(), v);
    if (ec == std::errc() && ptr == s->data() + s->size()) return v;
  }
  fail(ErrorKind::config, "expected a numeric cell");
}

std::string design_text(const std::vector<std::optional<int>>& n) {
  std::string out = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i) out += ',';
    out += n[i] ? std::to_string(*n[i]) : "?";
  }
  return out + ")";
}

const ReferenceTable* reference_for(const PlantConfig& cfg, Reduction r) {
  return cfg.reference(r == Reduction::t1 ? "it2-vs-t1:t1" : to_string(r));
}

// Runs `fn`, prefixing any library error with the stage that raised it.
template <class Fn>
auto stage(std::string_view name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    fail(e.kind(), fmt::format("stage '{}': {}", name, e.what()));
  }
}

bool within(const Objectives& a, double reliability, double cost, const Tolerance& tol) {
  return std::abs(a.reliability - reliability) <= tol.reliability &&
         std::abs(a.cost - cost) <= tol.cost;
}

std::string row_flag(const RowCheck& c) {
  if (c.consistent) return "consistent";
  return c.evaluation.feasible ? "paper-inconsistent" : "paper-inconsistent;infeasible";
}

}  // namespace

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    nlohmann::ordered_json doc;
    doc["sections"] = nlohmann::ordered_json::array();
    for (const Section& s : report.sections) {
      nlohmann::ordered_json js;
      js["name"] = s.name;
      js["columns"] = s.columns;
      js["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : s.rows) {
        nlohmann::ordered_json jr;
        for (std::size_t i = 0; i < s.columns.size() && i < row.size(); ++i) {
          jr[s.columns[i]] = json_cell(row[i]);
        }
        js["rows"].push_back(std::move(jr));
      }
      doc["sections"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
  }
  std::string out;
  for (std::size_t k = 0; k < report.sections.size(); ++k) {
    const Section& s = report.sections[k];
    if (k) out += '\n';
    out += "# " + s.name + '\n';
    for (std::size_t i = 0; i < s.columns.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(s.columns[i]);
    }
    out += '\n';
    for (const auto& row : s.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(row[i]);
      }
      out += '\n';
    }
  }
  return out;
}

Report parse_csv_report(std::string_view text) {
  Report r;
  Section* cur = nullptr;
  bool want_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("# ")) {
      r.sections.push_back(Section{std::string(line.substr(2)), {}, {}});
      cur = &r.sections.back();
      want_header = true;
      continue;
    }
    if (!cur) fail(ErrorKind::config, "CSV report row outside a section");
    std::vector<std::string> cells = split_csv_line(line);
    if (want_header) {
      cur->columns = std::move(cells);
      want_header = false;
    } else {
      std::vector<Cell> row(cells.begin(), cells.end());
      cur->rows.push_back(std::move(row));
    }
  }
  return r;
}

std::size_t effective_grid(const PlantConfig& cfg, const RunConfig& run) {
  if (run.grid) return *run.grid;
  if (const char* env = std::getenv("MORRAP_GRID")) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
    if (ec != std::errc() || ptr != env + std::strlen(env) || v < 3) {
      fail(ErrorKind::config, fmt::format("MORRAP_GRID='{}' is not a grid size >= 3", env));
    }
    return v;
  }
  return cfg.grid;
}

std::vector<MethodSpec> requested_methods(const RunConfig& run) {
  const std::string& m = run.method;
  const bool all = m == "all";
  if (!all && m != "global" && m != "weighted" && m != "desirability" && m != "fuzzy" &&
      m != "nimbus") {
    fail(ErrorKind::invalid_argument,
         fmt::format("unknown method '{}' (expected global, weighted, desirability, fuzzy, nimbus or all)", m));
  }
  std::vector<MethodSpec> out;
  if (all || m == "global") out.emplace_back(GlobalCriterionSpec{run.p});
  if (all || m == "weighted") out.emplace_back(WeightedSumSpec{run.w_reliability, run.w_cost});
  if (all || m == "desirability") {
    for (double k : run.desirability_k) {
      DesirabilitySpec d;
      d.k = k;
      d.l = run.desirability_l;
      out.emplace_back(d);
    }
  }
  if (all || m == "fuzzy") out.emplace_back(FuzzyMaxMinSpec{});
  if (all || m == "nimbus") {
    NimbusSpec n;
    n.reliability = run.nimbus_reliability;
    n.cost = run.nimbus_cost;
    n.rho = run.rho;
    out.emplace_back(n);
  }
  return out;
}

RowCheck check_reference_row(const ProblemInstance& inst, const ReferenceRow& row,
                             const Tolerance& tol) {
  if (row.n.size() != inst.size()) {
    fail(ErrorKind::config, fmt::format("published row '{}' has {} levels for {} subsystems",
                                        row.method, row.n.size(), inst.size()));
  }
  std::vector<std::size_t> holes;
  std::vector<int> levels(row.n.size(), 1);
  for (std::size_t i = 0; i < row.n.size(); ++i) {
    if (row.n[i]) {
      levels[i] = *row.n[i];
    } else {
      holes.push_back(i);
    }
  }
  RowCheck best;
  best.has_wildcard = !holes.empty();
  double best_err = std::numeric_limits<double>::infinity();
  bool have = false;
  // Odometer over the wildcard levels; the first best fill wins.
  for (;;) {
    DesignVector d(levels);
    Evaluation e = evaluate(inst, d);
    const double err = std::max(std::abs(e.reliability - row.reliability) / tol.reliability,
                                std::abs(e.cost - row.cost) / tol.cost);
    const bool better = !have || (e.feasible && !best.evaluation.feasible) ||
                        (e.feasible == best.evaluation.feasible && err < best_err);
    if (better) {
      have = true;
      best_err = err;
      best.design = std::move(d);
      best.evaluation = std::move(e);
    }
    std::size_t j = holes.size();
    while (j-- > 0) {
      const std::size_t i = holes[j];
      if (levels[i] < inst.subsystems[i].n_max) {
        ++levels[i];
        break;
      }
      levels[i] = 1;
    }
    if (j == static_cast<std::size_t>(-1)) break;
  }
  best.consistent = best.evaluation.feasible &&
                    within(best.evaluation.objectives(), row.reliability, row.cost, tol);
  return best;
}

const ReferenceRow* match_reference(const ReferenceTable& table, const MethodSpec& method) {
  const std::string name = method_name(method);
  if (const auto* g = std::get_if<GlobalCriterionSpec>(&method); g && g->p != 2.0) return nullptr;
  if (const auto* w = std::get_if<WeightedSumSpec>(&method);
      w && (w->w_reliability != 0.5 || w->w_cost != 0.5)) {
    return nullptr;
  }
  for (const ReferenceRow& r : table.rows) {
    if (r.method != name) continue;
    if (const auto* d = std::get_if<DesirabilitySpec>(&method); d && d->k != r.desirability_k) continue;
    return &r;
  }
  return nullptr;
}

PipelineResult solve_pipeline(const PlantConfig& cfg_in, const RunConfig& run) {
  PlantConfig cfg = cfg_in;
  if (run.seed) stage("configuration", [&] { reseed(cfg, *run.seed); return 0; });
  PipelineResult res;
  res.reduction = run.reduction;
  res.grid = effective_grid(cfg, run);
  res.reliabilities = stage("defuzzification", [&] {
    return crisp_reliabilities(cfg, run.reduction, res.grid);
  });
  res.instance = stage("instance", [&] {
    return make_instance(cfg, res.reliabilities, run.profile);
  });
  res.payoff = stage("payoff", [&] { return build_payoff(res.instance, run.solver); });
  res.methods = stage("methods", [&] { return requested_methods(run); });
  for (const MethodSpec& m : res.methods) {
    res.solutions.push_back(stage(fmt::format("method {}", method_name(m)), [&] {
      return optimize_scalarized(res.instance, m, res.payoff, run.solver);
    }));
  }
  return res;
}

namespace {

Section run_section(const PlantConfig& cfg, const RunConfig& run, const PipelineResult& res) {
  Section s{"run", {"key", "value"}, {}};
  s.rows.push_back({std::string("instance"), cfg.name});
  s.rows.push_back({std::string("reduction"), std::string(to_string(res.reduction))});
  s.rows.push_back({std::string("grid"), static_cast<std::int64_t>(res.grid)});
  s.rows.push_back({std::string("profile"), std::string(to_string(run.profile))});
  s.rows.push_back({std::string("method"), run.method});
  s.rows.push_back({std::string("subsystems"), static_cast<std::int64_t>(res.instance.size())});
  return s;
}

Section crisp_section(const PlantConfig& cfg, const RunConfig& run, const PipelineResult& res) {
  Section s{"defuzzification",
            {"index", "fuzzy_number", "y_l", "y_r", "crisp", "published_y_l", "published_y_r", "published_crisp",
             "abs_diff"},
            {}};
  PlantConfig local = cfg;
  if (run.seed) reseed(local, *run.seed);
  std::vector<TriangularFuzzyNumber> t1 = local.t1;
  if (res.reduction == Reduction::t1 && t1.empty() && local.generation) {
    t1 = generate_set(*local.generation).t1;
  }
  for (std::size_t i = 0; i < res.reliabilities.size(); ++i) {
    std::vector<Cell> row{static_cast<std::int64_t>(i + 1)};
    Cell y_l, y_r, p_l, p_r, p_c;
    std::string text;
    if (res.reduction == Reduction::t1) {
      text = to_string(t1[i]);
    } else {
      const IntervalType2FuzzyNumber& f = local.it2[i];
      text = to_string(f);
      std::optional<CentroidInterval> iv;
      if (res.reduction == Reduction::km) iv = km_centroid(f, res.grid);
      if (res.reduction == Reduction::ub) iv = uncertainty_bounds(f, res.grid);
      if (iv) {
        y_l = iv->y_l;
        y_r = iv->y_r;
      }
      if (i < local.defuzz_reference.size()) {
        const DefuzzReference& ref = local.defuzz_reference[i];
        switch (res.reduction) {
          case Reduction::km:
            p_l = ref.km.y_l, p_r = ref.km.y_r, p_c = ref.km.defuzzified;
            break;
          case Reduction::ub:
            p_l = ref.ub.y_l, p_r = ref.ub.y_r, p_c = ref.ub.defuzzified;
            break;
          case Reduction::nt: p_c = ref.nt; break;
          case Reduction::gc: p_c = ref.gc; break;
          case Reduction::t1: break;
        }
      }
    }
    const double crisp = res.reliabilities[i];
    Cell diff;
    if (const auto* pc = std::get_if<double>(&p_c)) diff = std::abs(crisp - *pc);
    row.insert(row.end(), {text, y_l, y_r, crisp, p_l, p_r, p_c, diff});
    s.rows.push_back(std::move(row));
  }
  return s;
}

Section payoff_section(const PipelineResult& res, const ReferenceTable* ref) {
  Section s{"payoff",
            {"objective", "design", "reliability", "cost", "optimum", "published_optimum", "deviation",
             "verified", "bounds_published_compromises"},
            {}};
  const PayoffTable& pt = res.payoff;
  for (int k = 0; k < 2; ++k) {
    const bool rel = k == 0;
    const DesignVector& d = rel ? pt.reliability_design : pt.cost_design;
    const Evaluation e = evaluate(res.instance, d);
    const double opt = rel ? pt.reliability_max : pt.cost_min;
    const bool verified = e.feasible && (rel ? e.reliability : e.cost) == opt;
    Cell published, dev, bounds;
    if (ref) {
      const double p = rel ? ref->max_reliability : ref->min_cost;
      published = p;
      dev = opt - p;
      bool ok = true;
      for (const ReferenceRow& r : ref->rows) ok = ok && (rel ? opt >= r.reliability : opt <= r.cost);
      bounds = ok;
    }
    s.rows.push_back({std::string(rel ? "max_reliability" : "min_cost"), to_string(d), e.reliability,
                      e.cost, opt, published, dev, verified, bounds});
  }
  return s;
}

Section anchors_section(const PayoffTable& pt) {
  Section s{"anchors", {"anchor", "value"}, {}};
  s.rows.push_back({std::string("reliability_max"), pt.reliability_max});
  s.rows.push_back({std::string("reliability_at_cost_min"), pt.reliability_at_cost_min});
  s.rows.push_back({std::string("reliability_floor"), pt.reliability_floor});
  s.rows.push_back({std::string("cost_min"), pt.cost_min});
  s.rows.push_back({std::string("cost_at_reliability_max"), pt.cost_at_reliability_max});
  s.rows.push_back({std::string("cost_ceiling"), pt.cost_ceiling});
  return s;
}

Section solutions_section(const PipelineResult& res, const ReferenceTable* ref, const Tolerance& tol) {
  Section s{"solutions",
            {"method", "params", "n", "reliability", "cost", "volume", "weight", "score", "ties",
             "convergence", "convergence_range", "published_n", "published_reliability", "published_cost",
             "matches_published"},
            {}};
  for (std::size_t i = 0; i < res.solutions.size(); ++i) {
    const CompromiseSolution& c = res.solutions[i];
    std::vector<Cell> row{c.method,
                          c.params,
                          to_string(c.design),
                          c.evaluation.reliability,
                          c.evaluation.cost,
                          c.evaluation.volume,
                          c.evaluation.weight,
                          c.score,
                          static_cast<std::int64_t>(c.ties),
                          c.convergence,
                          c.convergence_range};
    const ReferenceRow* r = ref ? match_reference(*ref, res.methods[i]) : nullptr;
    if (r) {
      row.insert(row.end(), {design_text(r->n), r->reliability, r->cost,
                             within(c.evaluation.objectives(), r->reliability, r->cost, tol)});
    } else {
      row.insert(row.end(), {Cell{}, Cell{}, Cell{}, Cell{}});
    }
    s.rows.push_back(std::move(row));
  }
  return s;
}

Section published_rows_section(const PipelineResult& res, const ReferenceTable& ref, const Tolerance& tol) {
  Section s{"published_rows",
            {"table", "method", "label", "published_n", "published_reliability", "published_cost", "evaluated_n",
             "evaluated_reliability", "evaluated_cost", "feasible", "flag"},
            {}};
  for (const ReferenceRow& r : ref.rows) {
    const RowCheck c = check_reference_row(res.instance, r, tol);
    s.rows.push_back({ref.id, r.method, r.label, design_text(r.n), r.reliability, r.cost,
                      to_string(c.design), c.evaluation.reliability, c.evaluation.cost,
                      c.evaluation.feasible, row_flag(c)});
  }
  return s;
}

void calibration_sections(Report& report, const PipelineResult& res, const ReferenceTable& ref) {
  if (ref.convergence.empty()) return;
  Section s{"convergence_calibration",
            {"method", "label", "published_reliability", "published_cost", "published_distance", "ideal_convention",
             "range_convention", "ideal_abs_diff", "range_abs_diff"},
            {}};
  double max_ideal = 0.0;
  double max_range = 0.0;
  const std::size_t k = std::min(ref.convergence.size(), ref.rows.size());
  for (std::size_t i = 0; i < k; ++i) {
    const ReferenceRow& r = ref.rows[i];
    const Objectives o{r.reliability, r.cost};
    const double ideal = convergence_metric(o, res.payoff, ConvergenceNorm::ideal);
    const double range = convergence_metric(o, res.payoff, ConvergenceNorm::range);
    const double di = std::abs(ideal - ref.convergence[i]);
    const double dr = std::abs(range - ref.convergence[i]);
    max_ideal = std::max(max_ideal, di);
    max_range = std::max(max_range, dr);
    s.rows.push_back({r.method, r.label, r.reliability, r.cost, ref.convergence[i], ideal, range, di, dr});
  }
  report.sections.push_back(std::move(s));
  Section summary{"convergence_summary", {"convention", "max_abs_diff", "within_1e-3"}, {}};
  summary.rows.push_back({std::string("ideal"), max_ideal, max_ideal <= 1e-3});
  summary.rows.push_back({std::string("range"), max_range, max_range <= 1e-3});
  report.sections.push_back(std::move(summary));
}

}  // namespace

Report defuzzification_report(const PlantConfig& cfg, std::size_t grid) {
  Section s{"type_reduction",
            {"index", "it2", "km_y_l", "km_y_r", "km", "ub_y_l", "ub_y_r", "ub", "nt", "gc",
             "published_km_y_l", "published_km_y_r", "published_km", "published_ub_y_l", "published_ub_y_r", "published_ub",
             "published_nt", "published_gc", "max_abs_diff"},
            {}};
  for (std::size_t i = 0; i < cfg.it2.size(); ++i) {
    const IntervalType2FuzzyNumber& f = cfg.it2[i];
    const auto [km, ub, nt, gc] = stage("defuzzification", [&] {
      return std::tuple{km_centroid(f, grid), uncertainty_bounds(f, grid), nie_tan(f, grid),
                        geometric_centroid(f)};
    });
    std::vector<Cell> row{static_cast<std::int64_t>(i + 1), to_string(f), km.y_l, km.y_r,
                          km.defuzzified, ub.y_l, ub.y_r, ub.defuzzified, nt, gc};
    if (i < cfg.defuzz_reference.size()) {
      const DefuzzReference& r = cfg.defuzz_reference[i];
      const double ours[] = {km.y_l, km.y_r, km.defuzzified, ub.y_l, ub.y_r, ub.defuzzified, nt, gc};
      const double published[] = {r.km.y_l, r.km.y_r, r.km.defuzzified, r.ub.y_l,
                              r.ub.y_r, r.ub.defuzzified, r.nt, r.gc};
      double worst = 0.0;
      for (std::size_t k = 0; k < 8; ++k) {
        row.emplace_back(published[k]);
        worst = std::max(worst, std::abs(ours[k] - published[k]));
      }
      row.emplace_back(worst);
    } else {
      row.resize(s.columns.size());
    }
    s.rows.push_back(std::move(row));
  }
  Section run{"run", {"key", "value"}, {}};
  run.rows.push_back({std::string("grid"), static_cast<std::int64_t>(grid)});
  return Report{{std::move(run), std::move(s)}};
}

Report payoff_report(const PlantConfig& cfg, const RunConfig& run_in) {
  RunConfig run = run_in;
  PlantConfig local = cfg;
  if (run.seed) stage("configuration", [&] { reseed(local, *run.seed); return 0; });
  PipelineResult res;
  res.reduction = run.reduction;
  res.grid = effective_grid(local, run);
  res.reliabilities = stage("defuzzification", [&] {
    return crisp_reliabilities(local, run.reduction, res.grid);
  });
  res.instance = stage("instance", [&] { return make_instance(local, res.reliabilities, run.profile); });
  res.payoff = stage("payoff", [&] { return build_payoff(res.instance, run.solver); });
  run.method = "payoff";
  Report r;
  r.sections.push_back(run_section(local, run, res));
  r.sections.push_back(payoff_section(res, reference_for(local, run.reduction)));
  r.sections.push_back(anchors_section(res.payoff));
  return r;
}

Report run_pipeline(const PlantConfig& cfg, const RunConfig& run) {
  const PipelineResult res = solve_pipeline(cfg, run);
  const ReferenceTable* ref = reference_for(cfg, run.reduction);
  Report r;
  r.sections.push_back(run_section(cfg, run, res));
  r.sections.push_back(crisp_section(cfg, run, res));
  r.sections.push_back(payoff_section(res, ref));
  r.sections.push_back(anchors_section(res.payoff));
  r.sections.push_back(solutions_section(res, ref, run.tolerance));
  if (ref) {
    r.sections.push_back(stage("consistency", [&] { return published_rows_section(res, *ref, run.tolerance); }));
    calibration_sections(r, res, *ref);
  }
  return r;
}

Report compare_t1_it2(const PlantConfig& cfg, const RunConfig& run_in) {
  RunConfig run = run_in;
  run.method = "all";
  if (run.desirability_k.size() > 1) run.desirability_k.resize(1);
  RunConfig it2_run = run;
  it2_run.reduction = Reduction::km;
  RunConfig t1_run = run;
  t1_run.reduction = Reduction::t1;
  const PipelineResult it2 = solve_pipeline(cfg, it2_run);
  const PipelineResult t1 = solve_pipeline(cfg, t1_run);
  const ReferenceTable* it2_ref = cfg.reference("it2-vs-t1:it2");
  const ReferenceTable* t1_ref = cfg.reference("it2-vs-t1:t1");

  Section optima{"optima",
                 {"column", "max_reliability", "min_cost", "published_max_reliability", "published_min_cost",
                  "reliability_deviation", "cost_deviation"},
                 {}};
  auto optima_row = [&](const char* name, const PipelineResult& res, const ReferenceTable* ref) {
    std::vector<Cell> row{std::string(name), res.payoff.reliability_max, res.payoff.cost_min};
    if (ref) {
      row.insert(row.end(), {ref->max_reliability, ref->min_cost,
                             res.payoff.reliability_max - ref->max_reliability,
                             res.payoff.cost_min - ref->min_cost});
    } else {
      row.resize(optima.columns.size());
    }
    optima.rows.push_back(std::move(row));
  };
  optima_row("it2", it2, it2_ref);
  optima_row("t1", t1, t1_ref);

  Section cmp{"comparison", {"method", "params"}, {}};
  for (const char* side : {"it2", "t1"}) {
    for (const char* col : {"n", "reliability", "cost", "convergence", "published_n", "published_reliability",
                            "published_cost", "matches_published", "published_row_flag"}) {
      cmp.columns.push_back(fmt::format("{}_{}", side, col));
    }
  }
  const std::vector<MethodSpec> methods = requested_methods(run);
  for (std::size_t i = 0; i < methods.size(); ++i) {
    std::vector<Cell> row{method_name(methods[i]), method_params(methods[i])};
    for (const auto& [res, ref] : {std::pair{&it2, it2_ref}, std::pair{&t1, t1_ref}}) {
      const CompromiseSolution& c = res->solutions[i];
      row.insert(row.end(), {to_string(c.design), c.evaluation.reliability, c.evaluation.cost,
                             c.convergence});
      const ReferenceRow* r = ref ? match_reference(*ref, methods[i]) : nullptr;
      if (r) {
        const RowCheck check = check_reference_row(res->instance, *r, run.tolerance);
        row.insert(row.end(), {design_text(r->n), r->reliability, r->cost,
                               within(c.evaluation.objectives(), r->reliability, r->cost, run.tolerance),
                               row_flag(check)});
      } else {
        row.insert(row.end(), {Cell{}, Cell{}, Cell{}, Cell{}, Cell{}});
      }
    }
    cmp.rows.push_back(std::move(row));
  }
  Section info{"run", {"key", "value"}, {}};
  info.rows.push_back({std::string("instance"), cfg.name});
  info.rows.push_back({std::string("it2_reduction"), std::string("km")});
  info.rows.push_back({std::string("t1_reduction"), std::string("t1-centroid")});
  info.rows.push_back({std::string("grid"), static_cast<std::int64_t>(it2.grid)});
  info.rows.push_back({std::string("profile"), std::string(to_string(run.profile))});
  return Report{{std::move(info), std::move(optima), std::move(cmp)}};
}

Report emit_pareto(const PlantConfig& cfg, const RunConfig& run_in) {
  RunConfig run = run_in;
  run.method = "weighted";
  PlantConfig local = cfg;
  if (run.seed) stage("configuration", [&] { reseed(local, *run.seed); return 0; });
  const std::size_t grid = effective_grid(local, run);
  const std::vector<double> rel = stage("defuzzification", [&] {
    return crisp_reliabilities(local, run.reduction, grid);
  });
  const ProblemInstance inst = stage("instance", [&] { return make_instance(local, rel, run.profile); });
  const ParetoFront front = stage("pareto", [&] { return pareto_front(inst, run.solver); });
  const PayoffTable pt = stage("payoff", [&] { return build_payoff(inst, run.solver); });

  Section fs{"front", {"cost", "reliability", "n"}, {}};
  for (const FrontPoint& p : front.points) {
    fs.rows.push_back({p.evaluation.cost, p.evaluation.reliability, to_string(p.design)});
  }
  Section sweep{"sweep", {"w1", "cost", "reliability", "n", "in_front"}, {}};
  std::int64_t missing = 0;
  for (int k = 1; k <= 19; ++k) {
    const double w1 = k / 20.0;
    const CompromiseSolution s = stage("sweep", [&] {
      return optimize_scalarized(inst, WeightedSumSpec{w1, 1.0 - w1}, pt, run.solver);
    });
    const bool in = front.contains(s.design);
    if (!in) ++missing;
    sweep.rows.push_back({w1, s.evaluation.cost, s.evaluation.reliability, to_string(s.design), in});
  }
  Report r;
  Section info{"run", {"key", "value"}, {}};
  info.rows.push_back({std::string("instance"), local.name});
  info.rows.push_back({std::string("reduction"), std::string(to_string(run.reduction))});
  info.rows.push_back({std::string("grid"), static_cast<std::int64_t>(grid)});
  info.rows.push_back({std::string("profile"), std::string(to_string(run.profile))});
  r.sections.push_back(std::move(info));
  r.sections.push_back(std::move(fs));
  r.sections.push_back(std::move(sweep));
  Section ver{"verification", {"check", "value"}, {}};
  ver.rows.push_back({std::string("front_size"), static_cast<std::int64_t>(front.points.size())});
  ver.rows.push_back({std::string("dominated_pairs"), static_cast<std::int64_t>(count_dominated_pairs(r))});
  ver.rows.push_back({std::string("sweep_points_off_front"), missing});
  r.sections.push_back(std::move(ver));
  return r;
}

Report generation_report(const PlantConfig& cfg, const RunConfig& run) {
  PlantConfig local = cfg;
  if (!local.generation) fail(ErrorKind::config, "stage 'generation': the configuration has no generation block");
  if (run.seed) local.generation->seed = *run.seed;
  const GenerationSpec& spec = *local.generation;
  const GeneratedSet set = stage("generation", [&] { return generate_set(spec); });
  Section s{"generated", {"index", "r", "t1", "it2", "t1_centroid", "km"}, {}};
  const std::size_t grid = effective_grid(local, run);
  for (std::size_t i = 0; i < spec.r_values.size(); ++i) {
    s.rows.push_back({static_cast<std::int64_t>(i + 1), spec.r_values[i], to_string(set.t1[i]),
                      to_string(set.it2[i]), t1_centroid(set.t1[i]),
                      km_centroid(set.it2[i], grid).defuzzified});
  }
  Section info{"run", {"key", "value"}, {}};
  info.rows.push_back({std::string("seed"), static_cast<std::int64_t>(spec.seed)});
  info.rows.push_back({std::string("a"), spec.a});
  info.rows.push_back({std::string("b"), spec.b});
  info.rows.push_back({std::string("grid"), static_cast<std::int64_t>(grid)});
  return Report{{std::move(info), std::move(s)}};
}

std::size_t count_dominated_pairs(const Report& report) {
  const Section* s = report.find("front");
  if (!s) fail(ErrorKind::config, "report has no 'front' section");
  const std::size_t ci = s->column("cost");
  const std::size_t ri = s->column("reliability");
  std::vector<Objectives> pts;
  pts.reserve(s->rows.size());
  for (const auto& row : s->rows) pts.push_back({as_double(row.at(ri)), as_double(row.at(ci))});
  std::size_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i != j && dominates(pts[i], pts[j])) ++count;
    }
  }
  return count;
}

}  // namespace morrap
