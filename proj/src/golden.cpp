#include "credal/golden.hpp"

#include <cmath>
#include <algorithm>
#include <cstdlib>

#include <json.hpp>

#include "credal/discounting.hpp"
#include "credal/temporal.hpp"

namespace credal {

namespace {

struct Row {
  const char* set;
  double value;
};

class CellSink {
 public:
  void add(std::string id, double expected, double actual) {
    cells_.push_back({std::move(id), expected, actual, {}});
  }

  void mark_known(const std::string& id, const std::string& issue) {
    for (auto& c : cells_) {
      if (c.id == id) c.known_issue = issue;
    }
  }

  void add_column(const std::string& prefix, const MassFunction& result, std::initializer_list<Row> rows) {
    const Frame& frame = result.frame();
    for (const auto& row : rows) {
      const SubsetMask set = frame.parse_subset(row.set);
      add(prefix + "." + frame.format(set), row.value, result.at(set));
    }
  }

  void add_vector(const std::string& prefix, std::span<const double> expected, std::span<const double> actual) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      add(prefix + "[" + std::to_string(i) + "]", expected[i], i < actual.size() ? actual[i] : NAN);
    }
  }

  std::vector<GoldenCell> take() { return std::move(cells_); }

 private:
  std::vector<GoldenCell> cells_;
};

void aerial_target_example(CellSink& sink) {
  const Frame frame = Frame::build({"a", "h", "r"});
  const auto m = MassFunction::make(frame, {{"a", 0.5}, {"r", 0.5}});
  const auto over_reliable = ContextVector::make(frame, {{"h,r", 0.4}});

  sink.add_column("target.conservative", conservative_discount(m, over_reliable),
                  {{"a", 0.5}, {"r", 0.3}, {"*", 0.2}});
  sink.add_column("target.proportional", proportional_discount(m, over_reliable),
                  {{"a", 0.5}, {"r", 0.3}, {"*", 0.2}});
  sink.add_column("target.optimistic", optimistic_discount(m, over_reliable), {{"a", 0.5}, {"r", 0.5}, {"*", 0.0}});
  // The published optimistic result leaves {r} untouched, yet {r} lies inside
  // the context {h,r}; the same configuration in the comparative and temporal
  // tables is discounted.
  const std::string issue = "published value contradicts the subset rule used by every other optimistic table";
  sink.mark_known("target.optimistic.{r}", issue);
  sink.mark_known("target.optimistic.{a,h,r}", issue);
  sink.add_column("target.contextual", contextual_discount(m, ContextVector::make(frame, {{"a", 0.4}})),
                  {{"a", 0.5}, {"r", 0.3}, {"a,r", 0.2}});
}

// Fixed input and rates for the comparative factor table,
// Theta = {{w1}, {w2,w3}}, alpha_1 = 0.3, alpha_23 = 0.6.
void comparative_table(CellSink& sink) {
  const Frame frame = Frame::build({"w1", "w2", "w3"});
  const auto m = MassFunction::make(frame, {{"{}", 0.05},
                                            {"w1", 0.15},
                                            {"w2", 0.10},
                                            {"w1,w2", 0.15},
                                            {"w3", 0.10},
                                            {"w1,w3", 0.15},
                                            {"w2,w3", 0.20},
                                            {"*", 0.10}});
  const auto ctx = ContextVector::make(frame, {{"w1", 0.3}, {"w2,w3", 0.6}});

  sink.add_column("factors.optimistic", optimistic_discount(m, ctx),
                  {{"{}", 0.014}, {"w1", 0.105}, {"w2", 0.04}, {"w1,w2", 0.15},
                   {"w3", 0.04}, {"w1,w3", 0.15}, {"w2,w3", 0.08}});
  sink.add_column("factors.proportional", proportional_discount(m, ctx),
                  {{"{}", 0.014}, {"w1", 0.105}, {"w2", 0.04}, {"w1,w2", 0.08925},
                   {"w3", 0.04}, {"w1,w3", 0.08925}, {"w2,w3", 0.08}});
  sink.add_column("factors.conservative", conservative_discount(m, ctx),
                  {{"{}", 0.014}, {"w1", 0.105}, {"w2", 0.04}, {"w1,w2", 0.042},
                   {"w3", 0.04}, {"w1,w3", 0.042}, {"w2,w3", 0.08}});
}

void decay_vectors(CellSink& sink) {
  const Frame frame = Frame::build({"w1", "w2", "w3"});
  const std::vector<double> half_c1{1, 4, 15};
  const std::vector<double> half_c2{5, 4, 15};
  const auto spec_c1 = DecaySpec::from_half_lives(frame, half_c1);
  const auto spec_c2 = DecaySpec::from_half_lives(frame, half_c2);

  sink.add_vector("decay.lambda_c1", std::vector{0.6931, 0.1733, 0.0462}, spec_c1.lambdas());
  sink.add_vector("decay.lambda_c2", std::vector{0.1386, 0.1733, 0.0462}, spec_c2.lambdas());

  const auto kappa_c1 = kappa_at(spec_c1, 4.0);
  const auto kappa_c2 = kappa_at(spec_c2, 4.0);
  sink.add_vector("decay.kappa_c1", std::vector{0.0625, 0.5000, 0.8312}, kappa_c1.kappas());
  sink.add_vector("decay.kappa_c2", std::vector{0.5743, 0.5000, 0.8312}, kappa_c2.kappas());

  const auto alpha_c1 = contextual_alphas_from_kappa(kappa_c1);
  const auto alpha_c2 = contextual_alphas_from_kappa(kappa_c2);
  sink.add_vector("decay.alpha_c1", std::vector{-1.5787, 0.6777, 0.8061}, alpha_c1.raw);
  sink.add("decay.alpha_c1.feasible", 0.0, alpha_c1.feasible() ? 1.0 : 0.0);
  sink.add_vector("decay.alpha_c2", std::vector{0.1493, 0.0228, 0.4122}, alpha_c2.raw);
  sink.add("decay.alpha_c2.feasible", 1.0, alpha_c2.feasible() ? 1.0 : 0.0);
}

void contextual_component(CellSink& sink) {
  const Frame frame = Frame::build({"w1", "w2", "w3"});
  const std::vector<double> alpha{0.1493, 0.0228, 0.4122};
  sink.add_column("m_theta", contextual_component_mass(ContextVector::singletons(frame, alpha)),
                  {{"{}", 0.4886}, {"w1", 0.0858}, {"w2", 0.0114}, {"w1,w2", 0.0020},
                   {"w3", 0.3427}, {"w1,w3", 0.0602}, {"w2,w3", 0.0080}, {"*", 0.0014}});
}

MassFunction case_input(const Frame& frame) {
  return MassFunction::make(frame, {{"w1", 0.3}, {"w2", 0.2}, {"w1,w2", 0.2}, {"w3", 0.2}, {"*", 0.1}});
}

void case_one_columns(CellSink& sink, const std::string& prefix, const MassFunction& o, const MassFunction& p,
                      const MassFunction& c) {
  sink.add_column(prefix + ".optimistic", o,
                  {{"{}", 0}, {"w1", 0.28125}, {"w2", 0.1}, {"w1,w2", 0.2}, {"w3", 0.03376},
                   {"w1,w3", 0}, {"w2,w3", 0}, {"*", 0.38499}});
  sink.add_column(prefix + ".proportional", p,
                  {{"{}", 0}, {"w1", 0.28125}, {"w2", 0.1}, {"w1,w2", 0.1453125}, {"w3", 0.03376},
                   {"w1,w3", 0}, {"w2,w3", 0}, {"*", 0.4396775}});
  sink.add_column(prefix + ".conservative", c,
                  {{"{}", 0}, {"w1", 0.28125}, {"w2", 0.1}, {"w1,w2", 0.09375}, {"w3", 0.03376},
                   {"w1,w3", 0}, {"w2,w3", 0}, {"*", 0.49124}});
}

void case_two_columns(CellSink& sink, const std::string& prefix, const MassFunction& o, const MassFunction& p,
                      const MassFunction& c, const MassFunction& contextual) {
  sink.add_column(prefix + ".optimistic", o,
                  {{"{}", 0}, {"w1", 0.12771}, {"w2", 0.1}, {"w1,w2", 0.2}, {"w3", 0.03376},
                   {"w1,w3", 0}, {"w2,w3", 0}, {"*", 0.53853}});
  sink.add_column(prefix + ".proportional", p,
                  {{"{}", 0}, {"w1", 0.12771}, {"w2", 0.1}, {"w1,w2", 0.1069275}, {"w3", 0.03376},
                   {"w1,w3", 0}, {"w2,w3", 0}, {"*", 0.6316025}});
  sink.add_column(prefix + ".conservative", c,
                  {{"{}", 0}, {"w1", 0.12771}, {"w2", 0.1}, {"w1,w2", 0.04257}, {"w3", 0.03376},
                   {"w1,w3", 0}, {"w2,w3", 0}, {"*", 0.69596}});
  sink.add_column(prefix + ".contextual", contextual,
                  {{"{}", 0}, {"w1", 0.1723}, {"w2", 0.1}, {"w1,w2", 0.1391}, {"w3", 0.1662},
                   {"w1,w3", 0.15}, {"w2,w3", 0.074}, {"*", 0.1983}});
}

void temporal_cases(CellSink& sink) {
  const Frame frame = Frame::build({"w1", "w2", "w3"});
  const MassFunction m = case_input(frame);

  // Rates exactly as printed in the tables (alpha fed with kappa).
  const std::vector<double> printed_c1{0.0625, 0.5, 0.8312};
  const std::vector<double> printed_c2{0.5743, 0.5, 0.8312};
  const std::vector<double> printed_alpha_c2{0.1493, 0.0228, 0.4122};
  const auto ctx_c1 = ContextVector::singletons(frame, printed_c1);
  const auto ctx_c2 = ContextVector::singletons(frame, printed_c2);
  case_one_columns(sink, "case1", optimistic_discount(m, ctx_c1), proportional_discount(m, ctx_c1),
                   conservative_discount(m, ctx_c1));
  case_two_columns(sink, "case2", optimistic_discount(m, ctx_c2), proportional_discount(m, ctx_c2),
                   conservative_discount(m, ctx_c2),
                   contextual_discount(m, ContextVector::singletons(frame, printed_alpha_c2)));

  // Same tables regenerated from the half-lives at t = 4 s.
  const std::vector<double> half_c1{1, 4, 15};
  const std::vector<double> half_c2{5, 4, 15};
  const auto spec_c1 = DecaySpec::from_half_lives(frame, half_c1);
  const auto spec_c2 = DecaySpec::from_half_lives(frame, half_c2);
  const double t = 4.0;
  const auto run = [&](const DecaySpec& spec, Scheme scheme) {
    return temporal_discount(m, spec, t, scheme, AlphaMode::PaperTable);
  };
  case_one_columns(sink, "case1_from_half_life", run(spec_c1, Scheme::Optimistic), run(spec_c1, Scheme::Proportional),
                   run(spec_c1, Scheme::Conservative));
  const auto solved = contextual_alphas_from_kappa(kappa_at(spec_c2, t));
  case_two_columns(sink, "case2_from_half_life", run(spec_c2, Scheme::Optimistic), run(spec_c2, Scheme::Proportional),
                   run(spec_c2, Scheme::Conservative),
                   solved.feasible() ? contextual_discount(m, *solved.contexts) : MassFunction::vacuous(frame));
}

std::string status(const GoldenCheck& c) {
  if (!c.cell.known_issue.empty()) return c.pass ? "PASS" : "KNOWN";
  return c.pass ? "PASS" : "FAIL";
}

std::string json_number(double x) { return std::isfinite(x) ? nlohmann::json(x).dump() : "null"; }

}  // namespace

std::vector<GoldenCell> regenerate_golden_cells() {
  CellSink sink;
  aerial_target_example(sink);
  comparative_table(sink);
  decay_vectors(sink);
  contextual_component(sink);
  temporal_cases(sink);
  return sink.take();
}

std::vector<GoldenCheck> check_golden_cells(std::span<const GoldenCell> cells, double tolerance) {
  std::vector<GoldenCheck> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    const double deviation = std::abs(cell.actual - cell.expected);
    out.push_back({cell, deviation, std::isfinite(deviation) && deviation <= tolerance});
  }
  return out;
}

std::string render_golden_report(std::span<const GoldenCheck> checks, double tolerance, OutputFormat format) {
  std::string out;
  std::size_t failed = 0;
  std::size_t known = 0;
  for (const auto& c : checks) {
    failed += c.counts_as_failure() ? 1 : 0;
    known += c.cell.known_issue.empty() ? 0 : 1;
  }

  switch (format) {
    case OutputFormat::Csv:
      out = "cell,expected,actual,deviation,status\n";
      for (const auto& c : checks) {
        out += "\"" + c.cell.id + "\"," + format_fixed(c.cell.expected, 7) + "," + format_fixed(c.cell.actual, 7) +
               "," + format_fixed(c.deviation, 7) + "," + status(c) + "\n";
      }
      return out;
    case OutputFormat::Json: {
      nlohmann::json cells = nlohmann::json::array();
      for (const auto& c : checks) {
        cells.push_back({{"cell", c.cell.id},
                         {"expected", nlohmann::json::parse(json_number(c.cell.expected))},
                         {"actual", nlohmann::json::parse(json_number(c.cell.actual))},
                         {"deviation", nlohmann::json::parse(json_number(c.deviation))},
                         {"status", status(c)}});
      }
      return nlohmann::json{{"tolerance", tolerance}, {"failed", failed}, {"cells", std::move(cells)}}.dump(2) + "\n";
    }
    case OutputFormat::Text:
      break;
  }

  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.cell.id.size());
  for (const auto& c : checks) {
    out += status(c) + std::string(6 - status(c).size(), ' ');
    out += c.cell.id + std::string(width - c.cell.id.size(), ' ');
    out += "  expected " + format_fixed(c.cell.expected, 7) + "  actual " + format_fixed(c.cell.actual, 7);
    if (!c.pass) out += "  diff " + format_fixed(c.cell.actual - c.cell.expected, 7);
    if (!c.cell.known_issue.empty()) out += "  (" + c.cell.known_issue + ")";
    out += "\n";
  }
  out += std::to_string(checks.size() - failed - known) + "/" + std::to_string(checks.size() - known) +
         " cells within " + format_fixed(tolerance, 6);
  if (known) out += ", " + std::to_string(known) + " known discrepancies reported separately";
  out += "\n";
  return out;
}

double golden_tolerance_from_env() {
  if (const char* raw = std::getenv("CREDAL_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(raw, &end);
    if (end != raw && *end == '\0' && std::isfinite(tol) && tol > 0.0) return tol;
  }
  return kGoldenTolerance;
}

}  // namespace credal
