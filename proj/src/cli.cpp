#include "credal/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "credal/disjunctive.hpp"
#include "credal/documents.hpp"
#include "credal/error.hpp"
#include "credal/golden.hpp"

namespace credal::cli {

namespace {

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& message) { throw Failure{kInvalidInput, message}; }

MassFunction load_mass(const std::string& path) {
  try {
    return parse_mass_document(read_text_file(path));
  } catch (const DocumentError& e) {
    invalid(path + ": " + e.what());
  }
}

ContextVector load_context(const Frame& frame, const std::string& path) {
  try {
    return parse_context_document(frame, read_text_file(path));
  } catch (const DocumentError& e) {
    invalid(path + ": " + e.what());
  }
}

DecaySpec load_decay(const Frame& frame, const std::string& path) {
  try {
    return parse_decay_document(frame, read_text_file(path));
  } catch (const DocumentError& e) {
    invalid(path + ": " + e.what());
  }
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (!config.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*config.out_path, std::ios::binary);
  if (!file) invalid("cannot write " + *config.out_path);
  file << text;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kSchemeError;
  }
}

const MassFunction& single_mass(const RunConfig& config, std::vector<MassFunction>& storage) {
  if (config.mass_paths.size() != 1) invalid("exactly one --mass document is required");
  storage.push_back(load_mass(config.mass_paths.front()));
  return storage.back();
}

void require_schemes(const RunConfig& config) {
  if (config.schemes.empty()) invalid("--scheme needs at least one scheme name");
}

}  // namespace

int cmd_discount(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_schemes(config);
    if (!config.context_path) invalid("discount needs --context");
    if (config.decay_path || config.time) invalid("discount takes a context document, not --decay/--time");
    std::vector<MassFunction> storage;
    const MassFunction& m = single_mass(config, storage);
    const ContextVector ctx = load_context(m.frame(), *config.context_path);

    std::vector<MassColumn> columns;
    for (Scheme scheme : config.schemes) columns.push_back({std::string(to_string(scheme)), discount(m, ctx, scheme)});
    emit(config, render_mass_table(columns, config.format), out);
    return int{kOk};
  });
}

int cmd_temporal(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    require_schemes(config);
    if (!config.decay_path || !config.time) invalid("temporal needs --decay and --time");
    if (config.context_path) invalid("temporal takes a decay document, not --context");
    if (*config.time < 0.0) invalid("--time must be non-negative");
    std::vector<MassFunction> storage;
    const MassFunction& m = single_mass(config, storage);
    const DecaySpec spec = load_decay(m.frame(), *config.decay_path);
    const KappaVector kappa = kappa_at(spec, *config.time);

    std::string header;
    header += "lambda = " + format_vector(spec.lambdas(), 4) + "\n";
    header += "kappa  = " + format_vector(kappa.kappas(), 4) + "\n";

    std::vector<MassColumn> columns;
    nlohmann::json alphas = nlohmann::json::object();
    for (Scheme scheme : config.schemes) {
      const std::string name(to_string(scheme));
      if (scheme == Scheme::Contextual || scheme == Scheme::Generalized) {
        const ContextualAlphas solved = contextual_alphas_from_kappa(kappa);
        header += "alpha[" + name + "] = " + format_vector(solved.raw, 4) + "\n";
        alphas[name] = solved.raw;
        if (!solved.feasible()) {
          if (config.format == OutputFormat::Text) out << header;
          throw Failure{kSchemeError, "contextual discount rates " + format_vector(solved.raw, 4) +
                                          " fall outside [0,1]; contextual discounting cannot express this decay"};
        }
        columns.push_back({name, discount(m, *solved.contexts, scheme)});
        continue;
      }
      if (scheme == Scheme::Classical) throw Failure{kSchemeError, "classical discounting has no per-context decay"};

      const MassFunction result = temporal_discount(m, spec, *config.time, scheme, config.alpha_mode);
      std::vector<double> rates;
      for (const auto& k : kappa.kappas()) rates.push_back(config.alpha_mode == AlphaMode::Postulate ? 1.0 - k : k);
      header += "alpha[" + name + "] = " + format_vector(rates, 4) + " (" + std::string(to_string(config.alpha_mode)) +
                ")\n";
      alphas[name] = rates;
      columns.push_back({name, result});
    }

    if (config.format == OutputFormat::Json) {
      nlohmann::json results = nlohmann::json::array();
      for (const auto& c : columns) {
        nlohmann::json doc = to_json(c.mass);
        doc["name"] = c.name;
        results.push_back(std::move(doc));
      }
      const nlohmann::json doc{{"time_s", *config.time},       {"lambda", spec.lambdas()},
                               {"kappa", kappa.kappas()},      {"alpha", std::move(alphas)},
                               {"alpha_mode", to_string(config.alpha_mode)}, {"results", std::move(results)}};
      emit(config, doc.dump(2) + "\n", out);
    } else if (config.format == OutputFormat::Csv) {
      emit(config, render_mass_table(columns, config.format), out);
    } else {
      emit(config, header + "\n" + render_mass_table(columns, config.format), out);
    }
    return int{kOk};
  });
}

int cmd_combine(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.mass_paths.size() != 2) invalid("combine needs exactly two --mass documents");
    const MassFunction m1 = load_mass(config.mass_paths[0]);
    const MassFunction m2 = load_mass(config.mass_paths[1]);
    if (!(m1.frame() == m2.frame())) invalid("the two mass documents use different frames");
    const std::vector<MassColumn> columns{{"drc", drc_combine(m1, m2)}};
    emit(config, render_mass_table(columns, config.format), out);
    return int{kOk};
  });
}

int cmd_inspect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<MassFunction> storage;
    const MassFunction& m = single_mass(config, storage);
    const Frame& frame = m.frame();

    std::vector<SubsetMask> rows;
    if (frame.size() <= 10) {
      for (std::uint32_t a = 0; a < frame.subset_count(); ++a) rows.emplace_back(a);
    } else {
      rows.push_back(frame.empty_set());
      for (const auto& [set, mass] : m.focal()) {
        if (!set.empty() && set != frame.full_set()) rows.push_back(set);
      }
      rows.push_back(frame.full_set());
    }

    std::ostringstream text;
    if (config.format == OutputFormat::Json) {
      nlohmann::json list = nlohmann::json::array();
      for (SubsetMask a : rows) {
        list.push_back({{"set", frame.members(a)},
                        {"mass", m.at(a)},
                        {"belief", belief_of(m, a)},
                        {"implicability", implicability_of(m, a)}});
      }
      text << nlohmann::json{{"frame", frame.labels()}, {"subsets", std::move(list)}}.dump(2) << "\n";
    } else {
      const char* sep = config.format == OutputFormat::Csv ? "," : "  ";
      text << "set" << sep << "mass" << sep << "belief" << sep << "implicability\n";
      for (SubsetMask a : rows) {
        std::string label = frame.format(a);
        if (config.format == OutputFormat::Csv) label = "\"" + label + "\"";
        text << label << sep << format_fixed(m.at(a), 6) << sep << format_fixed(belief_of(m, a), 6) << sep
             << format_fixed(implicability_of(m, a), 6) << "\n";
      }
    }
    emit(config, text.str(), out);
    return int{kOk};
  });
}

int cmd_paper(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<GoldenCell> cells = regenerate_golden_cells();
    for (const auto& id : config.perturb) {
      bool found = false;
      for (auto& cell : cells) {
        if (cell.id == id) {
          cell.expected += 1e-2;
          found = true;
        }
      }
      if (!found) invalid("no reference cell named '" + id + "'");
    }
    const double tolerance = golden_tolerance_from_env();
    const auto checks = check_golden_cells(cells, tolerance);
    emit(config, render_golden_report(checks, tolerance, config.format), out);
    for (const auto& c : checks) {
      if (c.counts_as_failure()) return int{kGoldenMismatch};
    }
    return int{kOk};
  });
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Belief-function discounting toolkit"};
  app.require_subcommand(1);

  RunConfig config;
  std::vector<std::string> scheme_names;
  std::string format = "text";
  std::string alpha_mode = "postulate";

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--out", config.out_path, "write output to PATH instead of stdout");
  };
  const auto add_schemes = [&](CLI::App* sub) {
    sub->add_option("--scheme", scheme_names, "comma separated scheme names")->delimiter(',');
  };

  auto* discount_cmd = app.add_subcommand("discount", "discount a mass document with a context document");
  discount_cmd->add_option("--mass", config.mass_paths, "mass document")->required();
  discount_cmd->add_option("--context", config.context_path, "context document");
  discount_cmd->add_option("--decay", config.decay_path, "decay document (not accepted here)");
  discount_cmd->add_option("--time", config.time, "seconds (not accepted here)");
  add_schemes(discount_cmd);
  add_format(discount_cmd);

  auto* temporal_cmd = app.add_subcommand("temporal", "age a mass document with per-context decay");
  temporal_cmd->add_option("--mass", config.mass_paths, "mass document")->required();
  temporal_cmd->add_option("--decay", config.decay_path, "decay document");
  temporal_cmd->add_option("--time", config.time, "age in seconds");
  temporal_cmd->add_option("--context", config.context_path, "context document (not accepted here)");
  temporal_cmd->add_option("--alpha-mode", alpha_mode, "postulate or paper-table")
      ->check(CLI::IsMember({"postulate", "paper-table"}));
  add_schemes(temporal_cmd);
  add_format(temporal_cmd);

  auto* combine_cmd = app.add_subcommand("combine", "disjunctive combination of two mass documents");
  combine_cmd->add_option("--mass", config.mass_paths, "mass document (give twice)")->required();
  add_format(combine_cmd);

  auto* inspect_cmd = app.add_subcommand("inspect", "mass, belief and implicability per subset");
  inspect_cmd->add_option("--mass", config.mass_paths, "mass document")->required();
  add_format(inspect_cmd);

  auto* paper_cmd = app.add_subcommand("paper", "regenerate and check every reference number");
  paper_cmd->add_option("--perturb", config.perturb, "shift a cell's expected value by 1e-2")->group("");
  add_format(paper_cmd);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().size() == 1 && e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      out << app.get_subcommands().front()->help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    for (const auto& name : scheme_names) config.schemes.push_back(parse_scheme(name));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  config.format = parse_output_format(format);
  config.alpha_mode = parse_alpha_mode(alpha_mode);

  if (discount_cmd->parsed()) return cmd_discount(config, out, err);
  if (temporal_cmd->parsed()) return cmd_temporal(config, out, err);
  if (combine_cmd->parsed()) return cmd_combine(config, out, err);
  if (inspect_cmd->parsed()) return cmd_inspect(config, out, err);
  return cmd_paper(config, out, err);
}

}  // namespace credal::cli
