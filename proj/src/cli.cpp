#include "gbs/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gbs/classify.hpp"
#include "gbs/error.hpp"
#include "gbs/fuzz.hpp"
#include "gbs/report.hpp"

namespace gbs::cli {

namespace {

CliResult error_result(ErrorCode code, const std::string& detail) {
  Json doc{{"error", std::string(to_string(code))}, {"detail", detail}};
  return {2, doc.dump(2) + "\n"};
}

CliResult json_result(const Json& doc, int code = 0) { return {code, doc.dump(2) + "\n"}; }

std::string text_report(const Report& report, bool explain) {
  const Analysis& a = report.analysis;
  std::ostringstream out;
  out << "shape: " << to_string(a.shape.kind);
  if (a.shape.kind == ShapeKind::BS1n) out << " (n = " << a.shape.n.get_str() << ")";
  out << "\nmodular image: ";
  if (a.image) {
    out << to_string(a.image->kind);
    if (a.image->witness) out << " (" << to_string(*a.image->witness) << ")";
  } else {
    out << "undefined";
  }
  out << "\n";
  if (a.radical) out << "mu: " << a.radical->mu.get_str() << "\n";
  for (const auto& v : report.verdicts) {
    out << to_string(v.property);
    if (v.rho) out << "[" << v.rho->to_string() << "]";
    out << ": " << (v.holds ? "true" : "false") << "\n";
    if (explain) {
      for (const auto& t : v.trace) out << "  " << t.citation << ": " << t.reason << "\n";
    }
  }
  return out.str();
}

std::string dot_report(const Report& report) {
  const Analysis& a = report.analysis;
  DotAnnotations notes;
  notes.title = std::string(to_string(a.shape.kind));
  if (a.radical) {
    for (VertexIndex v = 0; v < a.reduced().vertex_count(); ++v) notes.mu[v] = a.radical->mu_v[v];
  }
  if (a.condition) {
    auto zeta = a.condition->combined_zeta(a.reduced().vertex_count());
    for (VertexIndex v = 0; v < zeta.size(); ++v) {
      if (zeta[v]) notes.zeta[v] = *zeta[v];
    }
    notes.highlighted_edges = a.condition->gamma_prime.edges;
  }
  return emit_dot(a.reduced(), notes);
}

CliResult run_classify(const CliConfig& config, const LabeledGraph& g) {
  const Report report = classify_all(g, config.rho);
  switch (config.format) {
    case Format::Text: return {0, text_report(report, config.explain)};
    case Format::Dot: return {0, dot_report(report)};
    case Format::Json: break;
  }
  return json_result(report_json(report, config.explain));
}

CliResult run_reduce(const CliConfig& config, const LabeledGraph& g) {
  const Reduction red = reduce(g);
  if (!config.emit_trace) return json_result(graph_json(red.graph));
  return json_result({{"graph", graph_json(red.graph)}, {"trace", trace_json(red.trace)}});
}

CliResult run_modular(const LabeledGraph& g) {
  try {
    return json_result(modular_json(classify_modular_image(delta_generators(g, spanning_tree(g)))));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotDefined) throw;
    return json_result({{"defined", false}, {"reason", e.detail()}});
  }
}

Json not_applicable(const Error& e) {
  return {{"applicable", false}, {"reason", std::string(to_string(e.code()))}, {"detail", e.detail()}};
}

CliResult run_radical(const LabeledGraph& g) {
  try {
    return json_result(radical_json(g, compute_radical(g)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Elementary && e.code() != ErrorCode::ModularImageTooBig) throw;
    return json_result(not_applicable(e));
  }
}

CliResult run_check_elliptic(const LabeledGraph& g) {
  const LabeledGraph r = reduce(g).graph;
  try {
    const RadicalData rad = compute_radical(r);
    const ConditionResult cond = check_condition(r, rad);
    Json doc = condition_json(r, cond);
    doc["oracle"] = oracle_cycle_check(r, cond.gamma_prime);
    return json_result(doc);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Elementary && e.code() != ErrorCode::ModularImageTooBig &&
        e.code() != ErrorCode::PreconditionViolated) {
      throw;
    }
    return json_result(not_applicable(e));
  }
}

CliResult run_fuzz_command(const CliConfig& config) {
  FuzzOptions options;
  options.seed = config.seed;
  options.count = config.count;
  options.negate_xi = config.fault_xi;
  const FuzzReport report = run_fuzz(options);
  const int code = report.violations() == 0 ? 0 : 1;
  if (config.fuzz_json) return json_result(fuzz_json(report), code);
  return {code, fuzz_text(report)};
}

}  // namespace

CliResult run(const CliConfig& config, std::string_view input) {
  try {
    if (config.command == "fuzz") return run_fuzz_command(config);
    const LabeledGraph g = parse_graph(input);
    if (config.command == "classify") return run_classify(config, g);
    if (config.command == "reduce") return run_reduce(config, g);
    if (config.command == "modular") return run_modular(g);
    if (config.command == "radical") return run_radical(g);
    if (config.command == "check-elliptic") return run_check_elliptic(g);
    return error_result(ErrorCode::UsageError, "unknown command " + config.command);
  } catch (const Error& e) {
    return error_result(e.code(), e.detail());
  }
}

Parsed parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Residual properties of generalized Baumslag-Solitar groups", "gbs"};
  app.require_subcommand(1);
  CliConfig config;
  std::string rho_text, format_text = "json";

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", config.input, "graph JSON file, - for stdin")->capture_default_str();
  };
  auto* classify = app.add_subcommand("classify", "decide every residual property");
  add_input(classify);
  classify->add_option("--rho", rho_text, "prime set: all or p1,p2,...");
  classify->add_flag("--explain", config.explain, "include the reasoning");
  classify->add_option("--format", format_text, "json, text or dot")
      ->check(CLI::IsMember({"json", "text", "dot"}));
  auto* reduce_cmd = app.add_subcommand("reduce", "collapse to a reduced graph");
  add_input(reduce_cmd);
  reduce_cmd->add_flag("--emit-trace", config.emit_trace, "also print the collapses");
  add_input(app.add_subcommand("modular", "modular homomorphism on stable letters"));
  add_input(app.add_subcommand("radical", "indices of the common vertex subgroup"));
  add_input(app.add_subcommand("check-elliptic", "sign labeling of the radical-proper subgraph"));
  auto* fuzz = app.add_subcommand("fuzz", "run the invariant suite on random graphs");
  fuzz->add_option("--seed", config.seed)->required();
  fuzz->add_option("--count", config.count)->required();
  fuzz->add_flag("--json", config.fuzz_json);
  std::string fault;
  fuzz->add_option("--inject-fault", fault)->group("")->check(CLI::IsMember({"xi"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, {0, app.help()}};
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, error_result(ErrorCode::UsageError, e.what())};
  }
  config.command = app.get_subcommands().front()->get_name();
  if (config.command == "fuzz" && config.count == 0) {
    return {std::nullopt, error_result(ErrorCode::UsageError, "--count must be at least 1")};
  }
  config.fault_xi = fault == "xi";
  config.format = format_text == "text" ? Format::Text : format_text == "dot" ? Format::Dot : Format::Json;
  if (!rho_text.empty()) {
    try {
      config.rho = PrimeSet::parse(rho_text);
    } catch (const Error& e) {
      return {std::nullopt, error_result(ErrorCode::UsageError, e.detail())};
    }
  }
  return {config, {}};
}

CliResult main_entry(const std::vector<std::string>& args) {
  Parsed parsed = parse_args(args);
  if (!parsed.config) return parsed.early;
  const CliConfig& config = *parsed.config;
  std::string input;
  if (config.command != "fuzz") {
    if (config.input == "-") {
      input.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream file(config.input, std::ios::binary);
      if (!file) return error_result(ErrorCode::UsageError, "cannot open " + config.input);
      input.assign(std::istreambuf_iterator<char>(file), {});
    }
  }
  return run(config, input);
}

}  // namespace gbs::cli
