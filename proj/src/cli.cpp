#include "vgl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vgl/semifield.hpp"

namespace vgl::cli {

namespace {

std::string read_source(const std::string& source) {
  if (source.empty() || source.front() != '@') return source;
  std::ifstream in(source.substr(1));
  if (!in) throw std::runtime_error("cannot read " + source.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

std::size_t text_dim(const std::string& text) {
  if (looks_like_json(text)) return poly_from_json(parse_json(text)).dim();
  return std::max<std::size_t>(1, max_variable_index(text));
}

Json error_report(const std::string& command, const std::string& message) {
  return Json{{"command", command}, {"status", "error"}, {"error", message}};
}

Json pair_json(const SparsePoly& p, const SparsePoly& q) {
  return Json{{"vars", p.dim()}, {"p", to_string(p)}, {"q", to_string(q)}};
}

RunResult run_compare(const RunConfig& config, const SparsePoly& p, const SparsePoly& q) {
  DominanceVerdict verdict = decide(p, q);
  Json report{{"command", "compare"}};
  report.update(pair_json(p, q));
  report["verdict"] = to_json(verdict);
  (void)config;
  return {verdict.comparable ? kExitAffirmative : kExitNegative, report};
}

RunResult run_spectral(const RunConfig& config, const SparsePoly& p, const SparsePoly& q) {
  SamplingConfig sampling = config.sampling;
  sampling.seed = config.seed;
  SpectralReport spectral = spectral_report(p, q, config.strict, config.mode, sampling);
  Json report{{"command", "spectral"}};
  report.update(pair_json(p, q));
  report["mode"] = config.mode == EvaluationMode::Exact ? "exact" : "sampled";
  report["report"] = to_json(spectral);
  return {spectral.all_hold() ? kExitAffirmative : kExitNegative, report};
}

/// Tropical gaps and gradients at 1, reported alongside certificates.
Json observed_gaps(const SparsePoly& p, const SparsePoly& q) {
  Json gaps{{"mass_p", to_json(mass(p))}, {"mass_q", to_json(mass(q))}};
  TropicalCheck tropical = check_tropical(p, q, true);
  gaps["tropical_max_gap"] = to_json(tropical.max_gap);
  gaps["tropical_min_gap"] = to_json(tropical.min_gap);
  Json grad_p = Json::array(), grad_q = Json::array();
  for (const auto& v : gradient_at_one(p)) grad_p.push_back(to_json(v));
  for (const auto& v : gradient_at_one(q)) grad_q.push_back(to_json(v));
  gaps["gradient_p"] = grad_p;
  gaps["gradient_q"] = grad_q;
  return gaps;
}

RunResult run_catalytic(const RunConfig& config, const SparsePoly& p, const SparsePoly& q) {
  Json report{{"command", "certify"}, {"kind", "catalytic"}};
  report.update(pair_json(p, q));
  CatalyticSearch search;
  if (config.catalyst_source) {
    SparsePoly catalyst = load_poly(*config.catalyst_source, p.dim());
    search = find_catalytic_with(p, q, catalyst);
  } else {
    CatalyticOptions options;
    options.max_n = config.max_n.value_or(12);
    options.max_k = config.max_k;
    options.allow_sampled_spectral = config.allow_sampled_spectral;
    options.sampling = config.sampling;
    options.sampling.seed = config.seed;
    try {
      search = find_catalytic(p, q, options);
    } catch (const SpectralPreconditionError& e) {
      report["status"] = "spectral-precondition-failed";
      report["message"] = e.what();
      report["spectral"] = to_json(spectral_report(p, q, true, EvaluationMode::Exact, options.sampling));
      report["certificate"] = nullptr;
      report["gaps"] = observed_gaps(p, q);
      return {kExitNegative, report};
    }
  }
  report["status"] = to_string(search.status);
  report["certificate"] = search.certificate ? to_json(*search.certificate) : Json(nullptr);
  bool verified = search.certificate && verify_certificate(p, q, *search.certificate);
  report["verified"] = verified;
  report["spectral"] = search.spectral ? to_json(*search.spectral) : Json(nullptr);
  report["gaps"] = observed_gaps(p, q);
  return {verified ? kExitAffirmative : kExitNegative, report};
}

RunResult run_asymptotic(const RunConfig& config, const SparsePoly& p, const SparsePoly& q, bool uk) {
  Json report{{"command", "certify"}, {"kind", uk ? "asymptotic-uk" : "asymptotic"}};
  report.update(pair_json(p, q));
  AsymptoticSearch search;
  if (uk) {
    AsymptoticUkOptions options;
    options.k_max = config.max_k;
    options.n_max = config.max_n.value_or(20);
    options.window = config.window;
    search = find_asymptotic_uk(p, q, options);
  } else {
    AsymptoticOptions options;
    options.eps = config.eps;
    options.n_max = config.max_n.value_or(20);
    options.window = config.window;
    search = find_asymptotic(p, q, options);
  }
  report["status"] = to_string(search.status);
  report["scanned_to"] = search.scanned_to;
  report["certificate"] = search.certificate ? to_json(*search.certificate) : Json(nullptr);
  bool verified = search.certificate && verify_certificate(p, q, *search.certificate);
  report["verified"] = verified;
  report["gaps"] = observed_gaps(p, q);
  return {verified ? kExitAffirmative : kExitNegative, report};
}

RunResult run_bench(const RunConfig& config) {
  LemmaBenchReport bench = lemma_bench(parse_model(config.model), config.samples, config.seed);
  Json report{{"command", "bench-lemmas"}};
  report.update(to_json(bench));
  return {bench.ok() && bench.complete() ? kExitAffirmative : kExitNegative, report};
}

RunResult run_classify(const RunConfig& config) {
  Model model = parse_model(config.model);
  SemifieldType type = classify_type(model, static_cast<int>(config.samples), config.seed);
  Json report{{"command", "classify-type"},
              {"model", to_string(model)},
              {"type", to_string(type)},
              {"samples", config.samples},
              {"seed", config.seed}};
  return {type == SemifieldType::Untyped ? kExitNegative : kExitAffirmative, report};
}

}  // namespace

SparsePoly load_poly(const std::string& source, std::size_t dim) {
  std::string text = read_source(source);
  if (looks_like_json(text)) {
    SparsePoly p = poly_from_json(parse_json(text));
    return dim == 0 ? p : embed(p, dim);
  }
  return parse_poly(text, dim);
}

std::size_t source_dim(const std::string& source) { return text_dim(read_source(source)); }

RunResult run(const RunConfig& config) {
  try {
    if (config.command == "bench-lemmas") return run_bench(config);
    if (config.command == "classify-type") return run_classify(config);
    if (config.command != "compare" && config.command != "spectral" && config.command != "certify")
      throw std::invalid_argument("unknown command '" + config.command + "'");
    std::size_t dim = std::max(source_dim(config.p_source), source_dim(config.q_source));
    if (config.catalyst_source) dim = std::max(dim, source_dim(*config.catalyst_source));
    SparsePoly p = load_poly(config.p_source, dim);
    SparsePoly q = load_poly(config.q_source, dim);
    if (config.command == "compare") return run_compare(config, p, q);
    if (config.command == "spectral") return run_spectral(config, p, q);
    if (config.certify_kind == "catalytic") return run_catalytic(config, p, q);
    if (config.certify_kind == "asymptotic") return run_asymptotic(config, p, q, false);
    if (config.certify_kind == "asymptotic-uk") return run_asymptotic(config, p, q, true);
    throw std::invalid_argument("unknown certificate kind '" + config.certify_kind + "'");
  } catch (const std::exception& e) {
    return {kExitError, error_report(config.command, e.what())};
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string mode = "exact";
  std::string eps = "0";
  std::string box_radius = "8";
  long lemma_samples = 10000;
  long classify_samples = 200;

  CLI::App app{"Decide and certify the polynomial preorder generated by x_i >= 1", "vgl"};
  app.require_subcommand(1);

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--p", config.p_source, "first polynomial: text, JSON, or @file")->required();
    sub->add_option("--q", config.q_source, "second polynomial: text, JSON, or @file")->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "random seed (VGL_SEED overrides)");
    sub->add_option("--output", config.output, "write the report here instead of stdout");
  };

  auto* compare = app.add_subcommand("compare", "decide p <= q and emit a transport plan");
  add_pair(compare);
  add_common(compare);

  auto* spectral = app.add_subcommand("spectral", "check the spectral conditions for p <= q");
  add_pair(spectral);
  add_common(spectral);
  spectral->add_flag("--strict", config.strict, "require strict inequalities");
  spectral->add_option("--mode", mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
  spectral->add_option("--samples", config.sampling.random_points, "random evaluation points per box")
      ->check(CLI::PositiveNumber);
  spectral->add_option("--box-radius", box_radius, "sampling box [1, R]^d and [1/R, 1]^d");

  auto* certify = app.add_subcommand("certify", "search for a catalytic or asymptotic certificate");
  certify->add_option("kind", config.certify_kind, "catalytic, asymptotic or asymptotic-uk")
      ->required()
      ->check(CLI::IsMember({"catalytic", "asymptotic", "asymptotic-uk"}));
  add_pair(certify);
  add_common(certify);
  certify->add_option("--max-n", config.max_n, "largest n searched")->check(CLI::PositiveNumber);
  certify->add_option("--max-k", config.max_k, "largest power of u searched");
  certify->add_option("--eps", eps, "asymptotic slack exponent (nonnegative rational)");
  certify->add_option("--window", config.window, "consecutive exponents required")->check(CLI::PositiveNumber);
  certify->add_flag("--allow-sampled-spectral", config.allow_sampled_spectral,
                    "accept a sampled strict spectral check as the catalytic precondition");
  certify->add_option("--catalyst", config.catalyst_source, "test this catalyst instead of the standard family");

  auto* bench = app.add_subcommand("bench-lemmas", "check the semifield lemmas on random instances");
  bench->add_option("--model", config.model, "real, real-op, tropical, tropical-op or arctic")
      ->required()
      ->check(CLI::IsMember({"real", "real-op", "tropical", "tropical-op", "arctic"}));
  bench->add_option("--samples", lemma_samples, "instances per lemma")->check(CLI::PositiveNumber);
  add_common(bench);

  auto* classify = app.add_subcommand("classify-type", "classify a model semifield by its type");
  classify->add_option("model", config.model, "real, real-op, tropical, tropical-op or arctic")
      ->required()
      ->check(CLI::IsMember({"real", "real-op", "tropical", "tropical-op", "arctic"}));
  classify->add_option("--samples", classify_samples, "random elements x > 1")->check(CLI::PositiveNumber);
  add_common(classify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitAffirmative : kExitError;
  }

  config.command = app.get_subcommands().front()->get_name();
  try {
    config.mode = mode == "sampled" ? EvaluationMode::Sampled : EvaluationMode::Exact;
    config.eps = parse_rational(eps);
    if (config.eps < 0) throw std::invalid_argument("--eps must be nonnegative");
    config.sampling.box_radius = parse_rational(box_radius);
    if (config.sampling.box_radius <= 1) throw std::invalid_argument("--box-radius must exceed 1");
    config.samples = config.command == "classify-type" ? classify_samples : lemma_samples;
    if (const char* env = std::getenv("VGL_SEED"); env && *env) {
      std::size_t used = 0;
      std::string text(env);
      unsigned long long seed = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument("VGL_SEED must be an unsigned integer");
      config.seed = seed;
    }
  } catch (const std::exception& e) {
    err << "vgl: " << e.what() << "\n";
    return kExitError;
  }

  RunResult result = run(config);
  std::string text = result.report.dump(2) + "\n";
  if (config.output) {
    std::ofstream file(*config.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "vgl: cannot write " << *config.output << "\n";
      return kExitError;
    }
  } else {
    out << text;
  }
  if (result.exit_code == kExitError && result.report.contains("error"))
    err << "vgl: " << result.report["error"].get<std::string>() << "\n";
  return result.exit_code;
}

}  // namespace vgl::cli
