#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cli_app.hpp"

namespace {

using acm::Json;

Json parse_json_arg(const std::string& text, const std::string& field) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(field + ": invalid JSON (" + e.what() + ")");
  }
}

struct CliState {
  std::string format = "json";
  std::string input_file;

  // solve / depress / acm / unitary-check
  std::string poly;
  bool compare_oracle = false;
  bool hermitian = false;
  std::string p_json, q_json;

  // density
  double a2 = 0.0, b2 = 0.0;

  // unitary-build
  std::string params;
  double r2 = 0.0, theta = 0.0, eps = 0.0;
  bool have_r2 = false, have_theta = false, have_eps = false;

  // classify
  double p_real = 0.0, q_real = 0.0;

  // oracle
  std::string coeffs;

  double tol = 0.0;
  bool have_tol = false;
};

void add_tol(CLI::App* cmd, CliState& state) {
  cmd->add_option("--tol", state.tol, "Tolerance override")
      ->check(CLI::PositiveNumber)
      ->each([&state](const std::string&) { state.have_tol = true; });
}

Json build_request(const CLI::App& app, const CliState& state) {
  Json req;
  const CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands()[0];
  if (sub == nullptr) {
    if (state.input_file.empty())
      throw std::invalid_argument("no subcommand given and no --input file");
    std::ifstream in(state.input_file);
    if (!in) throw std::invalid_argument("--input: cannot open " + state.input_file);
    try {
      in >> req;
    } catch (const Json::exception& e) {
      throw std::invalid_argument(std::string("--input: invalid JSON (") + e.what() + ")");
    }
    return req;
  }

  const std::string name = sub->get_name();
  req["command"] = name;
  if (state.have_tol) req["tol"] = state.tol;
  if (!state.poly.empty()) req["poly"] = parse_json_arg(state.poly, "--poly");
  if (name == "solve" && state.compare_oracle) req["compare_oracle"] = true;
  if (name == "acm") {
    if (state.hermitian) req["hermitian"] = true;
    if (!state.p_json.empty()) req["p"] = parse_json_arg(state.p_json, "--p");
    if (!state.q_json.empty()) req["q"] = parse_json_arg(state.q_json, "--q");
  }
  if (name == "density") {
    req["a2"] = state.a2;
    req["b2"] = state.b2;
  }
  if (name == "unitary-build") {
    if (!state.params.empty()) {
      req["params"] = parse_json_arg(state.params, "--params");
    } else if (state.have_r2 && state.have_theta && state.have_eps) {
      req["r2"] = state.r2;
      req["theta"] = state.theta;
      req["eps"] = state.eps;
    } else {
      throw std::invalid_argument("unitary-build: provide --params or all of --r2/--theta/--eps");
    }
  }
  if (name == "classify") {
    req["p"] = state.p_real;
    req["q"] = state.q_real;
  }
  if (name == "oracle") req["coeffs"] = parse_json_arg(state.coeffs, "--coeffs");
  return req;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Almost-companion matrices of complex cubics: Cardano-free root "
               "solving, qutrit density matrices and unitary ACMs on demand"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  CliState state;
  app.add_option("--format", state.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--input", state.input_file,
                 "JSON request file ({\"command\": ..., payload...})");

  auto* solve = app.add_subcommand("solve", "Roots of a monic cubic");
  solve->add_option("--poly", state.poly, "CubicPoly JSON {\"c1\":[re,im],...}")
      ->required();
  solve->add_flag("--compare-oracle", state.compare_oracle,
                  "Also run the iterative oracle and report the multiset distance");

  auto* depress = app.add_subcommand("depress", "Canonical form (p, q, shift)");
  depress->add_option("--poly", state.poly, "CubicPoly JSON")->required();

  auto* acm_cmd = app.add_subcommand("acm", "Almost-companion matrix of a cubic");
  acm_cmd->add_option("--poly", state.poly, "CubicPoly JSON");
  acm_cmd->add_option("--p", state.p_json, "Canonical p as [re,im]");
  acm_cmd->add_option("--q", state.q_json, "Canonical q as [re,im]");
  acm_cmd->add_flag("--hermitian", state.hermitian,
                    "Hermitian ACM (real coefficients, discriminant <= 0)");

  auto* density = app.add_subcommand(
      "density", "Qutrit density matrix of x^3 - x^2 + a2*x - b2");
  density->add_option("--a2", state.a2, "Coefficient a^2 (>= 0)")->required();
  density->add_option("--b2", state.b2, "Coefficient b^2 (>= 0)")->required();
  add_tol(density, state);

  auto* ubuild = app.add_subcommand("unitary-build", "Unitary ACM from (r2, theta, eps)");
  ubuild->add_option("--params", state.params, "UnitaryParams JSON {\"r2\":...,\"theta\":...,\"eps\":...}");
  ubuild->add_option("--r2", state.r2)->each([&state](const std::string&) { state.have_r2 = true; });
  ubuild->add_option("--theta", state.theta)->each([&state](const std::string&) { state.have_theta = true; });
  ubuild->add_option("--eps", state.eps)->each([&state](const std::string&) { state.have_eps = true; });

  auto* ucheck = app.add_subcommand(
      "unitary-check", "Decide whether a cubic admits a unitary ACM");
  ucheck->add_option("--poly", state.poly, "CubicPoly JSON")->required();
  add_tol(ucheck, state);

  auto* classify = app.add_subcommand("classify", "Root pattern of eta^3 + p*eta + q");
  classify->add_option("--p", state.p_real, "Real p")->required();
  classify->add_option("--q", state.q_real, "Real q")->required();

  auto* oracle = app.add_subcommand("oracle", "Iterative root oracle for monic degree-n");
  oracle->add_option("--coeffs", state.coeffs, "Coefficients [[re,im],...] (c1..cn)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    const acm::ToleranceProfile profile = acm::ToleranceProfile::from_environment();
    const Json request = build_request(app, state);
    const acm::RunOutcome outcome = acm::run_request(request, profile);
    if (state.format == "text")
      std::cout << acm::render_text(outcome.document);
    else
      std::cout << outcome.document.dump() << "\n";
    return outcome.exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const acm::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const acm::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
