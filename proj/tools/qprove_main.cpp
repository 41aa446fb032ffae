#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qprove/jacobi.hpp"
#include "qprove/measurement.hpp"
#include "qprove/parser.hpp"
#include "qprove/prover.hpp"
#include "qprove/rng.hpp"
#include "qprove/state_io.hpp"

namespace {

using namespace qprove;

template <typename T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ' ';
    out << values[i];
  }
  return out.str();
}

void run_set(const std::string& expr_text, std::uint64_t bound) {
  SetExpr expr = parse_set_expr(expr_text);
  LinearForm form = canonicalize(expr);
  std::cout << "expression: " << expr.to_string() << '\n';
  std::cout << "canonical: " << form.to_string() << '\n';
  std::cout << "members [0, " << bound
            << "]: " << join(enumerate_set(form, bound)) << '\n';
  std::cout << "frobenius-gap: " << frobenius_gap(form).to_string() << '\n';
}

void run_spectrum(const std::string& poly_text, std::uint64_t cutoff,
                  std::optional<std::uint64_t> bound_opt) {
  NonnegPolynomial F = parse_polynomial(poly_text);
  std::vector<BigInt> spectrum =
      spectrum_diagonal(F, F.arity(), cutoff);

  std::uint64_t bound = 0;
  if (bound_opt) {
    bound = *bound_opt;
  } else {
    // cover the whole truncated spectrum: its top value sits at the box
    // corner because every coefficient is nonnegative
    BigInt top = spectrum.empty() ? BigInt(0) : spectrum.back();
    if (!fits_uint64(top) || top >= (std::uint64_t(1) << 30)) {
      throw std::invalid_argument(
          "spectrum exceeds the default enumeration range; pass --bound");
    }
    bound = top.convert_to<std::uint64_t>();
  }
  std::vector<std::uint64_t> range = enumerate_range(F, bound);
  std::optional<BigInt> threshold = truncation_threshold(F, cutoff);

  BigInt compare_below = BigInt(bound) + 1;
  if (threshold && *threshold < compare_below) compare_below = *threshold;
  std::vector<BigInt> spec_low;
  for (const BigInt& v : spectrum) {
    if (v < compare_below) spec_low.push_back(v);
  }
  std::vector<BigInt> range_low;
  for (std::uint64_t v : range) {
    if (BigInt(v) < compare_below) range_low.push_back(v);
  }

  std::cout << "polynomial: " << F.to_string() << '\n';
  std::cout << "spectrum (cutoff " << cutoff << "): " << join(spectrum) << '\n';
  std::cout << "range [0, " << bound << "]: " << join(range) << '\n';
  std::cout << "threshold: ";
  if (threshold) {
    std::cout << *threshold << '\n';
  } else {
    std::cout << "none\n";
  }
  std::cout << "agreement (below " << compare_below
            << "): " << (spec_low == range_low ? "OK" : "MISMATCH") << '\n';
}

FormalSystem system_for(const std::string& poly_text, int modes) {
  NonnegPolynomial F = parse_polynomial(poly_text);
  if (F.arity() < modes) F = F.lifted(modes);
  return FormalSystem{F, F.to_string(), {}};
}

void run_measure(const std::string& poly_text, const std::string& state_path,
                 std::uint64_t trials, std::uint64_t seed,
                 const std::string& out_path, const std::string& format) {
  StateSpec spec = load_state_spec(state_path);
  int modes = std::visit([](const auto& s) { return s.modes; }, spec);
  FormalSystem system = system_for(poly_text, modes);
  TrialReport report = run_trials(system, spec, trials, seed);

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write records to " + out_path);
    write_records_jsonl(out, report);
  }
  if (format == "json") {
    std::cout << report_to_json(report, out_path) << '\n';
  } else {
    write_histogram_tsv(std::cout, report);
  }
}

void run_prove(const std::string& poly_text, const std::string& state_path,
               std::uint64_t seed) {
  StateSpec spec = load_state_spec(state_path);
  int modes = std::visit([](const auto& s) { return s.modes; }, spec);
  FormalSystem system = system_for(poly_text, modes);
  StateVector state = make_state(spec);
  SeededRng rng(derive_seed(seed, 0));
  MeasurementRecord rec = prove_once(system, state, rng, 0);
  std::cout << "{\"theorem\":" << rec.theorem << ",\"proof\":[";
  for (std::size_t i = 0; i < rec.proof.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << rec.proof[i];
  }
  std::cout << "]}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unary set algebra, truncated Fock spectra, and the quantum "
               "proving procedure"};
  app.require_subcommand(1);

  std::string set_expr;
  std::uint64_t set_bound = 50;
  CLI::App* set_cmd =
      app.add_subcommand("set", "Canonicalize and enumerate a set expression");
  set_cmd->add_option("expr", set_expr, "set expression, e.g. \"{2}* + {1}\"")
      ->required();
  set_cmd->add_option("--bound", set_bound, "enumeration bound");

  std::string spectrum_poly;
  std::uint64_t spectrum_cutoff = 8;
  std::optional<std::uint64_t> spectrum_bound;
  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "Observable spectrum on the truncated box vs. the range");
  spectrum_cmd
      ->add_option("poly", spectrum_poly, "polynomial, e.g. \"2*x1 + 3*x2 + 1\"")
      ->required();
  spectrum_cmd->add_option("--cutoff", spectrum_cutoff, "per-mode cutoff")
      ->check(CLI::PositiveNumber);
  spectrum_cmd->add_option("--bound", spectrum_bound, "range enumeration bound");

  std::string measure_poly;
  std::string measure_state;
  std::uint64_t measure_trials = 1000;
  std::uint64_t measure_seed = 0;
  std::string measure_out;
  std::string measure_format = "tsv";
  CLI::App* measure_cmd = app.add_subcommand(
      "measure", "Repeated measurement trials against the Born distribution");
  measure_cmd->add_option("poly", measure_poly, "polynomial to measure")
      ->required();
  measure_cmd->add_option("--state", measure_state, "state spec JSON file")
      ->required();
  measure_cmd->add_option("--trials", measure_trials, "number of trials")
      ->check(CLI::PositiveNumber);
  measure_cmd->add_option("--seed", measure_seed, "master seed");
  measure_cmd->add_option("--out", measure_out, "write per-trial JSONL here");
  measure_cmd->add_option("--format", measure_format, "stdout format")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string prove_poly;
  std::string prove_state;
  std::uint64_t prove_seed = 0;
  CLI::App* prove_cmd = app.add_subcommand(
      "prove", "One proving round: measure, collapse, extract the proof");
  prove_cmd->add_option("poly", prove_poly, "polynomial coder")->required();
  prove_cmd->add_option("--state", prove_state, "state spec JSON file")
      ->required();
  prove_cmd->add_option("--seed", prove_seed, "master seed");

  try {
    app.parse(argc, argv);
    if (set_cmd->parsed()) {
      run_set(set_expr, set_bound);
    } else if (spectrum_cmd->parsed()) {
      run_spectrum(spectrum_poly, spectrum_cutoff, spectrum_bound);
    } else if (measure_cmd->parsed()) {
      run_measure(measure_poly, measure_state, measure_trials, measure_seed,
                  measure_out, measure_format);
    } else if (prove_cmd->parsed()) {
      run_prove(prove_poly, prove_state, prove_seed);
    }
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
