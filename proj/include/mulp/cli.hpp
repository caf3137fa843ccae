#pragma once

// Command-line front door: validate | transform | sweep | rank |
// crossover | combine. Exit codes: 0 ok, 1 usage, 2 data/validation
// error, 3 math error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mulp/core.hpp"
#include "mulp/fusion.hpp"
#include "mulp/io.hpp"
#include "mulp/transforms.hpp"

namespace mulp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;
inline constexpr int kExitMath = 3;

namespace detail {

inline std::string read_input(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") {
    std::ostringstream buf;
    buf << stdin_stream.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw CLI::ValidationError("--format", "expected csv or json");
}

}  // namespace detail

// Runs one CLI invocation. Streams are injectable for testing; the real
// entry point passes std::cout / std::cerr / std::cin.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err, std::istream& in = std::cin) {
  CLI::App app{"Dempster-Shafer evidence toolkit: pignistic and multiscale "
               "probability transformation of basic probability assignments"};
  app.require_subcommand(1);

  bool strict = false;
  bool full_precision = false;
  double mass_tol = kDefaultMassTolerance;
  std::string format = "csv";
  app.add_flag("--strict", strict, "Reject any mass on the empty set");
  app.add_flag("--full-precision", full_precision,
               "Print full binary precision instead of 4 decimals");
  app.add_option("--mass-tol", mass_tol, "Mass-sum tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format (csv|json)")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string file;
  std::vector<std::string> files;
  std::string method = "mulp";
  double q = 0.0;
  bool q_given = false;
  double q_start = 0.0, q_end = 10.0, q_lo = 0.0, q_hi = 10.0;
  std::size_t steps = 11;
  std::string elem_x, elem_y;
  double tol = 1e-6;
  std::size_t grid = 64;

  auto* validate = app.add_subcommand("validate", "Check a BPA file");
  validate->add_option("file", file, "BPA file or - for stdin")->required();

  auto* transform =
      app.add_subcommand("transform", "Transform a BPA to probabilities");
  transform->add_option("file", file, "BPA file or - for stdin")->required();
  transform->add_option("--method", method, "betp or mulp")
      ->check(CLI::IsMember({"betp", "mulp"}));
  transform->add_option("--q", q, "Multiscale exponent")
      ->each([&](const std::string&) { q_given = true; });

  auto* sweep_cmd = app.add_subcommand("sweep", "Multiscale sweep over q");
  sweep_cmd->add_option("file", file, "BPA file or - for stdin")->required();
  sweep_cmd->add_option("--q-start", q_start, "First q")->required();
  sweep_cmd->add_option("--q-end", q_end, "Last q")->required();
  sweep_cmd->add_option("--steps", steps, "Number of q values")->required();

  auto* rank_cmd = app.add_subcommand("rank", "Rank elements for decision");
  rank_cmd->add_option("file", file, "BPA file or - for stdin")->required();
  rank_cmd->add_option("--method", method, "betp or mulp")
      ->check(CLI::IsMember({"betp", "mulp"}));
  rank_cmd->add_option("--q", q, "Multiscale exponent")
      ->each([&](const std::string&) { q_given = true; });

  auto* crossover =
      app.add_subcommand("crossover", "Find a ranking-crossover q*");
  crossover->add_option("file", file, "BPA file or - for stdin")->required();
  crossover->add_option("--x", elem_x, "First element")->required();
  crossover->add_option("--y", elem_y, "Second element")->required();
  crossover->add_option("--q-lo", q_lo, "Interval start")->required();
  crossover->add_option("--q-hi", q_hi, "Interval end")->required();
  crossover->add_option("--tol", tol, "Bisection tolerance");
  crossover->add_option("--grid", grid, "Sign-scan grid points");

  auto* combine_cmd =
      app.add_subcommand("combine", "Fuse BPAs with Dempster's rule");
  combine_cmd->add_option("files", files, "Two or more BPA files")
      ->required()
      ->expected(2, -1);

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const OutputFormat fmt = detail::parse_format(format);

    if (validate->parsed()) {
      const MassFunction m = parse_bpa(detail::read_input(file, in), strict, mass_tol);
      out << "frame size: " << m.frame().size() << "\n"
          << "focal sets: " << m.focal_count() << "\n"
          << "m(empty): " << mulp::detail::format_q(m.empty_mass()) << "\n";
      return kExitOk;
    }

    if (transform->parsed() || rank_cmd->parsed()) {
      if (method == "mulp" && !q_given)
        throw CLI::RequiredError("--q (required when --method mulp)");
      const MassFunction m = parse_bpa(detail::read_input(file, in), strict, mass_tol);
      const ProbabilityDistribution p =
          method == "betp" ? pignistic(m) : multiscale(m, q);
      if (transform->parsed()) {
        out << emit_distribution(p, fmt, full_precision);
      } else {
        for (const auto& [label, prob] : rank(p).entries)
          out << label << " " << mulp::detail::format_prob(prob, full_precision)
              << "\n";
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      if (steps < 1) throw CLI::ValidationError("--steps", "must be >= 1");
      if (q_end < q_start)
        throw CLI::ValidationError("--q-end", "must be >= --q-start");
      std::vector<double> qs;
      qs.reserve(steps);
      if (steps == 1) {
        qs.push_back(q_start);
      } else {
        for (std::size_t i = 0; i < steps; ++i)
          qs.push_back(q_start + (q_end - q_start) * static_cast<double>(i) /
                                     static_cast<double>(steps - 1));
      }
      const MassFunction m = parse_bpa(detail::read_input(file, in), strict, mass_tol);
      out << emit_sweep(sweep(m, qs), fmt, full_precision);
      return kExitOk;
    }

    if (crossover->parsed()) {
      const MassFunction m = parse_bpa(detail::read_input(file, in), strict, mass_tol);
      const auto q_star =
          find_crossover(m, elem_x, elem_y, q_lo, q_hi, tol, grid);
      if (q_star)
        out << mulp::detail::format_prob(*q_star, full_precision) << "\n";
      else
        out << "none\n";
      return kExitOk;
    }

    if (combine_cmd->parsed()) {
      std::vector<MassFunction> sources;
      sources.reserve(files.size());
      // fusion requires strict BPAs regardless of --strict
      for (const auto& f : files)
        sources.push_back(parse_bpa(detail::read_input(f, in), true, mass_tol));
      auto [fused, conflicts] = combine_all(sources);
      for (std::size_t i = 0; i < conflicts.size(); ++i)
        err << "step " << (i + 1) << ": k = " << conflicts[i].k << "\n";
      out << emit_bpa(fused);
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  err << "no subcommand given\n";
  return kExitUsage;
}

}  // namespace mulp::cli
