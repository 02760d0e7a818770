#pragma once

#include "ncpart/core_model.hpp"
#include "ncpart/count_table.hpp"
#include "ncpart/errors.hpp"
#include "ncpart/random_stream.hpp"
#include "ncpart/render.hpp"
#include "ncpart/sampler.hpp"
#include "ncpart/tableau.hpp"
#include "ncpart/verify.hpp"
#include "ncpart/walk_engine.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ncpart::cli {

enum ExitCode : int { ok = 0, usage = 1, verification_failure = 2, resource_cap = 3 };

struct Config {
  std::string command;
  int n = 0;
  std::string variant = "plain";
  int count = 1;
  std::optional<std::uint64_t> seed;
  std::string format;
  std::string cache_path;
  bool allow_large = false;
  std::string out_path;
  int n_max = 6;
  std::string summary_path;
  std::string input_path;
  std::uint64_t samples_per_class = 1000;
  int uniformity_n = 6;

  Variant parsed_variant() const { return variant == "two_regular" ? Variant::two_regular : Variant::plain; }
  BuildLimits limits() const { return BuildLimits{kDefaultMaxN, allow_large}; }
};

namespace detail {

inline std::string format_structure(const SetPartition& p, const VacillatingTableau& walk, const std::string& format) {
  if (format == "arcs") return format_arcs(canonical_arcs(p));
  if (format == "tableau") return format_tableau(walk);
  return format_partition(p);
}

inline TableKind table_kind(Variant v) { return v == Variant::plain ? TableKind::omega : TableKind::sigma_star; }

/// Table size needed for (variant, n).
inline int table_n(Variant v, int n) { return v == Variant::plain ? n : n - 1; }

inline CountTable build_table(Variant v, int n, const BuildLimits& limits) {
  return v == Variant::plain ? build_omega_table(n, limits)
                             : build_sigma_star(n - 1, SigmaMethod::direct_dp, limits);
}

/// Loads the cache at `path` if it exists and can serve (variant, n).
inline std::shared_ptr<const CountTable> try_load_cache(const std::string& path, Variant v, int n, std::ostream& err) {
  std::ifstream in(path);
  if (!in) return nullptr;
  try {
    auto table = std::make_shared<const CountTable>(load_table(in));
    if (table->kind() != table_kind(v) || table->n() < table_n(v, n)) {
      err << "cache " << path << " holds " << kind_token(table->kind()) << " n=" << table->n()
          << ", not usable here; building in memory\n";
      return nullptr;
    }
    return table;
  } catch (const TableError& e) {
    err << "ignoring invalid cache " << path << ": " << e.what() << '\n';
    return nullptr;
  }
}

inline int cmd_count(const Config& c, std::ostream& out) {
  c.limits().check(c.n);
  out << (c.parsed_variant() == Variant::plain ? count_noncrossing_partitions(c.n) : count_two_regular_partitions(c.n))
      << '\n';
  return ok;
}

inline int cmd_sample(const Config& c, std::ostream& out, std::ostream& err) {
  const Variant v = c.parsed_variant();
  c.limits().check(c.n);
  std::shared_ptr<const CountTable> table;
  if (!c.cache_path.empty()) table = try_load_cache(c.cache_path, v, c.n, err);
  if (!table) table = std::make_shared<const CountTable>(build_table(v, c.n, c.limits()));
  PartitionSampler sampler(v, c.n, table);

  std::uint64_t seed = 0;
  if (c.seed) {
    seed = *c.seed;
  } else {
    std::random_device rd;
    seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    err << "seed: " << seed << '\n';
  }
  RandomStream rng(seed);
  for (int k = 0; k < c.count; ++k) {
    VacillatingTableau walk = sampler.walk(rng);
    out << format_structure(tableau_to_partition(walk), walk, c.format) << '\n';
  }
  return ok;
}

inline int cmd_enumerate(const Config& c, std::ostream& out) {
  const auto filter = c.parsed_variant() == Variant::plain ? PartitionFilter::noncrossing3
                                                           : PartitionFilter::two_regular_noncrossing3;
  for (const auto& p : enumerate_partitions(c.n, filter))
    out << format_structure(p, partition_to_tableau(p), c.format) << '\n';
  return ok;
}

inline int cmd_tables(const Config& c, std::ostream& out) {
  const Variant v = c.parsed_variant();
  c.limits().check(c.n);
  const auto start = std::chrono::steady_clock::now();
  CountTable table = build_table(v, c.n, c.limits());
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::ofstream file(c.out_path);
  if (!file) throw std::runtime_error("cannot write " + c.out_path);
  save_table(table, file);
  file.close();
  if (!file) throw std::runtime_error("error writing " + c.out_path);
  out << "kind=" << kind_token(table.kind()) << " n=" << table.n() << " entries=" << table.nonzero_count()
      << " build_seconds=" << std::fixed << std::setprecision(3) << elapsed.count() << " path=" << c.out_path << '\n';
  return ok;
}

inline int cmd_verify(const Config& c, std::ostream& out) {
  CrossCheckReport report = cross_check_suite(c.n_max);
  std::uint64_t seed = c.seed.value_or(1);
  for (Variant v : {Variant::plain, Variant::two_regular}) {
    const std::string name = std::string("uniformity_") + (v == Variant::plain ? "plain" : "two_regular");
    CheckResult r{name, true, ""};
    try {
      PartitionSampler sampler(v, c.uniformity_n);
      if (sampler.universe_size() < 2) {
        r.details = "universe of size 1 at n=" + std::to_string(c.uniformity_n);
      } else {
        UniformityRun run = uniformity_test(sampler, c.samples_per_class, seed);
        const auto& u = run.report;
        r.pass = u.passed() && u.min_class_count >= 1;
        std::ostringstream d;
        d << "n=" << c.uniformity_n << " classes=" << u.universe_size << " samples=" << u.sample_count
          << " chi2=" << std::fixed << std::setprecision(2) << u.chi_square << " band=[" << u.lower_quantile << ","
          << u.upper_quantile << "] " << pbound_name(u.p_bound) << " min_class=" << u.min_class_count
          << " attempts=" << run.seeds.size();
        r.details = d.str();
      }
    } catch (const std::exception& e) {
      r.pass = false;
      r.details = e.what();
    }
    report.checks.push_back(std::move(r));
  }
  out << report.text();
  if (!c.summary_path.empty()) {
    std::ofstream summary(c.summary_path);
    if (!summary) throw std::runtime_error("cannot write " + c.summary_path);
    summary << report.summary();
  }
  return report.all_passed() ? ok : verification_failure;
}

inline int cmd_render(const Config& c, std::istream& in, std::ostream& out) {
  std::ifstream file;
  if (!c.input_path.empty()) {
    file.open(c.input_path);
    if (!file) throw std::runtime_error("cannot read " + c.input_path);
  }
  std::istream& source = c.input_path.empty() ? in : file;
  std::string line;
  bool first = true;
  while (std::getline(source, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    SetPartition p = parse_partition(line);
    if (!first && c.format != "svg") out << '\n';
    first = false;
    out << (c.format == "svg" ? render_svg(p) : render_ascii(p));
  }
  return ok;
}

}  // namespace detail

/// Parses `args` (without the program name) and runs the chosen command.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counting and exact-uniform sampling of 3-noncrossing set partitions", "ncpart"};
  app.require_subcommand(1);
  Config c;

  const std::vector<std::string> variants{"plain", "two_regular"};
  const std::vector<std::string> structure_formats{"blocks", "arcs", "tableau"};
  auto add_n = [&](CLI::App* sub) { sub->add_option("--n", c.n, "Ground set size")->required()->check(CLI::PositiveNumber); };
  auto add_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", c.variant, "plain or two_regular")->check(CLI::IsMember(variants));
  };
  auto add_large = [&](CLI::App* sub) {
    sub->add_flag("--allow-large", c.allow_large, "Lift the n <= " + std::to_string(kDefaultMaxN) + " cap");
  };

  auto* count = app.add_subcommand("count", "Exact number of structures");
  add_n(count);
  add_variant(count);
  add_large(count);

  auto* sample = app.add_subcommand("sample", "Uniform random structures, one per line");
  add_n(sample);
  add_variant(sample);
  add_large(sample);
  sample->add_option("--count", c.count, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", c.seed, "64-bit seed");
  sample->add_option("--format", c.format, "blocks, arcs or tableau")->check(CLI::IsMember(structure_formats));
  sample->add_option("--cache", c.cache_path, "Table cache written by `tables`");

  auto* enumerate = app.add_subcommand("enumerate", "List every structure (n <= 12)");
  add_n(enumerate);
  add_variant(enumerate);
  enumerate->add_option("--format", c.format, "blocks, arcs or tableau")->check(CLI::IsMember(structure_formats));

  auto* tables = app.add_subcommand("tables", "Build and save the count table");
  add_n(tables);
  add_variant(tables);
  add_large(tables);
  tables->add_option("--out", c.out_path, "Output path")->required();

  auto* verify = app.add_subcommand("verify", "Cross-check identities and sampler uniformity");
  verify->add_option("--n-max", c.n_max, "Largest n for exhaustive checks")->check(CLI::Range(1, kMaxCrossCheck));
  verify->add_option("--summary", c.summary_path, "Write CHECK lines to this file");
  verify->add_option("--seed", c.seed, "Seed for the uniformity tests (default 1)");
  verify->add_option("--uniformity-n", c.uniformity_n, "n for the uniformity tests")->check(CLI::Range(1, kMaxEnumeratedPartitions));
  verify->add_option("--samples-per-class", c.samples_per_class, "Samples per class")->check(CLI::PositiveNumber);

  auto* render = app.add_subcommand("render", "Arc diagrams for block-notation partitions");
  render->add_option("--format", c.format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--input", c.input_path, "Input file (default: standard input)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return usage;
  }

  try {
    if (count->parsed()) return detail::cmd_count(c, out);
    if (sample->parsed()) {
      if (c.format.empty()) c.format = "blocks";
      return detail::cmd_sample(c, out, err);
    }
    if (enumerate->parsed()) {
      if (c.format.empty()) c.format = "blocks";
      return detail::cmd_enumerate(c, out);
    }
    if (tables->parsed()) return detail::cmd_tables(c, out);
    if (verify->parsed()) return detail::cmd_verify(c, out);
    if (render->parsed()) {
      if (c.format.empty()) c.format = "ascii";
      return detail::cmd_render(c, in, out);
    }
  } catch (const CapError& e) {
    err << "error: " << e.what() << '\n';
    return resource_cap;
  } catch (const LogicError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return verification_failure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

inline int run(int argc, char** argv) {
  return run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}

}  // namespace ncpart::cli
