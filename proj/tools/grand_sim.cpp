// Command-line front end: BLER simulation, schedule dumps and checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "grand/code_config.hpp"
#include "grand/pattern_io.hpp"
#include "grand/schedule.hpp"
#include "grand/sim.hpp"
#include "grand/verify.hpp"

namespace {

std::optional<int> parse_hmax(const std::string& text) {
  if (text.empty() || text == "none") return std::nullopt;
  std::size_t used = 0;
  int v = std::stoi(text, &used);
  if (used != text.size() || v < 0) throw std::invalid_argument("bad --hmax '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

// Writes to the file if one was given, otherwise stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ORBGRAND decoding with LWO / iLWO error pattern schedules"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo BLER estimation");
  std::string code = "bch127", schedules = "lwo", pattern_file, ebn0 = "6.0", hmax, out_path;
  grand::SimConfig cfg;
  sim->add_option("--code", code, "bch127, polar128 or a code config file");
  sim->add_option("--schedule", schedules, "lwo, ilwo, ilwo-approx or file (comma list)");
  sim->add_option("--pattern-file", pattern_file, "pattern file for --schedule file");
  sim->add_option("--ebn0", ebn0, "Eb/N0 in dB: start:step:stop, a,b,c or a single value");
  sim->add_option("--qmax", cfg.q_max, "abandonment budget (queries)");
  sim->add_option("--hmax", hmax, "maximum pattern Hamming weight or 'none'");
  sim->add_option("--min-errors", cfg.min_block_errors, "stop after this many block errors");
  sim->add_option("--max-blocks", cfg.max_blocks, "stop after this many blocks");
  sim->add_option("--seed", cfg.seed, "RNG seed");
  sim->add_option("--workers", cfg.workers, "worker threads");
  sim->add_flag("--paired,!--unpaired", cfg.paired,
                 "same noise for every schedule (default; --unpaired to disable)");
  sim->add_option("--out", out_path, "CSV output file (default stdout)");

  // dump-patterns
  auto* dump = app.add_subcommand("dump-patterns", "write the first q patterns of a schedule");
  std::string dump_schedule = "lwo", dump_hmax, dump_out;
  int dump_n = 128;
  std::size_t dump_q = 1000;
  dump->add_option("--schedule", dump_schedule, "lwo, ilwo or ilwo-approx");
  dump->add_option("--n", dump_n, "pattern length");
  dump->add_option("--q", dump_q, "number of patterns");
  dump->add_option("--hmax", dump_hmax, "maximum Hamming weight or 'none'");
  dump->add_option("--out", dump_out, "output file (default stdout)");

  // verify-schedule
  auto* verify = app.add_subcommand("verify-schedule", "check a pattern file against the UPO");
  std::string verify_file;
  int verify_n = 128, verify_workers = 1;
  bool verify_strict = false;
  verify->add_option("--pattern-file,pattern-file", verify_file, "pattern file")->required();
  verify->add_option("--n", verify_n, "pattern length");
  verify->add_option("--workers", verify_workers, "worker threads");
  verify->add_flag("--strict", verify_strict, "exit with status 2 when the report is not empty");

  // empirical-schedule
  auto* emp = app.add_subcommand("empirical-schedule",
                                 "rank observed error patterns by frequency");
  std::string emp_code = "bch127", emp_out;
  double emp_ebn0 = 6.0;
  std::size_t emp_blocks = 100000, emp_q = 35;
  std::uint64_t emp_seed = 1;
  int emp_workers = 1;
  emp->add_option("--code", emp_code, "bch127, polar128 or a code config file");
  emp->add_option("--ebn0", emp_ebn0, "Eb/N0 in dB");
  emp->add_option("--max-blocks,--blocks", emp_blocks, "number of simulated blocks");
  emp->add_option("--q,--qmax", emp_q, "number of patterns to keep");
  emp->add_option("--seed", emp_seed, "RNG seed");
  emp->add_option("--workers", emp_workers, "worker threads");
  emp->add_option("--out", emp_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      cfg.code = code;
      cfg.ebn0_db = grand::parse_ebn0_list(ebn0);
      cfg.h_max = parse_hmax(hmax);
      cfg.pattern_file = pattern_file;
      auto linear = grand::load_code(code);
      Output out(out_path);
      out.stream() << grand::csv_header() << '\n';
      std::cerr << "rng=" << grand::BlockRng::kAlgorithm << " code=" << linear->name()
                << " n=" << linear->length() << " k=" << linear->dimension() << '\n';
      for (const auto& name : split(schedules, ',')) {
        cfg.schedule = grand::parse_schedule_kind(name);
        cfg.validate();
        auto schedule = grand::build_schedule(cfg, linear->length());
        auto results = grand::run_bler(*linear, schedule, cfg);
        for (const auto& r : results) {
          out.stream() << grand::csv_row(cfg, linear->name(), r) << '\n';
          std::cerr << name << " ebn0=" << r.ebn0_db << " blocks=" << r.blocks
                    << " stop=" << (r.stop == grand::StopReason::min_errors ? "min-errors" : "max-blocks")
                    << " seconds=" << r.wall_seconds << '\n';
        }
      }
      out.stream().flush();
      if (!out.stream()) throw std::runtime_error("write failed");
    } else if (dump->parsed()) {
      auto kind = grand::parse_schedule_kind(dump_schedule);
      auto patterns = grand::make_sequence(kind, dump_n, dump_q, parse_hmax(dump_hmax));
      Output out(dump_out);
      grand::write_patterns(out.stream(), patterns);
      if (!out.stream()) throw std::runtime_error("write failed");
    } else if (verify->parsed()) {
      auto patterns = grand::read_patterns(verify_file, verify_n);
      auto report = grand::verify_schedule(patterns, verify_workers);
      std::cout << "patterns " << patterns.size() << '\n'
                << "duplicates " << report.duplicates.size() << '\n'
                << "violations " << report.violations.size() << '\n';
      // Line numbers are 1-based.
      for (auto [first, repeat] : report.duplicates)
        std::cout << "duplicate line " << repeat + 1 << " repeats line " << first + 1 << '\n';
      for (auto [earlier, later] : report.violations)
        std::cout << "violation line " << later + 1 << " precedes line " << earlier + 1
                  << " in the UPO\n";
      if (verify_strict && !report.compliant()) return 2;
    } else if (emp->parsed()) {
      auto linear = grand::load_code(emp_code);
      auto patterns = grand::estimate_empirical_schedule(*linear, emp_ebn0, emp_blocks, emp_q,
                                                         emp_seed, emp_workers);
      Output out(emp_out);
      grand::write_patterns(out.stream(), patterns);
      if (!out.stream()) throw std::runtime_error("write failed");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
