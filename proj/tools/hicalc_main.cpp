#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hicalc/hicalc.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw hicalc::input_error("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_analyze(const std::string& path, bool as_json, bool verbose, bool assume_trivial,
                std::optional<long long> rho_override) {
  const hicalc::HypersurfaceProfile profile = hicalc::parse_profile_text(read_file(path));
  std::vector<std::string> trace;
  hicalc::AnalyzeOptions opts;
  opts.assume_trivial_monodromy = assume_trivial;
  opts.rho_override = rho_override;
  if (verbose) opts.trace = &trace;
  const hicalc::StabilityReport rep = hicalc::analyze(profile, opts);
  if (verbose)
    for (const auto& line : trace) std::cerr << line << "\n";
  if (as_json)
    std::cout << hicalc::report_to_json(rep).dump(2) << "\n";
  else
    std::cout << hicalc::report_to_text(rep);
  return 0;
}

int run_chain(const std::string& path, std::optional<int> cutoff_override, bool check_duality,
              bool as_json, bool verbose) {
  const hicalc::ChainPairFile file = hicalc::parse_chain_pair_text(read_file(path));
  const hicalc::PairComplex pair = hicalc::make_pair_complex(file, cutoff_override);
  if (verbose) {
    const hicalc::Truncation t = hicalc::chain_truncation(pair.link, pair.cutoff);
    std::cerr << "[trace] cutoff " << pair.cutoff << ": truncated link ranks (";
    for (std::size_t i = 0; i < t.complex.dims().size(); ++i)
      std::cerr << (i ? ", " : "") << t.complex.dims()[i];
    std::cerr << ")\n";
  }
  const hicalc::ChainReport rep = hicalc::run_chain(pair, check_duality);
  if (as_json)
    std::cout << hicalc::chain_report_to_json(rep).dump(2) << "\n";
  else
    std::cout << hicalc::chain_report_to_text(rep);
  return 0;
}

int run_one_reproduce(const hicalc::ReproduceCase& c) {
  const std::vector<hicalc::CellDiff> diffs = hicalc::reproduce_diff(c);
  if (diffs.empty()) {
    std::cout << "reproduce " << c.id << ": PASS\n";
    return 0;
  }
  std::cout << "reproduce " << c.id << ": FAIL\n";
  for (const auto& d : diffs)
    std::cout << "  " << d.cell << ": expected " << d.expected << ", got " << d.actual
              << "\n";
  return 1;
}

int run_reproduce(const std::string& id) {
  if (id == "all") {
    int bad = 0;
    for (const auto& c : hicalc::reproduce_cases()) bad += run_one_reproduce(c);
    return bad == 0 ? 0 : 1;
  }
  const hicalc::ReproduceCase* c = hicalc::find_reproduce_case(id);
  if (!c) {
    std::string known;
    for (const auto& k : hicalc::reproduce_cases()) known += " " + k.id;
    throw hicalc::input_error("unknown reproduce id '" + id + "'; known ids:" + known +
                              " all");
  }
  return run_one_reproduce(*c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Betti numbers of intersection spaces of hypersurfaces with isolated "
               "singularities, plus an exact chain-complex engine"};
  app.set_version_flag("--version", "hicalc 1.0.0");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "analyze a hypersurface profile (JSON file)");
  std::string profile_path;
  bool a_json = false, a_verbose = false, a_trivial = false;
  long long a_rho = 0;
  analyze->add_option("profile", profile_path, "path to the profile JSON")->required();
  analyze->add_flag("--json", a_json, "emit the report as JSON on stdout");
  analyze->add_flag("--verbose", a_verbose, "print derivation steps on stderr");
  auto* rho_opt = analyze->add_option(
      "--rho", a_rho, "override the middle link-to-exterior homology rank");
  analyze->add_flag("--assume-trivial-monodromy", a_trivial,
                    "treat every local monodromy as trivial (rank(T-1) = 0)");

  auto* chain = app.add_subcommand("chain", "process a chain-complex pair (JSON file)");
  std::string pair_path;
  bool c_json = false, c_verbose = false, c_duality = false;
  long long c_cutoff = 0;
  chain->add_option("pair", pair_path, "path to the pair JSON")->required();
  auto* cut_opt = chain->add_option("--cutoff", c_cutoff, "truncation cutoff degree");
  chain->add_flag("--check-duality", c_duality,
                  "also compare reduced ranks at complementary cutoffs");
  chain->add_flag("--json", c_json, "emit the report as JSON on stdout");
  chain->add_flag("--verbose", c_verbose, "print truncation details on stderr");

  auto* reproduce =
      app.add_subcommand("reproduce", "recompute a bundled worked example and diff it");
  std::string repro_id;
  reproduce->add_option("id", repro_id, "case id, or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << hicalc::error_json("input_error", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    if (analyze->parsed()) {
      std::optional<long long> rho_override;
      if (rho_opt->count() > 0) rho_override = a_rho;
      return run_analyze(profile_path, a_json, a_verbose, a_trivial, rho_override);
    }
    if (chain->parsed()) {
      std::optional<int> cutoff_override;
      if (cut_opt->count() > 0) {
        if (c_cutoff < 0 || c_cutoff > 64)
          throw hicalc::input_error("cutoff must lie between 0 and 64");
        cutoff_override = static_cast<int>(c_cutoff);
      }
      return run_chain(pair_path, cutoff_override, c_duality, c_json, c_verbose);
    }
    if (reproduce->parsed()) return run_reproduce(repro_id);
  } catch (const hicalc::input_error& e) {
    std::cerr << hicalc::error_json("input_error", e.what()).dump(2) << "\n";
    return 2;
  } catch (const hicalc::compute_error& e) {
    std::cerr << hicalc::error_json("compute_error", e.what()).dump(2) << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << hicalc::error_json("internal_error", e.what()).dump(2) << "\n";
    return 1;
  }
  return 0;
}
