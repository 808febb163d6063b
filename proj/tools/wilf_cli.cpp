// Command-line front end: analyze single semigroups, run exhaustive or
// randomized sweeps, and export the (q1, q2) region.
//
// Exit codes: 0 all requested checks passed, 1 at least one proposition
// violation found, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wilf/wilf.hpp"

namespace {

std::vector<std::int64_t> parse_generators(const std::string& text) {
  std::vector<std::int64_t> gens;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    gens.push_back(std::stoll(item));
  }
  if (gens.empty()) throw std::invalid_argument("no generators given");
  return gens;
}

void print_text_report(const wilf::Semigroup& s, const wilf::Analysis& a,
                       const std::vector<wilf::LedgerEntry>& extras,
                       std::ostream& out) {
  out << "generators: " << wilf::joined_generators(s.min_generators) << "\n";
  out << "multiplicity: " << s.multiplicity << "\n";
  out << "embedding_dim: " << s.embedding_dim << "\n";
  out << "frobenius: " << s.frobenius << "\n";
  out << "conductor: " << s.conductor << "\n";
  out << "genus: " << s.genus << "\n";
  out << "left_count: " << s.left_count << "\n";
  const wilf::WilfCheck wc = wilf_check(s);
  out << "wilf_ratio: " << (wc.ratio ? wc.ratio->str() : "inf")
      << (wc.holds ? " (holds)" : " (VIOLATED)") << "\n";
  out << "large_a2: " << (a.partition.large_a2 ? "1" : "0") << "\n";
  out << "q1,q2,q3: " << a.partition.q1 << "," << a.partition.q2 << ","
      << a.partition.q3 << "\n";
  if (a.graph) {
    out << "apery_pairs: " << a.graph->edges.size()
        << " sigma: " << a.graph->sigma << "\n";
    if (!a.graph->witness.empty()) {
      out << "matching_witness:";
      for (auto [x, y] : a.graph->witness) {
        out << " (" << x << "," << y << ")";
      }
      out << "\n";
    }
  }
  out << "theta: " << a.theta.theta.str() << " floor: " << a.theta.floor_theta
      << " k: " << a.theta.k << "\n";
  if (a.ell) {
    out << "ell_value: " << a.ell->value.str() << " (case "
        << a.ell->case_index << ")\n";
  }
  out << "checks:\n";
  auto print_entry = [&out](const wilf::LedgerEntry& e) {
    out << "  " << e.id << ": " << wilf::status_string(e.status);
    if (!e.skipped()) {
      out << " (" << e.lhs.str() << " " << wilf::relation_symbol(e.relation)
          << " " << e.rhs.str() << ")";
    }
    if (!e.note.empty()) out << " [" << e.note << "]";
    out << "\n";
  };
  for (const auto& e : a.ledger.entries) print_entry(e);
  for (const auto& e : extras) print_entry(e);
  out << "certificate: " << a.ledger.certificate.tag() << "\n";
}

int run_analyze(const std::string& gens_text, const std::string& format) {
  const wilf::Semigroup s = wilf::build_semigroup(parse_generators(gens_text));
  const wilf::Analysis a = wilf::analyze_semigroup(s);
  std::vector<wilf::LedgerEntry> extras;
  extras.push_back(wilf::divisible_conductor_check(s, a.partition));
  extras.push_back(wilf::conductor_threshold_check(s, a.partition, wilf::Rational(1, 6)));
  extras.push_back(wilf::weak_wilf_check(s, wilf::Rational(79, 100)).entry);
  if (format == "json") {
    std::cout << wilf::to_json(wilf::make_record(s, a, extras)).dump(2)
              << "\n";
  } else {
    print_text_report(s, a, extras, std::cout);
  }
  bool violated = false;
  for (const auto& e : a.ledger.entries) {
    if (e.status == wilf::CheckStatus::Fails) violated = true;
  }
  for (const auto& e : extras) {
    if (e.status == wilf::CheckStatus::Fails) violated = true;
  }
  return violated ? 1 : 0;
}

void write_report_file(const wilf::SweepReport& report,
                       const std::optional<std::string>& out_path) {
  const bool json = out_path && out_path->size() >= 5 &&
                    out_path->substr(out_path->size() - 5) == ".json";
  if (out_path) {
    std::ofstream file(*out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + *out_path);
    if (json) {
      wilf::write_records_json(file, report.records);
    } else {
      wilf::write_records_csv(file, report.records);
    }
  } else {
    wilf::write_records_csv(std::cout, report.records);
  }
}

void print_summary(const wilf::SweepReport& report) {
  std::cerr << "visited: " << report.visited << "  checked: " << report.checked
            << "  violations: " << report.total_violations() << "\n";
  std::cerr << "per-genus counts:";
  const std::size_t shown = std::min<std::size_t>(
      report.per_genus_counts.size(), 48);
  for (std::size_t g = 0; g < shown; ++g) {
    std::cerr << " " << report.per_genus_counts[g];
  }
  if (shown < report.per_genus_counts.size()) {
    std::cerr << " ... (" << report.per_genus_counts.size() << " genera)";
  }
  std::cerr << "\n";
  for (const auto& [id, st] : report.stats) {
    std::cerr << "  " << id << ": evaluated " << st.evaluated << ", holds "
              << st.holds << ", violations " << st.violations << ", skipped "
              << st.skipped << "\n";
  }
  std::cerr << "certificates:";
  for (const auto& [tag, n] : report.certificate_histogram) {
    std::cerr << " " << tag << "=" << n;
  }
  std::cerr << "\n";
  if (report.min_wilf_ratio) {
    std::cerr << "min wilf ratio: " << report.min_wilf_ratio->str() << "\n";
  }
  if (report.min_ell_slack) {
    std::cerr << "min ell-chain slack: " << report.min_ell_slack->str()
              << "\n";
  }
  if (report.min_nu_ell_certificate) {
    std::cerr << "min embdim with EllBound certificate: "
              << *report.min_nu_ell_certificate << "\n";
  }
  if (report.min_nu_weak_wilf) {
    std::cerr << "min embdim with weak inequality: "
              << *report.min_nu_weak_wilf << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "wilf — numerical semigroup bound checker.\n"
      "Exact verification of the generator-partition bounds, Apery-pair\n"
      "matching bounds and Wilf certificates over exhaustively enumerated\n"
      "or randomly generated numerical semigroups.\n\n"
      "Report CSV columns (fixed order):\n  " +
      wilf::csv_header() +
      "\nCheck flags: 1 holds, 0 fails, skip hypothesis-not-met, - not "
      "evaluated.\nRationals are exact \"num/den\" strings; wilf_ratio is "
      "\"inf\" when the conductor is 0.\n\n"
      "Region CSV columns: q1,q2,inside — rows with inside in {0,1} are\n"
      "lattice points; rows with inside=boundary sample the bounding\n"
      "hyperbola q2 = (mu-nu)/q1 - q1/2 - 1/2 at integer q1 with exact\n"
      "rational q2.\n"};
  app.require_subcommand(1);

  // analyze
  std::string gens_text;
  std::string format = "text";
  CLI::App* analyze = app.add_subcommand("analyze", "full report for one semigroup");
  analyze->add_option("--gens", gens_text, "comma-separated generators")
      ->required();
  analyze->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // sweep
  std::int64_t max_genus = 0;
  std::string filter = "large-a2";
  std::string checks_text = "all";
  std::int64_t jobs = 1;
  std::string out_path;
  bool verbose = false;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "exhaustive genus-tree sweep with proposition checks");
  sweep_cmd->add_option("--max-genus", max_genus, "largest genus to visit")
      ->required();
  sweep_cmd->add_option("--filter", filter, "all or large-a2")
      ->check(CLI::IsMember({"all", "large-a2"}));
  std::string checks_help = "comma-separated check list or 'all'; checks:";
  for (const std::string& name : wilf::all_check_names()) {
    checks_help += " " + name;
  }
  sweep_cmd->add_option("--checks", checks_text, checks_help);
  sweep_cmd->add_option("--jobs", jobs, "worker threads");
  sweep_cmd->add_option("--out", out_path, "output file (.json for JSON)");
  sweep_cmd->add_flag("--verbose", verbose,
                      "emit a record per visited semigroup, not only "
                      "violations");

  // region
  std::int64_t region_mu = 0, region_nu = 0;
  std::string region_out;
  CLI::App* region = app.add_subcommand(
      "region", "export the (q1,q2) region lattice and boundary");
  region->add_option("--m", region_mu, "multiplicity")->required();
  region->add_option("--e", region_nu, "embedding dimension")->required();
  region->add_option("--out", region_out, "output file");

  // fuzz
  std::int64_t fuzz_count = 0;
  std::int64_t max_mult = 40;
  std::uint64_t seed = 0;
  std::string fuzz_out;
  std::string fuzz_checks = "all";
  std::string fuzz_filter = "large-a2";
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "seeded random generator sets through the same checks");
  fuzz->add_option("--count", fuzz_count, "number of samples")->required();
  fuzz->add_option("--max-mult", max_mult, "largest multiplicity drawn");
  fuzz->add_option("--seed", seed, "random seed");
  fuzz->add_option("--out", fuzz_out, "output file (.json for JSON)");
  fuzz->add_option("--checks", fuzz_checks, checks_help);
  fuzz->add_option("--filter", fuzz_filter, "all or large-a2");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      return run_analyze(gens_text, format);
    }
    if (*sweep_cmd) {
      wilf::SweepConfig config;
      config.max_genus = max_genus;
      config.filter = filter == "all" ? wilf::SweepFilter::All
                                      : wilf::SweepFilter::LargeA2;
      if (checks_text != "all") {
        std::stringstream stream(checks_text);
        std::string item;
        while (std::getline(stream, item, ',')) {
          if (!item.empty()) config.checks.push_back(item);
        }
      }
      config.worker_count = jobs;
      config.collect_all_records = verbose;
      const wilf::SweepReport report = wilf::sweep(config);
      write_report_file(report,
                        out_path.empty()
                            ? std::nullopt
                            : std::optional<std::string>(out_path));
      print_summary(report);
      return report.total_violations() > 0 ? 1 : 0;
    }
    if (*region) {
      if (region_out.empty()) {
        wilf::write_region_csv(std::cout, region_mu, region_nu);
      } else {
        std::ofstream file(region_out, std::ios::binary);
        if (!file) {
          throw std::runtime_error("cannot open output file: " + region_out);
        }
        wilf::write_region_csv(file, region_mu, region_nu);
      }
      return 0;
    }
    if (*fuzz) {
      wilf::SweepConfig config;
      config.filter = fuzz_filter == "all" ? wilf::SweepFilter::All
                                           : wilf::SweepFilter::LargeA2;
      if (fuzz_checks != "all") {
        std::stringstream stream(fuzz_checks);
        std::string item;
        while (std::getline(stream, item, ',')) {
          if (!item.empty()) config.checks.push_back(item);
        }
      }
      config.seed = seed;
      config.fuzz_count = fuzz_count;
      config.max_multiplicity = max_mult;
      const wilf::SweepReport report = wilf::fuzz_sweep(config);
      write_report_file(report,
                        fuzz_out.empty()
                            ? std::nullopt
                            : std::optional<std::string>(fuzz_out));
      print_summary(report);
      return report.total_violations() > 0 ? 1 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
