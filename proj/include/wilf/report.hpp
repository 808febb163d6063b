#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wilf/bounds.hpp"
#include "wilf/ledger.hpp"
#include "wilf/partition.hpp"
#include "wilf/semigroup.hpp"

namespace wilf {

// Flat, serializable mirror of one semigroup's ledger. Field and column
// order is fixed; rationals travel as "num/den" strings, never as floats.
struct ReportRecord {
  std::vector<std::int64_t> generators;
  std::int64_t multiplicity = 1;
  std::int64_t embedding_dim = 1;
  std::int64_t frobenius = -1;
  std::int64_t conductor = 0;
  std::int64_t genus = 0;
  std::int64_t left_count = 0;
  bool large_a2 = false;
  std::int64_t q1 = 0, q2 = 0, q3 = 0;
  std::int64_t pair_count = 0;  // |Sigma|
  std::int64_t sigma = 0;
  std::int64_t floor_theta = 0;
  std::optional<Rational> ell_value;
  std::vector<std::pair<std::string, std::string>> flags;  // id -> status
  std::string certificate = "None";
  std::optional<Rational> wilf_ratio;  // absent means "inf" (conductor 0)
};

inline const std::vector<std::string>& record_flag_ids() {
  static const std::vector<std::string> kIds = {
      "wilf",           "coverage",           "mu_bound_a",
      "mu_bound_b",     "q1_bound",           "matching_bound",
      "matching_mu_bound",                    "lcount_basic",
      "lcount_pairs",   "ell_chain",          "ell_certificate",
      "divisible_conductor",                  "conductor_threshold",
      "weak_wilf",
  };
  return kIds;
}

inline std::string status_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Holds: return "1";
    case CheckStatus::Fails: return "0";
    case CheckStatus::Skipped: return "skip";
  }
  return "-";
}

inline ReportRecord make_record(const Semigroup& s, const Analysis& analysis,
                                const std::vector<LedgerEntry>& extras = {}) {
  ReportRecord r;
  r.generators = s.min_generators;
  r.multiplicity = s.multiplicity;
  r.embedding_dim = s.embedding_dim;
  r.frobenius = s.frobenius;
  r.conductor = s.conductor;
  r.genus = s.genus;
  r.left_count = s.left_count;
  r.large_a2 = analysis.partition.large_a2;
  r.q1 = analysis.partition.q1;
  r.q2 = analysis.partition.q2;
  r.q3 = analysis.partition.q3;
  if (analysis.graph) {
    r.pair_count = static_cast<std::int64_t>(analysis.graph->edges.size());
    r.sigma = analysis.graph->sigma;
  }
  r.floor_theta = analysis.theta.floor_theta;
  if (analysis.ell) r.ell_value = analysis.ell->value;
  for (const std::string& id : record_flag_ids()) {
    const LedgerEntry* entry = analysis.ledger.find(id);
    if (entry == nullptr) {
      for (const LedgerEntry& e : extras) {
        if (e.id == id) {
          entry = &e;
          break;
        }
      }
    }
    r.flags.emplace_back(id, entry ? status_string(entry->status) : "-");
  }
  r.certificate = analysis.ledger.certificate.tag();
  r.wilf_ratio = wilf_check(s).ratio;
  return r;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json to_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  j["generators"] = r.generators;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dim"] = r.embedding_dim;
  j["frobenius"] = r.frobenius;
  j["conductor"] = r.conductor;
  j["genus"] = r.genus;
  j["left_count"] = r.left_count;
  j["large_a2"] = r.large_a2;
  j["q1"] = r.q1;
  j["q2"] = r.q2;
  j["q3"] = r.q3;
  j["pairs"] = r.pair_count;
  j["sigma"] = r.sigma;
  j["floor_theta"] = r.floor_theta;
  j["ell_value"] = r.ell_value ? nlohmann::ordered_json(r.ell_value->str())
                               : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json checks;
  for (const auto& [id, status] : r.flags) checks[id] = status;
  j["checks"] = std::move(checks);
  j["certificate"] = r.certificate;
  j["wilf_ratio"] = r.wilf_ratio ? r.wilf_ratio->str() : "inf";
  return j;
}

inline Rational rational_from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(std::stoll(text));
  }
  return Rational(std::stoll(text.substr(0, slash)),
                  std::stoll(text.substr(slash + 1)));
}

inline ReportRecord record_from_json(const nlohmann::ordered_json& j) {
  ReportRecord r;
  r.generators = j.at("generators").get<std::vector<std::int64_t>>();
  r.multiplicity = j.at("multiplicity").get<std::int64_t>();
  r.embedding_dim = j.at("embedding_dim").get<std::int64_t>();
  r.frobenius = j.at("frobenius").get<std::int64_t>();
  r.conductor = j.at("conductor").get<std::int64_t>();
  r.genus = j.at("genus").get<std::int64_t>();
  r.left_count = j.at("left_count").get<std::int64_t>();
  r.large_a2 = j.at("large_a2").get<bool>();
  r.q1 = j.at("q1").get<std::int64_t>();
  r.q2 = j.at("q2").get<std::int64_t>();
  r.q3 = j.at("q3").get<std::int64_t>();
  r.pair_count = j.at("pairs").get<std::int64_t>();
  r.sigma = j.at("sigma").get<std::int64_t>();
  r.floor_theta = j.at("floor_theta").get<std::int64_t>();
  if (!j.at("ell_value").is_null()) {
    r.ell_value = rational_from_string(j.at("ell_value").get<std::string>());
  }
  for (const auto& [id, status] : j.at("checks").items()) {
    r.flags.emplace_back(id, status.get<std::string>());
  }
  r.certificate = j.at("certificate").get<std::string>();
  const std::string ratio = j.at("wilf_ratio").get<std::string>();
  if (ratio != "inf") r.wilf_ratio = rational_from_string(ratio);
  return r;
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline std::string csv_header() {
  std::string h =
      "generators,multiplicity,embedding_dim,frobenius,conductor,genus,"
      "left_count,large_a2,q1,q2,q3,pairs,sigma,floor_theta,ell_value";
  for (const std::string& id : record_flag_ids()) h += "," + id;
  h += ",certificate,wilf_ratio";
  return h;
}

inline std::string joined_generators(const std::vector<std::int64_t>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ";";
    out += std::to_string(gens[i]);
  }
  return out;
}

inline std::string to_csv_row(const ReportRecord& r) {
  std::string row = joined_generators(r.generators);
  row += "," + std::to_string(r.multiplicity);
  row += "," + std::to_string(r.embedding_dim);
  row += "," + std::to_string(r.frobenius);
  row += "," + std::to_string(r.conductor);
  row += "," + std::to_string(r.genus);
  row += "," + std::to_string(r.left_count);
  row += r.large_a2 ? ",1" : ",0";
  row += "," + std::to_string(r.q1);
  row += "," + std::to_string(r.q2);
  row += "," + std::to_string(r.q3);
  row += "," + std::to_string(r.pair_count);
  row += "," + std::to_string(r.sigma);
  row += "," + std::to_string(r.floor_theta);
  row += "," + (r.ell_value ? r.ell_value->str() : std::string("-"));
  for (const auto& [id, status] : r.flags) row += "," + status;
  row += "," + r.certificate;
  row += "," + (r.wilf_ratio ? r.wilf_ratio->str() : std::string("inf"));
  return row;
}

inline void write_records_csv(std::ostream& out,
                              const std::vector<ReportRecord>& records) {
  out << csv_header() << "\n";
  for (const ReportRecord& r : records) out << to_csv_row(r) << "\n";
}

inline void write_records_json(std::ostream& out,
                               const std::vector<ReportRecord>& records) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const ReportRecord& r : records) array.push_back(to_json(r));
  out << array.dump(2) << "\n";
}

// Region export: every lattice point of the (q1, q2) grid with its
// membership flag, then exact rational samples of the bounding hyperbola
// (inside column set to "boundary").
inline void write_region_csv(std::ostream& out, std::int64_t mu,
                             std::int64_t nu) {
  out << "q1,q2,inside\n";
  for (std::int64_t x = 0; x <= nu - 1; ++x) {
    for (std::int64_t y = 0; y <= nu - 1; ++y) {
      const bool inside = omega_contains(mu, nu, Rational(x), Rational(y));
      out << x << "," << y << "," << (inside ? 1 : 0) << "\n";
    }
  }
  for (std::int64_t x = 1; x <= nu - 1; ++x) {
    out << x << "," << omega_hyperbola_y(mu, nu, x).str() << ",boundary\n";
  }
}

}  // namespace wilf
