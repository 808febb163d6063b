#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wilf/bounds.hpp"
#include "wilf/report.hpp"
#include "wilf/semigroup.hpp"

namespace wilf {

// The tree enumerator supports genus up to this bound; every element that
// matters (largest minimal generator < c + m <= 3*genus + 2) fits in the
// fixed node bitmap.
inline constexpr std::int64_t kMaxTreeGenus = 100;

namespace detail {
inline constexpr std::size_t kNodeWords = 5;  // 320 bits of membership
inline constexpr std::int64_t kNodeBits =
    static_cast<std::int64_t>(kNodeWords * 64);
}  // namespace detail

// Lightweight tree node: membership bitmap plus the invariants needed to
// expand children. Converted to a full Semigroup lazily, when a check needs
// one.
class TreeSemigroup {
 public:
  static TreeSemigroup naturals() {
    TreeSemigroup s;
    s.words_.fill(~std::uint64_t{0});
    s.mult_ = 1;
    s.frob_ = -1;
    s.genus_ = 0;
    s.gens_ = {1};
    return s;
  }

  std::int64_t multiplicity() const { return mult_; }
  std::int64_t frobenius() const { return frob_; }
  std::int64_t conductor() const { return frob_ + 1; }
  std::int64_t genus() const { return genus_; }
  const std::vector<std::int64_t>& min_generators() const { return gens_; }

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= detail::kNodeBits) return true;
    return bit(x);
  }

  // Child rule of the genus tree: drop one minimal generator strictly
  // greater than the Frobenius number. Each semigroup is reached exactly
  // once this way.
  TreeSemigroup child_without(std::int64_t gen) const {
    TreeSemigroup child = *this;
    child.clear_bit(gen);
    child.frob_ = gen;
    child.genus_ = genus_ + 1;
    if (gen == mult_) {
      std::int64_t m = mult_ + 1;
      while (!child.bit(m)) ++m;
      child.mult_ = m;
    }
    child.recompute_generators();
    return child;
  }

 private:
  bool bit(std::int64_t i) const {
    return (words_[static_cast<std::size_t>(i >> 6)] >>
            (static_cast<std::uint64_t>(i) & 63u)) &
           1u;
  }
  void clear_bit(std::int64_t i) {
    words_[static_cast<std::size_t>(i >> 6)] &=
        ~(std::uint64_t{1} << (static_cast<std::uint64_t>(i) & 63u));
  }

  void recompute_generators() {
    gens_.clear();
    const std::int64_t limit = conductor() + mult_;
    for (std::int64_t x = mult_; x < limit; ++x) {
      if (!bit(x)) continue;
      bool minimal = true;
      for (std::int64_t u = mult_; 2 * u <= x; ++u) {
        if (bit(u) && bit(x - u)) {
          minimal = false;
          break;
        }
      }
      if (minimal) gens_.push_back(x);
    }
  }

  std::array<std::uint64_t, detail::kNodeWords> words_{};
  std::int64_t mult_ = 1;
  std::int64_t frob_ = -1;
  std::int64_t genus_ = 0;
  std::vector<std::int64_t> gens_;
};

using TreeVisitor = std::function<void(const TreeSemigroup&)>;

// Depth-first walk of the subtree below `root`, children in increasing
// generator order; visits every descendant of genus <= max_genus (root
// included) exactly once.
inline void enumerate_subtree(const TreeSemigroup& root,
                              std::int64_t max_genus,
                              const TreeVisitor& visit) {
  visit(root);
  if (root.genus() >= max_genus) return;
  for (std::int64_t g : root.min_generators()) {
    if (g > root.frobenius()) {
      enumerate_subtree(root.child_without(g), max_genus, visit);
    }
  }
}

inline void enumerate_by_genus(std::int64_t max_genus,
                               const TreeVisitor& visit) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be >= 0");
  if (max_genus > kMaxTreeGenus) {
    throw std::invalid_argument("max_genus exceeds enumerator capacity");
  }
  enumerate_subtree(TreeSemigroup::naturals(), max_genus, visit);
}

// Independent test oracle: enumerates downward-closed gap sets directly by
// deciding membership of 1, 2, ..., 2*max_genus in order. A value that is a
// sum of two smaller members is forced into the set (closure); otherwise
// both branches are explored while the gap budget lasts. Exponential in
// spirit, therefore capped; used only to cross-check the tree enumerator.
inline std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>
oracle_enumerate_gapsets(std::int64_t max_genus) {
  if (max_genus < 0) throw std::invalid_argument("max_genus must be >= 0");
  if (max_genus > 15) {
    throw std::invalid_argument("gap-set oracle limited to genus 15");
  }
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> out;
  const std::int64_t decide_limit = 2 * max_genus;    // F <= 2g - 1
  const std::int64_t bound = 3 * max_genus + 2;       // generators < c + m
  std::vector<char> member(static_cast<std::size_t>(bound) + 1, 1);

  std::function<void(std::int64_t, std::int64_t)> decide =
      [&](std::int64_t n, std::int64_t gaps) {
        if (n > decide_limit) {
          std::int64_t mult = 1;
          while (!member[static_cast<std::size_t>(mult)]) ++mult;
          std::int64_t frob = -1;
          for (std::int64_t x = 1; x <= decide_limit; ++x) {
            if (!member[static_cast<std::size_t>(x)]) frob = x;
          }
          std::vector<std::int64_t> gens;
          for (std::int64_t x = mult; x < frob + 1 + mult; ++x) {
            if (!member[static_cast<std::size_t>(x)]) continue;
            bool minimal = true;
            for (std::int64_t u = mult; 2 * u <= x; ++u) {
              if (member[static_cast<std::size_t>(u)] &&
                  member[static_cast<std::size_t>(x - u)]) {
                minimal = false;
                break;
              }
            }
            if (minimal) gens.push_back(x);
          }
          if (gens.empty()) gens.push_back(1);  // S = N
          out.emplace_back(gaps, std::move(gens));
          return;
        }
        bool forced = false;
        for (std::int64_t u = 1; 2 * u <= n; ++u) {
          if (member[static_cast<std::size_t>(u)] &&
              member[static_cast<std::size_t>(n - u)]) {
            forced = true;
            break;
          }
        }
        member[static_cast<std::size_t>(n)] = 1;
        decide(n + 1, gaps);
        if (!forced && gaps < max_genus) {
          member[static_cast<std::size_t>(n)] = 0;
          decide(n + 1, gaps + 1);
          member[static_cast<std::size_t>(n)] = 1;
        }
      };
  decide(1, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

enum class SweepFilter { All, LargeA2 };

inline const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> kNames = {
      "wilf",          "coverage",          "mu-bounds",
      "lcount-basic",  "lcount-pairs",      "matching-bound",
      "matching-mu-bound", "ell",           "divisible-conductor",
      "conductor-threshold",               "weak-wilf",
  };
  return kNames;
}

// Expands a check name to the ledger entry ids it covers.
inline std::vector<std::string> check_entry_ids(const std::string& check) {
  if (check == "mu-bounds") return {"mu_bound_a", "mu_bound_b", "q1_bound"};
  if (check == "ell") return {"ell_chain", "ell_certificate"};
  const auto& names = all_check_names();
  if (std::find(names.begin(), names.end(), check) == names.end()) {
    throw std::invalid_argument("unknown check: " + check);
  }
  std::string id = check;
  std::replace(id.begin(), id.end(), '-', '_');
  return {id};
}

struct SweepConfig {
  std::int64_t max_genus = 0;
  SweepFilter filter = SweepFilter::LargeA2;
  // overrides `filter` when set; must be a pure function of its argument
  std::function<bool(const Semigroup&)> custom_filter;
  std::vector<std::string> checks;  // empty means all
  std::int64_t worker_count = 1;
  std::int64_t split_depth = 10;  // subtree roots handed to workers
  bool collect_all_records = false;

  // fuzz mode
  std::uint64_t seed = 0;
  std::int64_t fuzz_count = 0;
  std::int64_t max_multiplicity = 40;
  std::int64_t max_generator = 0;  // 0: derived from the multiplicity window

  // proposition parameters
  Rational chi{1, 6};
  Rational lambda{79, 100};
};

struct CheckStats {
  std::int64_t evaluated = 0;
  std::int64_t holds = 0;
  std::int64_t violations = 0;
  std::int64_t skipped = 0;
};

struct Violation {
  std::int64_t genus = 0;
  std::vector<std::int64_t> generators;
  std::string check_id;
};

struct SweepReport {
  std::vector<std::int64_t> per_genus_counts;
  std::map<std::string, CheckStats> stats;
  std::vector<Violation> violations;
  std::map<std::string, std::int64_t> certificate_histogram;
  std::optional<Rational> min_wilf_ratio;
  std::optional<Rational> min_ell_slack;  // ell chain lhs - rhs
  std::optional<std::int64_t> min_nu_ell_certificate;
  std::optional<std::int64_t> min_nu_weak_wilf;
  std::int64_t visited = 0;
  std::int64_t checked = 0;
  std::vector<ReportRecord> records;

  std::int64_t total_violations() const {
    return static_cast<std::int64_t>(violations.size());
  }
};

namespace detail {

inline void merge_min(std::optional<Rational>& into,
                      const std::optional<Rational>& from) {
  if (!from) return;
  if (!into || *from < *into) into = from;
}

inline void merge_min(std::optional<std::int64_t>& into,
                      const std::optional<std::int64_t>& from) {
  if (!from) return;
  if (!into || *from < *into) into = from;
}

struct SweepContext {
  SweepFilter filter = SweepFilter::All;
  std::function<bool(const Semigroup&)> custom_filter;
  std::vector<std::string> entry_ids;  // requested, expanded, deduplicated
  bool want_divisible_conductor = false;
  bool want_conductor_threshold = false;
  bool want_weak_wilf = false;
  bool collect_all_records = false;
  Rational chi{1, 6};
  Rational lambda{79, 100};

  bool requested(const std::string& id) const {
    return std::find(entry_ids.begin(), entry_ids.end(), id) !=
           entry_ids.end();
  }
};

inline SweepContext make_context(const SweepConfig& config) {
  SweepContext ctx;
  ctx.filter = config.filter;
  ctx.custom_filter = config.custom_filter;
  const std::vector<std::string>& checks =
      config.checks.empty() ? all_check_names() : config.checks;
  for (const std::string& check : checks) {
    for (std::string& id : check_entry_ids(check)) {
      if (!ctx.requested(id)) ctx.entry_ids.push_back(std::move(id));
    }
    if (check == "divisible-conductor") ctx.want_divisible_conductor = true;
    if (check == "conductor-threshold") ctx.want_conductor_threshold = true;
    if (check == "weak-wilf") ctx.want_weak_wilf = true;
  }
  ctx.collect_all_records = config.collect_all_records;
  ctx.chi = config.chi;
  ctx.lambda = config.lambda;
  return ctx;
}

inline void process_semigroup(const Semigroup& s, const SweepContext& ctx,
                              SweepReport& partial) {
  if (ctx.custom_filter && !ctx.custom_filter(s)) return;
  Analysis analysis = analyze_semigroup(s);
  if (!ctx.custom_filter && ctx.filter == SweepFilter::LargeA2 &&
      !analysis.partition.large_a2) {
    return;
  }
  ++partial.checked;

  std::vector<LedgerEntry> extras;
  if (ctx.want_divisible_conductor) {
    extras.push_back(divisible_conductor_check(s, analysis.partition));
  }
  if (ctx.want_conductor_threshold) {
    extras.push_back(conductor_threshold_check(s, analysis.partition, ctx.chi));
  }
  std::optional<WeakWilfCheck> weak;
  if (ctx.want_weak_wilf) {
    weak = weak_wilf_check(s, ctx.lambda);
    extras.push_back(weak->entry);
  }

  bool violated = false;
  auto tally = [&](const LedgerEntry& e) {
    if (!ctx.requested(e.id)) return;
    CheckStats& st = partial.stats[e.id];
    ++st.evaluated;
    switch (e.status) {
      case CheckStatus::Holds: ++st.holds; break;
      case CheckStatus::Skipped: ++st.skipped; break;
      case CheckStatus::Fails:
        ++st.violations;
        partial.violations.push_back(
            Violation{s.genus, s.min_generators, e.id});
        violated = true;
        break;
    }
  };
  for (const LedgerEntry& e : analysis.ledger.entries) tally(e);
  for (const LedgerEntry& e : extras) tally(e);

  const WilfCheck wc = wilf_check(s);
  if (wc.ratio) {
    std::optional<Rational> r = wc.ratio;
    merge_min(partial.min_wilf_ratio, r);
  }
  if (const LedgerEntry* chain = analysis.ledger.find("ell_chain");
      chain != nullptr && !chain->skipped()) {
    std::optional<Rational> slack = chain->lhs - chain->rhs;
    merge_min(partial.min_ell_slack, slack);
  }
  ++partial.certificate_histogram[analysis.ledger.certificate.tag()];
  if (analysis.ledger.certificate.kind == CertificateKind::EllBound) {
    std::optional<std::int64_t> nu = s.embedding_dim;
    merge_min(partial.min_nu_ell_certificate, nu);
  }
  if (weak && weak->entry.holds()) {
    std::optional<std::int64_t> nu = s.embedding_dim;
    merge_min(partial.min_nu_weak_wilf, nu);
  }

  if (violated || ctx.collect_all_records) {
    partial.records.push_back(make_record(s, analysis, extras));
  }
}

inline void process_tree_node(const TreeSemigroup& node,
                              const SweepContext& ctx, SweepReport& partial) {
  if (static_cast<std::size_t>(node.genus()) >=
      partial.per_genus_counts.size()) {
    partial.per_genus_counts.resize(
        static_cast<std::size_t>(node.genus()) + 1, 0);
  }
  ++partial.per_genus_counts[static_cast<std::size_t>(node.genus())];
  ++partial.visited;
  if (!ctx.custom_filter && ctx.filter == SweepFilter::LargeA2) {
    // cheap pre-filter: the hypothesis only needs a2, c and m
    const auto& gens = node.min_generators();
    if (gens.size() < 2 ||
        3 * gens[1] <= node.conductor() + node.multiplicity()) {
      return;
    }
  }
  process_semigroup(build_semigroup(node.min_generators()), ctx, partial);
}

inline void merge_into(SweepReport& total, SweepReport&& part) {
  if (part.per_genus_counts.size() > total.per_genus_counts.size()) {
    total.per_genus_counts.resize(part.per_genus_counts.size(), 0);
  }
  for (std::size_t g = 0; g < part.per_genus_counts.size(); ++g) {
    total.per_genus_counts[g] += part.per_genus_counts[g];
  }
  for (const auto& [id, st] : part.stats) {
    CheckStats& dst = total.stats[id];
    dst.evaluated += st.evaluated;
    dst.holds += st.holds;
    dst.violations += st.violations;
    dst.skipped += st.skipped;
  }
  total.violations.insert(total.violations.end(),
                          std::make_move_iterator(part.violations.begin()),
                          std::make_move_iterator(part.violations.end()));
  for (const auto& [tag, n] : part.certificate_histogram) {
    total.certificate_histogram[tag] += n;
  }
  merge_min(total.min_wilf_ratio, part.min_wilf_ratio);
  merge_min(total.min_ell_slack, part.min_ell_slack);
  merge_min(total.min_nu_ell_certificate, part.min_nu_ell_certificate);
  merge_min(total.min_nu_weak_wilf, part.min_nu_weak_wilf);
  total.visited += part.visited;
  total.checked += part.checked;
  total.records.insert(total.records.end(),
                       std::make_move_iterator(part.records.begin()),
                       std::make_move_iterator(part.records.end()));
}

// Canonical order, independent of visitation and worker partitioning.
inline void finalize(SweepReport& report) {
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.genus, a.generators, a.check_id) <
                     std::tie(b.genus, b.generators, b.check_id);
            });
  std::sort(report.records.begin(), report.records.end(),
            [](const ReportRecord& a, const ReportRecord& b) {
              return std::tie(a.genus, a.generators) <
                     std::tie(b.genus, b.generators);
            });
  for (const std::string& tag :
       {std::string("DirectCount"), std::string("EliahouSmallC"),
        std::string("MaxEmbeddingDim"), std::string("None")}) {
    (void)report.certificate_histogram[tag];  // stable set of keys
  }
}

}  // namespace detail

// Exhaustive sweep over the genus tree. Subtrees rooted at `split_depth`
// are distributed to workers; the merged report is a deterministic function
// of the config alone, independent of worker_count.
inline SweepReport sweep(const SweepConfig& config) {
  if (config.max_genus < 0 || config.max_genus > kMaxTreeGenus) {
    throw std::invalid_argument("max_genus out of range");
  }
  if (config.worker_count < 1) {
    throw std::invalid_argument("worker_count must be >= 1");
  }
  const detail::SweepContext ctx = detail::make_context(config);

  SweepReport total;
  total.per_genus_counts.assign(
      static_cast<std::size_t>(config.max_genus) + 1, 0);

  const std::int64_t split = std::min(config.split_depth, config.max_genus);
  if (config.worker_count == 1 || split <= 0 ||
      split >= config.max_genus) {
    enumerate_by_genus(config.max_genus, [&](const TreeSemigroup& node) {
      detail::process_tree_node(node, ctx, total);
    });
    detail::finalize(total);
    return total;
  }

  // serial shallow pass, collecting subtree roots at the split depth
  std::vector<TreeSemigroup> tasks;
  std::function<void(const TreeSemigroup&)> shallow =
      [&](const TreeSemigroup& node) {
        if (node.genus() == split) {
          tasks.push_back(node);
          return;
        }
        detail::process_tree_node(node, ctx, total);
        for (std::int64_t g : node.min_generators()) {
          if (g > node.frobenius()) shallow(node.child_without(g));
        }
      };
  shallow(TreeSemigroup::naturals());

  std::vector<SweepReport> partials(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        enumerate_subtree(tasks[i], config.max_genus,
                          [&](const TreeSemigroup& node) {
                            detail::process_tree_node(node, ctx, partials[i]);
                          });
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t n_workers = static_cast<std::size_t>(
      std::min<std::int64_t>(config.worker_count,
                             static_cast<std::int64_t>(tasks.size())));
  pool.reserve(n_workers);
  for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (SweepReport& part : partials) {
    detail::merge_into(total, std::move(part));
  }
  detail::finalize(total);
  return total;
}

// ---------------------------------------------------------------------------
// Random generator sets
// ---------------------------------------------------------------------------

// Seeded stream of generator sets biased toward the large-a2 regime:
// multiplicity uniform in [2, max], candidates drawn from a window of a few
// multiplicities, gcd normalized by appending a coprime element when needed.
class GeneratorFuzzer {
 public:
  GeneratorFuzzer(std::uint64_t seed, std::int64_t max_multiplicity,
                  std::int64_t max_generator = 0)
      : rng_(seed),
        max_multiplicity_(max_multiplicity),
        max_generator_(max_generator) {
    if (max_multiplicity_ < 2) {
      throw std::invalid_argument("max multiplicity must be >= 2");
    }
  }

  std::vector<std::int64_t> next() {
    const std::int64_t mult = draw(2, max_multiplicity_);
    std::int64_t hi = mult * draw(2, 6);
    if (max_generator_ > 0) hi = std::min(hi, max_generator_);
    hi = std::max(hi, mult + 1);
    const std::int64_t count = draw(1, std::min<std::int64_t>(16, mult + 1));

    std::vector<std::int64_t> gens{mult};
    for (std::int64_t i = 0; i < count; ++i) {
      gens.push_back(draw(mult + 1, hi));
    }
    std::int64_t g = 0;
    for (std::int64_t v : gens) g = std::gcd(g, v);
    if (g != 1) gens.push_back(mult + 1);  // coprime to mult, forces gcd 1
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
  }

 private:
  std::int64_t draw(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  std::mt19937_64 rng_;
  std::int64_t max_multiplicity_;
  std::int64_t max_generator_;
};

// Same checks and report shape as sweep(), over the fuzz stream.
inline SweepReport fuzz_sweep(const SweepConfig& config) {
  if (config.fuzz_count < 0) {
    throw std::invalid_argument("fuzz count must be >= 0");
  }
  const detail::SweepContext ctx = detail::make_context(config);
  SweepReport total;
  GeneratorFuzzer fuzzer(config.seed, config.max_multiplicity,
                         config.max_generator);
  for (std::int64_t i = 0; i < config.fuzz_count; ++i) {
    const Semigroup s = build_semigroup(fuzzer.next());
    if (static_cast<std::size_t>(s.genus) >= total.per_genus_counts.size()) {
      total.per_genus_counts.resize(static_cast<std::size_t>(s.genus) + 1, 0);
    }
    ++total.per_genus_counts[static_cast<std::size_t>(s.genus)];
    ++total.visited;
    detail::process_semigroup(s, ctx, total);
  }
  detail::finalize(total);
  return total;
}

}  // namespace wilf
