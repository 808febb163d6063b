#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wilf/rational.hpp"

namespace wilf {

enum class Relation { GE, LE, EQ };
enum class CheckStatus { Holds, Fails, Skipped };

inline std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::GE: return ">=";
    case Relation::LE: return "<=";
    case Relation::EQ: return "==";
  }
  return "?";
}

// One verified inequality. lhs and rhs are the exact sides of the cleared
// comparison that was actually evaluated; `status` records the outcome, or
// Skipped when the proposition's hypotheses were not met.
struct LedgerEntry {
  std::string id;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::GE;
  CheckStatus status = CheckStatus::Skipped;
  std::string note;

  bool holds() const { return status == CheckStatus::Holds; }
  bool skipped() const { return status == CheckStatus::Skipped; }

  static LedgerEntry compare(std::string id, const Rational& lhs, Relation rel,
                             const Rational& rhs, std::string note = {}) {
    bool ok = false;
    switch (rel) {
      case Relation::GE: ok = lhs >= rhs; break;
      case Relation::LE: ok = lhs <= rhs; break;
      case Relation::EQ: ok = lhs == rhs; break;
    }
    return LedgerEntry{std::move(id), lhs, rhs, rel,
                       ok ? CheckStatus::Holds : CheckStatus::Fails,
                       std::move(note)};
  }

  static LedgerEntry skip(std::string id, std::string note) {
    return LedgerEntry{std::move(id), Rational(0), Rational(0), Relation::GE,
                       CheckStatus::Skipped, std::move(note)};
  }
};

enum class CertificateKind {
  DirectCount,
  EliahouSmallC,
  MaxEmbeddingDim,
  EllBound,
  WeakEll,
  None,
};

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  int ell_case = -1;                 // set for EllBound
  std::optional<Rational> lambda;    // set for WeakEll

  std::string tag() const {
    switch (kind) {
      case CertificateKind::DirectCount: return "DirectCount";
      case CertificateKind::EliahouSmallC: return "EliahouSmallC";
      case CertificateKind::MaxEmbeddingDim: return "MaxEmbeddingDim";
      case CertificateKind::EllBound:
        return "EllBound(" + std::to_string(ell_case) + ")";
      case CertificateKind::WeakEll:
        return "WeakEll(" + (lambda ? lambda->str() : std::string("?")) + ")";
      case CertificateKind::None: return "None";
    }
    return "None";
  }
};

struct BoundLedger {
  std::vector<LedgerEntry> entries;
  Certificate certificate;

  const LedgerEntry* find(std::string_view id) const {
    for (const auto& e : entries) {
      if (e.id == id) return &e;
    }
    return nullptr;
  }

  bool all_hold_or_skipped() const {
    for (const auto& e : entries) {
      if (e.status == CheckStatus::Fails) return false;
    }
    return true;
  }
};

}  // namespace wilf
