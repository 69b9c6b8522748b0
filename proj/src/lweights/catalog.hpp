#pragma once

#include <string>
#include <vector>

#include "lweights/lweights.hpp"

namespace qloop::lweights {

/// Closed-form l-weights. Each entry produces the printed formula; entries
/// listed in the typo ledger also carry the formula the computation gives,
/// and checks compare against that one.
struct CatalogEntry {
  std::string id;
  std::string description;
  /// Number of basis-index components the entry expects (1 for gl2 and a
  /// single oscillator, 3 for gl3, 2 for an oscillator pair).
  std::size_t index_size = 0;
  bool has_minus = false;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);

/// Which form of an entry: as printed, or as computed (they differ only for
/// typo-ledger entries).
enum class FormKind { Printed, Computed };

/// Psi_i^{+-} per node as factored rational functions. UsageError on an
/// unknown id or a wrong index size.
struct ClosedForm {
  std::vector<FactoredRational> plus;
  std::vector<FactoredRational> minus;
  LWeight as_lweight() const;
};

ClosedForm closed_form(const std::string& id, const BasisIndex& m,
                       const coeff::LambdaSpec& lambda = coeff::LambdaSpec::symbolic_markers(),
                       FormKind kind = FormKind::Computed);

/// Rules relating l-weights of twisted representations.
/// tau twist of sl3 evaluation modules and bar of sl3 oscillators:
/// Psi_i^+(u) -> Psi_{3-i}^+(-u), Psi_i^-(u^{-1}) -> Psi_{3-i}^-(-u^{-1}).
ClosedForm swap_nodes_negate(const ClosedForm& f);
/// Spectral twist: u -> s u in every component (u^{-1} -> s^{-1} u^{-1}).
LWeight spectral_substitute(const LWeight& w, const Field& s);
RationalForm scale_argument(const RationalForm& r, const Field& s);

/// Highest l-weight of theta1 x theta2 x theta3 (sl3) twisted by the spectral
/// parameters zeta1, zeta2, zeta3 (the field variables stand for zeta_i^s).
ClosedForm triple_tensor_highest();
/// Highest l-weight of the sl3 evaluation Verma module twisted by zeta (the
/// variable stands for zeta^s) and shifted by q^{xi_i} at node i.
ClosedForm shifted_evaluation_highest(const coeff::LambdaSpec& lambda, const std::vector<coeff::QExponent>& xi);
/// zeta1 = q^{2(lambda1+1)} zeta, zeta2 = q^{2 lambda2} zeta, zeta3 = q^{2(lambda3-1)} zeta
/// (symbolic lambda).
Field substitute_spectral(const Field& f);
FactoredRational substitute_spectral(const FactoredRational& f);

/// Typo ledger: formulas whose printed form differs from the computed one.
struct TypoEntry {
  std::string id;
  std::string location;
  std::string printed;
  std::string computed;
  /// Catalog entry whose printed and computed forms differ, or empty when the
  /// entry concerns an intermediate display or a label.
  std::string catalog_id;
  /// Catalog id or command the entry is reported with (empty: ledger only).
  std::string concerns;
};

const std::vector<TypoEntry>& typo_ledger();

}  // namespace qloop::lweights
