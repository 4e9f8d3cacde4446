#pragma once

// Standard parabolic data attached to a subset I of the simple roots:
// the sub-system Phi_I of roots supported on I, its complement Psi_I, the
// admissibility test (every positive root of Phi_I has all coefficients
// <= 1), and the stability of Psi_I^- under W_I.

#include <parahoric/root_system.hpp>
#include <parahoric/subset.hpp>
#include <parahoric/weyl.hpp>

#include <algorithm>
#include <optional>
#include <vector>

namespace parahoric {

struct ParabolicData {
  SubsetI I;
  std::vector<int> phi_I;      // roots supported on I, ascending
  std::vector<int> phi_I_pos;  // the positive ones among them
  std::vector<int> psi_plus;   // positive roots with support off I
  std::vector<int> psi_minus;  // their negatives
};

inline bool root_supported_on(const RootSystem& rs, int root_idx, SubsetI I) {
  const Root& r = rs.root_at(root_idx);
  for (int j = 0; j < rs.rank(); ++j)
    if (r.coeffs[static_cast<std::size_t>(j)] != 0 && !I.contains(j)) return false;
  return true;
}

inline ParabolicData subsystem(const RootSystem& rs, SubsetI I) {
  ParabolicData d;
  d.I = I;
  for (int r = 0; r < rs.root_count(); ++r) {
    bool on_I = root_supported_on(rs, r, I);
    if (on_I) {
      d.phi_I.push_back(r);
      if (rs.is_positive(r)) d.phi_I_pos.push_back(r);
    } else if (rs.is_positive(r)) {
      d.psi_plus.push_back(r);
    } else {
      d.psi_minus.push_back(r);
    }
  }
  return d;
}

// I is admissible when no positive root supported on I has a coefficient
// >= 2; equivalently, every connected component of I is of type A.
inline bool is_admissible(const RootSystem& rs, SubsetI I) {
  for (int r = 0; r < rs.root_count(); ++r) {
    if (!rs.is_positive(r) || !root_supported_on(rs, r, I)) continue;
    for (int c : rs.root_at(r).coeffs)
      if (c >= 2) return false;
  }
  return true;
}

// The violating positive root that is last in canonical (height, lex) order,
// i.e. the highest witness; empty when I is admissible.
inline std::optional<int> admissibility_witness(const RootSystem& rs, SubsetI I) {
  std::optional<int> witness;
  for (int r = 0; r < rs.root_count(); ++r) {
    if (!rs.is_positive(r) || !root_supported_on(rs, r, I)) continue;
    for (int c : rs.root_at(r).coeffs)
      if (c >= 2) {
        witness = r;
        break;
      }
  }
  return witness;
}

// All admissible subsets, in lexicographic order on index sequences.
inline std::vector<SubsetI> admissible_subsets(const RootSystem& rs) {
  std::vector<SubsetI> out;
  for (SubsetI I : all_subsets_lex(rs.rank()))
    if (is_admissible(rs, I)) out.push_back(I);
  return out;
}

struct PsiStabilityWitness {
  WeylElement w;
  int root;   // element of Psi_I^-
  int image;  // w(root), outside Psi_I^-
};

// Searches for w in W_I and alpha in Psi_I^- with w(alpha) not in Psi_I^-.
// The underlying statement is a theorem, so a non-empty return means the
// tables are corrupt; the function exists as a mechanical check.
inline std::optional<PsiStabilityWitness> psi_stability_counterexample(
    const RootSystem& rs, SubsetI I, std::size_t cap = kDefaultEnumerationCap) {
  ParabolicData d = subsystem(rs, I);
  std::vector<char> in_psi_minus(static_cast<std::size_t>(rs.root_count()), 0);
  for (int r : d.psi_minus) in_psi_minus[static_cast<std::size_t>(r)] = 1;
  for (const WeylElement& w : enumerate_weyl(rs, I, cap)) {
    for (int r : d.psi_minus) {
      int img = apply_to_root(rs, w, r);
      if (!in_psi_minus[static_cast<std::size_t>(img)]) return PsiStabilityWitness{w, r, img};
    }
  }
  return std::nullopt;
}

inline bool check_psi_stability(const RootSystem& rs, SubsetI I,
                                std::size_t cap = kDefaultEnumerationCap) {
  return !psi_stability_counterexample(rs, I, cap).has_value();
}

}  // namespace parahoric
