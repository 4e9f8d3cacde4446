#pragma once

// Level vectors: a commutative model of the root-group filtration. A group
// generated by the subgroups U_{alpha, r(alpha)} is recorded as the map
// alpha -> r(alpha), with +infinity (std::nullopt) for "no factor". Under
// the Iwahori decomposition this determines the group, so:
//   * containment of groups is the pointwise reversed order on levels
//     (deeper filtration = smaller group);
//   * conjugation by a translation t shifts r(alpha) by -<nu(t), alpha>;
//   * conjugation by w in W transports the level at alpha to w(alpha);
//   * the index of a nested pair is q^(sum of level differences), tracked
//     here as the exponent with q symbolic.

#include <parahoric/alcove.hpp>
#include <parahoric/errors.hpp>
#include <parahoric/parabolic.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/weyl.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace parahoric {

using Level = std::optional<long long>;  // nullopt = +infinity

class LevelVector {
 public:
  explicit LevelVector(int root_count) : lv_(static_cast<std::size_t>(root_count)) {}

  Level& at(int root) { return lv_.at(static_cast<std::size_t>(root)); }
  const Level& at(int root) const { return lv_.at(static_cast<std::size_t>(root)); }
  int root_count() const { return static_cast<int>(lv_.size()); }

  // Root indices with a finite level, ascending.
  std::vector<int> support() const {
    std::vector<int> out;
    for (int r = 0; r < root_count(); ++r)
      if (lv_[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
  }

  bool operator==(const LevelVector&) const = default;

  // Levels read off a region: r(alpha) = ceil(f_Omega(alpha)) on the given
  // support (all roots when omitted).
  static LevelVector from_polyhedron(const RootSystem& rs, const VPolyhedron& p,
                                     const std::vector<int>& support) {
    LevelVector lv(rs.root_count());
    for (int r : support) lv.at(r) = integral_level(rs, p, r);
    return lv;
  }
  static LevelVector from_polyhedron(const RootSystem& rs, const VPolyhedron& p) {
    std::vector<int> all(static_cast<std::size_t>(rs.root_count()));
    for (int r = 0; r < rs.root_count(); ++r) all[static_cast<std::size_t>(r)] = r;
    return from_polyhedron(rs, p, all);
  }

 private:
  std::vector<Level> lv_;
};

// group(inner) <= group(outer) iff inner's level at every root is at least
// outer's, with +infinity above everything.
inline bool level_contains(const LevelVector& outer, const LevelVector& inner) {
  for (int r = 0; r < outer.root_count(); ++r) {
    const Level& o = outer.at(r);
    const Level& i = inner.at(r);
    if (!o) continue;          // outer has no constraint here
    if (!i) continue;          // inner factor trivial, contained regardless
    if (*i < *o) return false;
  }
  // A finite inner factor where outer is infinite escapes the outer group.
  for (int r = 0; r < outer.root_count(); ++r)
    if (!outer.at(r) && inner.at(r)) return false;
  return true;
}

// Exponent e with [outer : inner] = q^e for a nested pair of equal support.
// Throws NotNested when inner is not contained or the index is infinite.
inline long long index_exponent(const LevelVector& inner, const LevelVector& outer) {
  if (!level_contains(outer, inner)) throw NotNested("level vectors are not nested");
  long long e = 0;
  for (int r = 0; r < outer.root_count(); ++r) {
    const Level& o = outer.at(r);
    const Level& i = inner.at(r);
    if (!o) continue;  // containment already rules out a finite inner level here
    if (!i) throw NotNested("relative index is infinite at a root");
    e += *i - *o;
  }
  return e;
}

// t U_{alpha,r} t^{-1} = U_{alpha, r - <nu(t), alpha>}; nu(t) must be in the
// coweight lattice (adjoint form: integral fundamental coordinates).
inline LevelVector conjugate_by_translation(const RootSystem& rs, const LevelVector& lv,
                                            const Coweight& lambda) {
  if (!lambda.integral()) throw NonIntegralCoweight("translation coweight must be integral");
  LevelVector out(lv.root_count());
  for (int r = 0; r < lv.root_count(); ++r) {
    if (!lv.at(r)) continue;
    Rat shift = pairing(lambda, rs.root_at(r));
    out.at(r) = *lv.at(r) - shift.numerator();
  }
  return out;
}

// w U_{alpha,r} w^{-1} = U_{w(alpha), r}.
inline LevelVector conjugate_by_weyl(const RootSystem& rs, const LevelVector& lv, const WeylElement& w) {
  LevelVector out(lv.root_count());
  for (int r = 0; r < lv.root_count(); ++r)
    if (lv.at(r)) out.at(apply_to_root(rs, w, r)) = lv.at(r);
  return out;
}

// The pointwise fixator of the fundamental chamber: level 0 on positive
// roots, level 1 on negative roots. Equals from_polyhedron(chamber).
inline LevelVector chamber_levels(const RootSystem& rs) {
  LevelVector lv(rs.root_count());
  for (int r = 0; r < rs.root_count(); ++r) lv.at(r) = rs.is_positive(r) ? 0 : 1;
  return lv;
}

// B cap U_I^-: the chamber fixator cut down to the unipotent group opposite
// the standard parabolic of I; level 1 on Psi_I^-, trivial elsewhere.
inline LevelVector opposite_unipotent_levels(const RootSystem& rs, SubsetI I) {
  LevelVector lv(rs.root_count());
  for (int r : subsystem(rs, I).psi_minus) lv.at(r) = 1;
  return lv;
}

// --- mechanical checks -----------------------------------------------------

struct TranslationContainmentWitness {
  Coweight lambda;
  int root;
};

// Dominant translations contract B cap U_I^-: for every 0/1 vector lambda of
// fundamental coweights, conjugation never lowers a level on Psi_I^-.
// Conjugation is additive in lambda, so 0/1 vectors witness all of T^{++}.
inline std::optional<TranslationContainmentWitness> translation_containment_counterexample(
    const RootSystem& rs, SubsetI I) {
  if (rs.rank() > 20) throw RankTooLarge("translation sweep refused for rank > 20");
  LevelVector base = opposite_unipotent_levels(rs, I);
  const std::uint64_t end = std::uint64_t{1} << rs.rank();
  for (std::uint64_t m = 0; m < end; ++m) {
    Coweight lambda = Coweight::zero(rs.rank());
    for (int j = 0; j < rs.rank(); ++j)
      if ((m >> j) & 1u) lambda.coords[static_cast<std::size_t>(j)] = Rat(1);
    LevelVector conj = conjugate_by_translation(rs, base, lambda);
    if (!level_contains(base, conj)) {
      for (int r = 0; r < rs.root_count(); ++r)
        if (base.at(r) && conj.at(r) && *conj.at(r) < *base.at(r))
          return TranslationContainmentWitness{lambda, r};
      return TranslationContainmentWitness{lambda, -1};
    }
  }
  return std::nullopt;
}

struct WeylContainmentWitness {
  WeylElement w;
  int root;
};

// Every Weyl conjugate of B cap U^- stays inside the chamber fixator.
inline std::optional<WeylContainmentWitness> weyl_containment_counterexample(
    const RootSystem& rs, std::size_t cap = kDefaultEnumerationCap) {
  LevelVector outer = chamber_levels(rs);
  LevelVector base = opposite_unipotent_levels(rs, SubsetI{});
  for (const WeylElement& w : enumerate_weyl(rs, SubsetI::full(rs.rank()), cap)) {
    LevelVector conj = conjugate_by_weyl(rs, base, w);
    if (!level_contains(outer, conj)) {
      for (int r = 0; r < rs.root_count(); ++r) {
        bool bad = (conj.at(r) && !outer.at(r)) ||
                   (conj.at(r) && outer.at(r) && *conj.at(r) < *outer.at(r));
        if (bad) return WeylContainmentWitness{w, r};
      }
      return WeylContainmentWitness{w, -1};
    }
  }
  return std::nullopt;
}

// W_I conjugation permutes the factors of B cap U_I^-: the level vector is
// fixed as a whole.
inline std::optional<WeylContainmentWitness> levi_stability_counterexample(
    const RootSystem& rs, SubsetI I, std::size_t cap = kDefaultEnumerationCap) {
  LevelVector base = opposite_unipotent_levels(rs, I);
  for (const WeylElement& w : enumerate_weyl(rs, I, cap)) {
    LevelVector conj = conjugate_by_weyl(rs, base, w);
    if (!(conj == base)) {
      for (int r = 0; r < rs.root_count(); ++r)
        if (conj.at(r) != base.at(r)) return WeylContainmentWitness{w, r};
      return WeylContainmentWitness{w, -1};
    }
  }
  return std::nullopt;
}

struct NeighborhoodEstimate {
  std::optional<long long> min_pairing;  // min over Psi_I^- of <nu(t_I), -alpha>
  bool ok = true;                        // min >= 1 (vacuous when Psi_I^- is empty)
};

// Conjugating B cap U_I^- by t_I^n raises every level by at least n, because
// <nu(t_I), -alpha> >= 1 on Psi_I^-: each such alpha has a coefficient off I.
inline NeighborhoodEstimate neighborhood_estimate(const RootSystem& rs, SubsetI I) {
  NeighborhoodEstimate est;
  Coweight tI = t_I_coweight(rs, I);
  for (int r : subsystem(rs, I).psi_minus) {
    Rat v = -pairing(tI, rs.root_at(r));
    long long n = v.numerator();  // pairing of integral coweight with a root
    if (!est.min_pairing || n < *est.min_pairing) est.min_pairing = n;
  }
  est.ok = !est.min_pairing || *est.min_pairing >= 1;
  return est;
}

}  // namespace parahoric
