#pragma once

// Exact polyhedral geometry in the apartment A = X_*(T) tensor Q, written in
// fundamental-coweight coordinates. Regions are V-polyhedra (convex hull of
// vertices plus a recession cone); constraint sides are affine root
// half-spaces H(alpha, r) = {x : <x, alpha> + r >= 0}.
//
// For a region Omega, f_Omega(alpha) = -inf_{x in Omega} <x, alpha> is the
// least real level r with Omega inside H(alpha, r); it is +infinity (encoded
// std::nullopt) exactly when some recession ray pairs negatively with alpha.
// The tightest integral half-space has level ceil(f).

#include <parahoric/parabolic.hpp>
#include <parahoric/rational.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/subset.hpp>

#include <cassert>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parahoric {

using Point = Coweight;

struct HalfSpace {
  int root;        // index into rs.roots()
  long long level; // {x : <x, alpha_root> + level >= 0}
  bool operator==(const HalfSpace&) const = default;
};

inline bool half_space_contains(const RootSystem& rs, const HalfSpace& h, const Point& x) {
  return pairing(x, rs.root_at(h.root)) + Rat(h.level) >= Rat(0);
}

// conv(vertices) + cone(rays); vertices must be non-empty.
struct VPolyhedron {
  std::vector<Point> vertices;
  std::vector<Point> rays;
};

inline VPolyhedron translate(const VPolyhedron& p, const Point& x) {
  VPolyhedron out = p;
  for (Point& v : out.vertices) v = v + x;
  return out;
}

// The closed fundamental chamber (fundamental alcove of the affine Weyl
// group): 0 <= <x, alpha_i> for all i and <x, theta_c> <= 1 for the highest
// root theta_c of each component. As a polytope it is the product over
// components of simplices with vertex sets {0} u {omega_j / mark(j)}, so its
// vertices are all sums of one choice per component.
inline VPolyhedron fundamental_chamber(const RootSystem& rs) {
  VPolyhedron p;
  p.vertices.push_back(Point::zero(rs.rank()));
  for (const Component& c : rs.simple_components()) {
    std::vector<Point> next;
    for (const Point& base : p.vertices) {
      next.push_back(base);
      for (int j = 0; j < c.rank; ++j) {
        Point v = base;
        v.coords[static_cast<std::size_t>(c.offset + j)] =
            Rat(1, c.marks[static_cast<std::size_t>(j)]);
        next.push_back(v);
      }
    }
    p.vertices = std::move(next);
  }
  return p;
}

// The conical cell c_I: apex 0, spanned by the fundamental coweights off I.
inline VPolyhedron conical_cell(const RootSystem& rs, SubsetI I) {
  VPolyhedron p;
  p.vertices.push_back(Point::zero(rs.rank()));
  for (int j = 0; j < rs.rank(); ++j)
    if (!I.contains(j)) p.rays.push_back(Point::fundamental(rs.rank(), j));
  return p;
}

// f_Omega(alpha) over a V-polyhedron: +infinity when a ray pairs negatively
// with alpha, otherwise the maximum of -<v, alpha> over the vertices.
inline std::optional<Rat> f_omega(const RootSystem& rs, const VPolyhedron& p, int root_idx) {
  const Root& alpha = rs.root_at(root_idx);
  assert(!p.vertices.empty());
  for (const Point& d : p.rays)
    if (pairing(d, alpha) < Rat(0)) return std::nullopt;
  Rat best = -pairing(p.vertices.front(), alpha);
  for (std::size_t k = 1; k < p.vertices.size(); ++k) {
    Rat v = -pairing(p.vertices[k], alpha);
    if (v > best) best = v;
  }
  return best;
}

// Least integer r with Omega inside H(alpha, r); nullopt when none exists.
inline std::optional<long long> integral_level(const RootSystem& rs, const VPolyhedron& p, int root_idx) {
  std::optional<Rat> f = f_omega(rs, p, root_idx);
  if (!f) return std::nullopt;
  return rat_ceil(*f);
}

// Intersection of the tightest integral affine root half-spaces containing a
// finite union of regions: one entry per root with finite level, keyed by
// root index (hence in canonical root order).
struct ClosureDescription {
  std::map<int, long long> levels;

  bool contains(const RootSystem& rs, const Point& x) const {
    for (const auto& [root, level] : levels)
      if (!half_space_contains(rs, HalfSpace{root, level}, x)) return false;
    return true;
  }

  // conv(V) + cone(R) lies in a half-space iff every vertex does and every
  // ray pairs non-negatively with the root.
  bool contains(const RootSystem& rs, const VPolyhedron& p) const {
    for (const auto& [root, level] : levels) {
      const Root& alpha = rs.root_at(root);
      for (const Point& v : p.vertices)
        if (pairing(v, alpha) + Rat(level) < Rat(0)) return false;
      for (const Point& d : p.rays)
        if (pairing(d, alpha) < Rat(0)) return false;
    }
    return true;
  }
};

inline ClosureDescription convex_closure(const RootSystem& rs, const std::vector<VPolyhedron>& parts) {
  assert(!parts.empty());
  ClosureDescription cd;
  for (int r = 0; r < rs.root_count(); ++r) {
    std::optional<Rat> worst;
    bool infinite = false;
    for (const VPolyhedron& p : parts) {
      std::optional<Rat> f = f_omega(rs, p, r);
      if (!f) {
        infinite = true;
        break;
      }
      if (!worst || *f > *worst) worst = *f;
    }
    if (!infinite && worst) cd.levels[r] = rat_ceil(*worst);
  }
  return cd;
}

// nu(t_I) = sum of the fundamental coweights off I.
inline Coweight t_I_coweight(const RootSystem& rs, SubsetI I) {
  Coweight x = Coweight::zero(rs.rank());
  for (int j = 0; j < rs.rank(); ++j)
    if (!I.contains(j)) x.coords[static_cast<std::size_t>(j)] = Rat(1);
  return x;
}

inline bool is_dominant(const Coweight& x) {
  for (const Rat& c : x.coords)
    if (c < Rat(0)) return false;
  return true;
}

// --- mechanical checks -----------------------------------------------------

// Shape of cl(C u c_I) as half-space data: level 0 on every positive root,
// level 1 on the negatives of Phi_I^+, no constraint on the rest. Also
// audits that each non-simple positive-root half-space is implied by the
// simple ones (certificate: the root's own coefficients, which are >= 0 and
// combine the level-0 simple half-spaces into the claimed one).
struct ClosureLemmaResult {
  bool pass = true;
  std::string detail;  // empty on pass, else a description of the mismatch
};

inline ClosureLemmaResult verify_closure_lemma(const RootSystem& rs, SubsetI I) {
  ClosureLemmaResult res;
  auto fail = [&](std::string msg) {
    res.pass = false;
    if (res.detail.empty()) res.detail = std::move(msg);
  };
  ClosureDescription cd = convex_closure(rs, {fundamental_chamber(rs), conical_cell(rs, I)});
  ParabolicData d = subsystem(rs, I);
  std::vector<char> is_phi_I_neg(static_cast<std::size_t>(rs.root_count()), 0);
  for (int r : d.phi_I)
    if (!rs.is_positive(r)) is_phi_I_neg[static_cast<std::size_t>(r)] = 1;

  for (int r = 0; r < rs.root_count(); ++r) {
    auto it = cd.levels.find(r);
    if (rs.is_positive(r)) {
      if (it == cd.levels.end() || it->second != 0) fail("positive root misses level 0");
    } else if (is_phi_I_neg[static_cast<std::size_t>(r)]) {
      if (it == cd.levels.end() || it->second != 1) fail("negative root on I misses level 1");
    } else {
      if (it != cd.levels.end()) fail("unconstrained direction acquired a half-space");
    }
  }

  // Redundancy of non-simple positive constraints: alpha = sum m_i alpha_i
  // with m_i >= 0, so <x, alpha> + 0 >= sum m_i (<x, alpha_i> + 0) >= 0
  // whenever the simple half-spaces (all level 0) hold.
  for (int r = 0; r < rs.root_count(); ++r) {
    if (!rs.is_positive(r) || rs.root_at(r).height() <= 1) continue;
    for (int i = 0; i < rs.rank(); ++i) {
      int m = rs.root_at(r).coeffs[static_cast<std::size_t>(i)];
      if (m < 0) fail("positive root with negative coefficient");
      if (m == 0) continue;
      auto it = cd.levels.find(rs.simple_root_index(i));
      if (it == cd.levels.end() || it->second > 0) fail("missing simple half-space for redundancy certificate");
    }
  }
  return res;
}

// The pivot behind the kernel identification: for each generator j in I,
// whether omega_j + c_I stays inside cl(C u c_I). Each answer reduces to the
// coefficient bound <omega_j, beta> <= 1 over beta in Phi_I^+, so all hold
// exactly when I is admissible.
struct KernelInclusionReport {
  SubsetI I;
  std::vector<std::pair<int, bool>> per_generator;  // (j, inclusion holds), j ascending
  bool all = true;
};

inline KernelInclusionReport verify_kernel_inclusion(const RootSystem& rs, SubsetI I) {
  KernelInclusionReport rep;
  rep.I = I;
  ClosureDescription cd = convex_closure(rs, {fundamental_chamber(rs), conical_cell(rs, I)});
  VPolyhedron cone = conical_cell(rs, I);
  for (int j : I.indices()) {
    VPolyhedron shifted = translate(cone, Point::fundamental(rs.rank(), j));
    bool ok = cd.contains(rs, shifted);
    rep.per_generator.emplace_back(j, ok);
    rep.all = rep.all && ok;
  }
  return rep;
}

}  // namespace parahoric
