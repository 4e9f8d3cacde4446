#pragma once

// Weyl groups by explicit enumeration. An element is identified by the tuple
// of images of the simple roots (as indices into the canonical root list);
// that tuple determines the action on every root by linearity, so it is a
// faithful, comparison-friendly key.
//
// Enumeration is breadth-first from the identity, extending on the right by
// generators in ascending index order. Consequences used elsewhere:
//   * elements appear sorted by length, and within a length by the
//     lexicographically least reduced word (ShortLex);
//   * the stored word of each element is that ShortLex-minimal reduced word;
//   * element 0 is the identity, the last element is the longest element.

#include <parahoric/errors.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/subset.hpp>

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace parahoric {

struct WeylElement {
  std::vector<int> root_images;  // root_images[i] = index of w(alpha_i)
  std::vector<int> word;         // ShortLex-minimal reduced word, 0-based generators
  int length = 0;

  bool operator==(const WeylElement& o) const { return root_images == o.root_images; }
};

inline WeylElement identity_element(const RootSystem& rs) {
  WeylElement e;
  e.root_images.resize(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    e.root_images[static_cast<std::size_t>(i)] = rs.simple_root_index(i);
  return e;
}

// w(beta) for beta = roots()[idx], by expanding beta over the simple roots.
inline int apply_to_root(const RootSystem& rs, const WeylElement& w, int idx) {
  const Root& beta = rs.root_at(idx);
  std::vector<int> acc(static_cast<std::size_t>(rs.rank()), 0);
  for (int i = 0; i < rs.rank(); ++i) {
    int m = beta.coeffs[static_cast<std::size_t>(i)];
    if (m == 0) continue;
    const Root& img = rs.root_at(w.root_images[static_cast<std::size_t>(i)]);
    for (int j = 0; j < rs.rank(); ++j)
      acc[static_cast<std::size_t>(j)] += m * img.coeffs[static_cast<std::size_t>(j)];
  }
  return rs.root_index(acc);
}

namespace detail {

// Images of w s_i from the images of w: (w s_i)(alpha_j) =
// w(alpha_j) - cartan[i][j] w(alpha_i), and (w s_i)(alpha_i) = -w(alpha_i).
inline std::vector<int> right_multiply_images(const RootSystem& rs, const std::vector<int>& img, int i) {
  std::vector<int> out(img.size());
  for (int j = 0; j < rs.rank(); ++j) {
    if (j == i) {
      out[static_cast<std::size_t>(j)] = rs.negative(img[static_cast<std::size_t>(i)]);
      continue;
    }
    int aij = rs.cartan()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    if (aij == 0) {
      out[static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(j)];
      continue;
    }
    const Root& bj = rs.root_at(img[static_cast<std::size_t>(j)]);
    const Root& bi = rs.root_at(img[static_cast<std::size_t>(i)]);
    std::vector<int> c = bj.coeffs;
    for (int k = 0; k < rs.rank(); ++k)
      c[static_cast<std::size_t>(k)] -= aij * bi.coeffs[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(j)] = rs.root_index(c);
  }
  return out;
}

// Images of s_i w from the images of w: (s_i w)(alpha_j) = s_i(w(alpha_j)).
inline std::vector<int> left_multiply_images(const RootSystem& rs, const std::vector<int>& img, int i) {
  std::vector<int> out(img.size());
  for (std::size_t j = 0; j < img.size(); ++j) out[j] = rs.reflect(i, img[j]);
  return out;
}

}  // namespace detail

inline constexpr std::size_t kDefaultEnumerationCap = 2'000'000;

// Subgroup generated by {s_i : i in gens}, breadth-first. The classical
// order formula for the induced subdiagram is checked before any work, so
// oversized requests are refused with the exact order and no enumeration.
inline std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, SubsetI gens,
                                               std::size_t cap = kDefaultEnumerationCap) {
  {
    BigInt order = parabolic_weyl_order(rs, gens);
    if (order > BigInt(static_cast<unsigned long long>(cap)))
      throw GroupTooLarge(order.str(), cap);
  }
  std::vector<int> gen_list = gens.indices();
  std::vector<WeylElement> elems{identity_element(rs)};
  std::map<std::vector<int>, int> index;
  index.emplace(elems[0].root_images, 0);
  for (std::size_t p = 0; p < elems.size(); ++p) {
    for (int i : gen_list) {
      std::vector<int> img = detail::right_multiply_images(rs, elems[p].root_images, i);
      auto [it, fresh] = index.try_emplace(std::move(img), static_cast<int>(elems.size()));
      if (!fresh) continue;
      if (elems.size() >= cap) throw GroupTooLarge("> " + std::to_string(cap), cap);
      WeylElement w;
      w.root_images = it->first;
      w.word = elems[p].word;
      w.word.push_back(i);
      w.length = elems[p].length + 1;
      elems.push_back(std::move(w));
    }
  }
  return elems;
}

struct DoubleCosetClass {
  int representative;  // element index of the unique minimal-length element
  long long size;
};

struct DoubleCosetTable {
  SubsetI left_subset, right_subset;
  std::vector<DoubleCosetClass> classes;  // ascending by representative index
  std::vector<int> class_of;              // element index -> class id
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs, std::size_t cap = kDefaultEnumerationCap)
      : rs_(&rs), elems_(enumerate_weyl(rs, SubsetI::full(rs.rank()), cap)) {
    const int n = static_cast<int>(elems_.size());
    const int l = rs.rank();
    for (int e = 0; e < n; ++e) index_.emplace(elems_[static_cast<std::size_t>(e)].root_images, e);

    right_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(l)));
    left_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(l)));
    for (int e = 0; e < n; ++e) {
      const auto& img = elems_[static_cast<std::size_t>(e)].root_images;
      for (int i = 0; i < l; ++i) {
        right_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] =
            index_.at(detail::right_multiply_images(rs, img, i));
        left_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)] =
            index_.at(detail::left_multiply_images(rs, img, i));
      }
    }

    // w^{-1} = (parent s_i)^{-1} = s_i parent^{-1}, walking the BFS word
    // backwards; parents precede children, so one ascending pass suffices.
    inv_.assign(static_cast<std::size_t>(n), 0);
    for (int e = 1; e < n; ++e) {
      int i = elems_[static_cast<std::size_t>(e)].word.back();
      int parent = right_[static_cast<std::size_t>(e)][static_cast<std::size_t>(i)];
      assert(parent < e);
      inv_[static_cast<std::size_t>(e)] =
          left_[static_cast<std::size_t>(inv_[static_cast<std::size_t>(parent)])][static_cast<std::size_t>(i)];
    }

    assert(n >= 1);
    assert(elems_.back().length == rs.positive_count());
    assert(n < 2 || elems_[static_cast<std::size_t>(n - 2)].length < elems_.back().length);
  }

  const RootSystem& root_system() const { return *rs_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElement& element(int e) const { return elems_.at(static_cast<std::size_t>(e)); }
  int identity() const { return 0; }
  int longest() const { return static_cast<int>(elems_.size()) - 1; }

  int index_of(const WeylElement& w) const { return index_.at(w.root_images); }
  int length(int e) const { return element(e).length; }

  int right(int e, int i) const { return right_.at(static_cast<std::size_t>(e)).at(static_cast<std::size_t>(i)); }
  int left(int e, int i) const { return left_.at(static_cast<std::size_t>(e)).at(static_cast<std::size_t>(i)); }
  int inverse(int e) const { return inv_.at(static_cast<std::size_t>(e)); }

  int product(int a, int b) const {
    // a b = a s_{i1} ... s_{ik} along b's word.
    int e = a;
    for (int i : element(b).word) e = right(e, i);
    return e;
  }

  int apply(int e, int root_idx) const { return apply_to_root(*rs_, element(e), root_idx); }

  // w(x) via <w x, alpha_j> = <x, w^{-1} alpha_j>.
  Coweight apply(int e, const Coweight& x) const {
    const WeylElement& winv = element(inverse(e));
    Coweight out = Coweight::zero(rs_->rank());
    for (int j = 0; j < rs_->rank(); ++j) {
      const Root& pre = rs_->root_at(winv.root_images[static_cast<std::size_t>(j)]);
      out.coords[static_cast<std::size_t>(j)] = pairing(x, pre);
    }
    return out;
  }

  SubsetI right_descents(int e) const {
    SubsetI d;
    const auto& img = element(e).root_images;
    for (int i = 0; i < rs_->rank(); ++i)
      if (!rs_->is_positive(img[static_cast<std::size_t>(i)])) d = d.with(i);
    return d;
  }
  SubsetI left_descents(int e) const { return right_descents(inverse(e)); }

  // Element indices of the standard parabolic subgroup W_I, ascending.
  std::vector<int> subgroup(SubsetI I) const {
    std::vector<int> gen = I.indices();
    std::vector<char> seen(elems_.size(), 0);
    std::vector<int> queue{identity()};
    seen[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (int i : gen) {
        int nxt = right(queue[q], i);
        if (!seen[static_cast<std::size_t>(nxt)]) {
          seen[static_cast<std::size_t>(nxt)] = 1;
          queue.push_back(nxt);
        }
      }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  // Minimal-length representatives of the cosets w W_I: elements with no
  // right descent inside I. Ascending order.
  std::vector<int> minimal_coset_reps(SubsetI I) const {
    std::vector<int> out;
    for (int e = 0; e < static_cast<int>(elems_.size()); ++e)
      if ((right_descents(e) & I).empty()) out.push_back(e);
    return out;
  }

  // Orbits of W_I1 x W_I2 acting by (u, v) w = u w v^{-1}, i.e. the double
  // cosets W_I1 \ W / W_I2, via union-find over generator moves.
  DoubleCosetTable double_cosets(SubsetI I1, SubsetI I2) const {
    const int n = static_cast<int>(elems_.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    };
    std::vector<int> g1 = I1.indices(), g2 = I2.indices();
    for (int e = 0; e < n; ++e) {
      for (int i : g1) unite(e, left(e, i));
      for (int i : g2) unite(e, right(e, i));
    }

    DoubleCosetTable t;
    t.left_subset = I1;
    t.right_subset = I2;
    t.class_of.assign(static_cast<std::size_t>(n), -1);
    std::map<int, int> root_to_class;
    for (int e = 0; e < n; ++e) {
      int r = find(e);
      auto [it, fresh] = root_to_class.try_emplace(r, static_cast<int>(t.classes.size()));
      if (fresh) t.classes.push_back({e, 0});
      t.class_of[static_cast<std::size_t>(e)] = it->second;
      ++t.classes[static_cast<std::size_t>(it->second)].size;
    }
    // Enumeration order is by length, so the first element seen in a class
    // is one of minimal length; it must be the unique one.
    for (const auto& c : t.classes) {
      int rep_len = length(c.representative);
      long long at_min = 0;
      for (int e = 0; e < n; ++e)
        if (t.class_of[static_cast<std::size_t>(e)] == t.class_of[static_cast<std::size_t>(c.representative)] &&
            length(e) == rep_len)
          ++at_min;
      assert(at_min == 1);
      (void)at_min;
      (void)rep_len;
    }
    return t;
  }

 private:
  const RootSystem* rs_;  // not owned; must outlive the group
  std::vector<WeylElement> elems_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inv_;
};

enum class Side { left, right };

// Classes adjacent to that of element e under one generator move on the
// given side: {class(e), class(s_i e or e s_i)}, deduplicated, ascending.
inline std::vector<int> cell_closure(const DoubleCosetTable& t, const WeylGroup& w, int e, int i, Side side) {
  int other = side == Side::left ? w.left(e, i) : w.right(e, i);
  int a = t.class_of.at(static_cast<std::size_t>(e));
  int b = t.class_of.at(static_cast<std::size_t>(other));
  if (a == b) return {a};
  if (a > b) std::swap(a, b);
  return {a, b};
}

// Standalone inverse for elements outside any WeylGroup context: invert the
// permutation induced on the full root list. The stored word is the reverse
// of w's word (a reduced word, though not necessarily the ShortLex one).
inline WeylElement inverse_element(const RootSystem& rs, const WeylElement& w) {
  std::vector<int> perm(static_cast<std::size_t>(rs.root_count()));
  for (int r = 0; r < rs.root_count(); ++r)
    perm[static_cast<std::size_t>(apply_to_root(rs, w, r))] = r;
  WeylElement out;
  out.root_images.resize(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    out.root_images[static_cast<std::size_t>(i)] = perm[static_cast<std::size_t>(rs.simple_root_index(i))];
  out.word.assign(w.word.rbegin(), w.word.rend());
  out.length = w.length;
  return out;
}

}  // namespace parahoric
