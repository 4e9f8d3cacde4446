#pragma once

// Finite reduced root systems of types A-G and their products, kept entirely
// in the simple-root basis with exact integer/rational arithmetic.
//
// Conventions, fixed once and used by every other header:
//   * Bourbaki numbering of simple roots within each component.
//   * Cartan matrix entry cartan[i][j] = <coroot(alpha_i), alpha_j>, so the
//     simple reflection acts on a root beta = sum_j m_j alpha_j by
//     s_i(beta) = beta - (sum_j cartan[i][j] m_j) alpha_i.
//   * Roots are identified with their integer coefficient vectors and listed
//     in (height, lexicographic) order; all tables are indexed by that order.
//   * Coweights live in the fundamental-coweight basis, so the pairing with a
//     root is <x, beta> = sum_j m_j x_j. This models the cocharacter lattice
//     of a maximal torus in adjoint form, where all fundamental coweights are
//     integral.

#include <parahoric/errors.hpp>
#include <parahoric/rational.hpp>
#include <parahoric/subset.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace parahoric {

using BigInt = boost::multiprecision::cpp_int;

enum class SimpleType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct ComponentSpec {
  SimpleType type;
  int rank;
  bool operator==(const ComponentSpec&) const = default;
};

namespace detail {

inline void validate_component(SimpleType t, int rank) {
  auto fail = [&](const char* need) {
    throw InvalidSpec(std::string(1, static_cast<char>(t)) + std::to_string(rank) + ": rank must be " + need);
  };
  switch (t) {
    case SimpleType::A:
      if (rank < 1) fail(">= 1");
      break;
    case SimpleType::B:
    case SimpleType::C:
      if (rank < 2) fail(">= 2");
      break;
    case SimpleType::D:
      if (rank < 3) fail(">= 3");
      break;
    case SimpleType::E:
      if (rank < 6 || rank > 8) fail("6, 7 or 8");
      break;
    case SimpleType::F:
      if (rank != 4) fail("4");
      break;
    case SimpleType::G:
      if (rank != 2) fail("2");
      break;
  }
}

}  // namespace detail

// A product of simple types, e.g. "A2" or "A1xB3". Component order is kept
// as written; the canonical string is upper-case with 'x' separators.
struct RootSystemSpec {
  std::vector<ComponentSpec> components;

  int total_rank() const {
    int l = 0;
    for (const auto& c : components) l += c.rank;
    return l;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < components.size(); ++k) {
      if (k) s += "x";
      s += static_cast<char>(components[k].type);
      s += std::to_string(components[k].rank);
    }
    return s;
  }

  // Grammar: component ('x' component)*, component = letter in A..G followed
  // by a decimal rank. Case-insensitive. "A2", "a1xb3".
  static RootSystemSpec parse(std::string_view text) {
    RootSystemSpec spec;
    std::size_t pos = 0;
    if (text.empty()) throw InvalidSpec("empty root system description");
    while (pos < text.size()) {
      char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
      if (letter < 'A' || letter > 'G')
        throw InvalidSpec("unknown type letter '" + std::string(1, text[pos]) + "'");
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw InvalidSpec("missing rank after type letter");
      if (pos - start > 3) throw InvalidSpec("rank out of range");
      int rank = 0;
      for (std::size_t k = start; k < pos; ++k) rank = rank * 10 + (text[k] - '0');
      SimpleType t = static_cast<SimpleType>(letter);
      detail::validate_component(t, rank);
      spec.components.push_back({t, rank});
      if (pos < text.size()) {
        char sep = static_cast<char>(std::tolower(static_cast<unsigned char>(text[pos])));
        if (sep != 'x') throw InvalidSpec("expected 'x' between components");
        ++pos;
        if (pos == text.size()) throw InvalidSpec("trailing separator");
      }
    }
    if (spec.total_rank() > 64)
      throw InvalidSpec("total rank " + std::to_string(spec.total_rank()) + " exceeds 64");
    return spec;
  }
};

// A root as its coefficient vector over the simple roots.
struct Root {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  bool positive() const { return height() > 0; }

  Root negated() const {
    Root r = *this;
    for (int& c : r.coeffs) c = -c;
    return r;
  }

  bool operator==(const Root&) const = default;
};

// Canonical order: height first, then lexicographic on coefficients.
inline bool root_less(const Root& a, const Root& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb;
  return a.coeffs < b.coeffs;
}

// A rational coweight written in the fundamental-coweight basis.
struct Coweight {
  std::vector<Rat> coords;

  static Coweight zero(int rank) { return Coweight{std::vector<Rat>(rank, Rat(0))}; }
  static Coweight fundamental(int rank, int j) {
    Coweight x = zero(rank);
    x.coords.at(j) = Rat(1);
    return x;
  }

  bool integral() const {
    for (const Rat& c : coords)
      if (!rat_is_integer(c)) return false;
    return true;
  }

  Coweight operator+(const Coweight& o) const {
    assert(coords.size() == o.coords.size());
    Coweight r = *this;
    for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords[k];
    return r;
  }
  Coweight operator-(const Coweight& o) const {
    assert(coords.size() == o.coords.size());
    Coweight r = *this;
    for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] -= o.coords[k];
    return r;
  }
  Coweight scaled(const Rat& t) const {
    Coweight r = *this;
    for (Rat& c : r.coords) c *= t;
    return r;
  }

  bool operator==(const Coweight&) const = default;
};

// <x, beta> in the bases above: coefficients of beta against coordinates of x.
inline Rat pairing(const Coweight& x, const Root& beta) {
  assert(x.coords.size() == beta.coeffs.size());
  Rat acc(0);
  for (std::size_t k = 0; k < x.coords.size(); ++k)
    if (beta.coeffs[k] != 0) acc += x.coords[k] * beta.coeffs[k];
  return acc;
}

namespace detail {

// Cartan matrix of one simple component, 0-based Bourbaki numbering.
inline std::vector<std::vector<int>> component_cartan(SimpleType t, int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t) {
    case SimpleType::A:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case SimpleType::B:
      // alpha_n short: <coroot(alpha_n), alpha_{n-1}> = -2.
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case SimpleType::C:
      // alpha_n long: <coroot(alpha_{n-1}), alpha_n> = -2.
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case SimpleType::D:
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case SimpleType::E:
      edge(0, 2);
      edge(2, 3);
      edge(3, 4);
      edge(4, 5);
      if (n >= 7) edge(5, 6);
      if (n >= 8) edge(6, 7);
      edge(1, 3);
      break;
    case SimpleType::F:
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      // alpha_3 short: <coroot(alpha_3), alpha_2> = -2.
      a[2][1] = -2;
      break;
    case SimpleType::G:
      // alpha_1 short: <coroot(alpha_1), alpha_2> = -3.
      a[0][1] = -3;
      a[1][0] = -1;
      break;
  }
  return a;
}

// Closure of the simple roots under all simple reflections. Every root is in
// a single Weyl orbit union over the simples, so this reaches all of Phi.
inline std::vector<std::vector<int>> generate_root_coeffs(const std::vector<std::vector<int>>& cartan) {
  const int l = static_cast<int>(cartan.size());
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    seen.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    std::vector<int> beta = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < l; ++i) {
      long long k = 0;
      for (int j = 0; j < l; ++j)
        if (beta[j] != 0) k += static_cast<long long>(cartan[i][j]) * beta[j];
      std::vector<int> gamma = beta;
      gamma[i] -= static_cast<int>(k);
      if (seen.insert(gamma).second) work.push_back(gamma);
    }
  }
  return {seen.begin(), seen.end()};
}

inline long long component_root_count(SimpleType t, int n) {
  switch (t) {
    case SimpleType::A: return static_cast<long long>(n) * (n + 1);
    case SimpleType::B:
    case SimpleType::C: return 2LL * n * n;
    case SimpleType::D: return 2LL * n * (n - 1);
    case SimpleType::E: return n == 6 ? 72 : n == 7 ? 126 : 240;
    case SimpleType::F: return 48;
    case SimpleType::G: return 12;
  }
  return 0;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

inline BigInt component_weyl_order(SimpleType t, int n) {
  switch (t) {
    case SimpleType::A: return factorial(n + 1);
    case SimpleType::B:
    case SimpleType::C: return factorial(n) << n;
    case SimpleType::D: return factorial(n) << (n - 1);
    case SimpleType::E: return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
    case SimpleType::F: return BigInt(1152);
    case SimpleType::G: return BigInt(12);
  }
  return 1;
}

}  // namespace detail

// One irreducible factor inside a product system: which simple indices it
// owns and its highest root with marks.
struct Component {
  SimpleType type = SimpleType::A;
  int rank = 0;
  int offset = 0;            // simple indices [offset, offset + rank)
  int highest_root = -1;     // index into roots()
  std::vector<int> marks;    // highest root coefficients on this component
};

class RootSystem {
 public:
  explicit RootSystem(const RootSystemSpec& spec) : spec_(spec) { build(); }
  explicit RootSystem(std::string_view text) : RootSystem(RootSystemSpec::parse(text)) {}

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<Component>& simple_components() const { return components_; }

  // Roots in (height, lex) order; negatives first, positives in the upper
  // half. positive_count() positives, same count of negatives.
  const std::vector<Root>& roots() const { return roots_; }
  const Root& root_at(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(roots_.size()))
      throw IndexOutOfRange("root index " + std::to_string(idx));
    return roots_[static_cast<std::size_t>(idx)];
  }
  int root_count() const { return static_cast<int>(roots_.size()); }
  int positive_count() const { return positive_count_; }
  bool is_positive(int idx) const { return root_at(idx).height() > 0; }

  // Indices of all positive roots, ascending (hence in (height, lex) order).
  std::vector<int> positive_roots() const {
    std::vector<int> out;
    for (int r = 0; r < root_count(); ++r)
      if (is_positive(r)) out.push_back(r);
    return out;
  }

  int root_index(const std::vector<int>& coeffs) const {
    auto it = index_.find(coeffs);
    if (it == index_.end()) throw IndexOutOfRange("coefficient vector is not a root");
    return it->second;
  }
  bool is_root(const std::vector<int>& coeffs) const { return index_.count(coeffs) != 0; }

  int simple_root_index(int i) const {
    check_simple(i);
    return simple_index_[static_cast<std::size_t>(i)];
  }
  int negative(int idx) const { return neg_[static_cast<std::size_t>(check_root(idx))]; }

  // Index of s_i(beta) for beta = roots()[idx].
  int reflect(int i, int idx) const {
    check_simple(i);
    return refl_[static_cast<std::size_t>(i)][static_cast<std::size_t>(check_root(idx))];
  }

  // s_i(beta) for an arbitrary coefficient vector (beta need not be a root).
  Root simple_reflection(int i, const Root& beta) const {
    check_simple(i);
    long long k = 0;
    for (int j = 0; j < rank_; ++j)
      if (beta.coeffs[static_cast<std::size_t>(j)] != 0)
        k += static_cast<long long>(cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
             beta.coeffs[static_cast<std::size_t>(j)];
    Root out = beta;
    out.coeffs[static_cast<std::size_t>(i)] -= static_cast<int>(k);
    return out;
  }

  // s_i on a coweight: s_i(x) = x - <x, alpha_i> coroot(alpha_i), and the
  // coroot has coordinates (cartan[i][j])_j in the fundamental basis.
  Coweight simple_reflection(int i, const Coweight& x) const {
    check_simple(i);
    Coweight out = x;
    const Rat xi = x.coords[static_cast<std::size_t>(i)];
    if (xi == Rat(0)) return out;
    for (int j = 0; j < rank_; ++j) {
      int aij = cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (aij != 0) out.coords[static_cast<std::size_t>(j)] -= xi * aij;
    }
    return out;
  }

  // Mark of the simple root j: its coefficient in the highest root of the
  // component containing j.
  int mark(int j) const {
    check_simple(j);
    const Component& c = components_[static_cast<std::size_t>(component_of_[static_cast<std::size_t>(j)])];
    return c.marks[static_cast<std::size_t>(j - c.offset)];
  }

  BigInt weyl_order() const {
    BigInt n = 1;
    for (const auto& c : spec_.components) n *= detail::component_weyl_order(c.type, c.rank);
    return n;
  }

 private:
  void check_simple(int i) const {
    if (i < 0 || i >= rank_) throw IndexOutOfRange("simple index " + std::to_string(i));
  }
  int check_root(int idx) const {
    if (idx < 0 || idx >= static_cast<int>(roots_.size()))
      throw IndexOutOfRange("root index " + std::to_string(idx));
    return idx;
  }

  void build() {
    if (spec_.components.empty()) throw InvalidSpec("empty component list");
    for (const auto& c : spec_.components) detail::validate_component(c.type, c.rank);
    rank_ = spec_.total_rank();
    if (rank_ > 64) throw InvalidSpec("total rank exceeds 64");

    cartan_.assign(static_cast<std::size_t>(rank_), std::vector<int>(static_cast<std::size_t>(rank_), 0));
    component_of_.assign(static_cast<std::size_t>(rank_), 0);
    int off = 0, comp_id = 0;
    for (const auto& c : spec_.components) {
      auto block = detail::component_cartan(c.type, c.rank);
      for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j)
          cartan_[static_cast<std::size_t>(off + i)][static_cast<std::size_t>(off + j)] =
              block[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int i = 0; i < c.rank; ++i) component_of_[static_cast<std::size_t>(off + i)] = comp_id;
      Component comp;
      comp.type = c.type;
      comp.rank = c.rank;
      comp.offset = off;
      components_.push_back(comp);
      off += c.rank;
      ++comp_id;
    }

    auto coeff_list = detail::generate_root_coeffs(cartan_);
    roots_.reserve(coeff_list.size());
    for (auto& v : coeff_list) roots_.push_back(Root{std::move(v)});
    std::sort(roots_.begin(), roots_.end(), root_less);
    for (int r = 0; r < static_cast<int>(roots_.size()); ++r) index_[roots_[static_cast<std::size_t>(r)].coeffs] = r;

    long long expected = 0;
    for (const auto& c : spec_.components) expected += detail::component_root_count(c.type, c.rank);
    assert(static_cast<long long>(roots_.size()) == expected);
    (void)expected;

    positive_count_ = 0;
    for (const auto& r : roots_)
      if (r.height() > 0) ++positive_count_;
    assert(2 * positive_count_ == static_cast<int>(roots_.size()));

    simple_index_.resize(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> e(static_cast<std::size_t>(rank_), 0);
      e[static_cast<std::size_t>(i)] = 1;
      simple_index_[static_cast<std::size_t>(i)] = root_index(e);
    }

    neg_.resize(roots_.size());
    for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
      neg_[static_cast<std::size_t>(r)] = root_index(roots_[static_cast<std::size_t>(r)].negated().coeffs);

    refl_.assign(static_cast<std::size_t>(rank_), std::vector<int>(roots_.size()));
    for (int i = 0; i < rank_; ++i)
      for (int r = 0; r < static_cast<int>(roots_.size()); ++r)
        refl_[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] =
            root_index(simple_reflection(i, roots_[static_cast<std::size_t>(r)]).coeffs);

    // Highest root per component: the unique height-maximal root supported
    // on it. Uniqueness holds for irreducible systems; asserted below.
    for (auto& comp : components_) {
      int best = -1, best_h = -1, ties = 0;
      for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
        const Root& rt = roots_[static_cast<std::size_t>(r)];
        if (rt.height() <= 0) continue;
        bool on_comp = true;
        for (int j = 0; j < rank_; ++j) {
          bool inside = j >= comp.offset && j < comp.offset + comp.rank;
          if (!inside && rt.coeffs[static_cast<std::size_t>(j)] != 0) { on_comp = false; break; }
        }
        if (!on_comp) continue;
        int h = rt.height();
        if (h > best_h) {
          best_h = h;
          best = r;
          ties = 1;
        } else if (h == best_h) {
          ++ties;
        }
      }
      assert(best >= 0 && ties == 1);
      (void)ties;
      comp.highest_root = best;
      comp.marks.resize(static_cast<std::size_t>(comp.rank));
      for (int j = 0; j < comp.rank; ++j)
        comp.marks[static_cast<std::size_t>(j)] =
            roots_[static_cast<std::size_t>(best)].coeffs[static_cast<std::size_t>(comp.offset + j)];
    }
  }

  RootSystemSpec spec_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Component> components_;
  std::vector<int> component_of_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> simple_index_;
  std::vector<int> neg_;
  std::vector<std::vector<int>> refl_;
  int positive_count_ = 0;
};

// Connected components of the Dynkin subdiagram induced by I, classified
// into simple types by edge multiplicities and branch shape. The rank-2
// double-bond diagram is reported as B2 (= C2). Induced subdiagrams of
// valid diagrams are always classifiable; anything else is a logic error.
inline std::vector<ComponentSpec> classify_subdiagram(const RootSystem& rs, SubsetI I) {
  const auto& a = rs.cartan();
  auto bond = [&](int u, int v) {
    return a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] *
           a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
  };
  std::set<int> pending;
  for (int i : I.indices()) pending.insert(i);
  std::vector<ComponentSpec> out;
  while (!pending.empty()) {
    std::vector<int> comp{*pending.begin()};
    pending.erase(pending.begin());
    for (std::size_t q = 0; q < comp.size(); ++q) {
      std::vector<int> grab;
      for (int v : pending)
        if (a[static_cast<std::size_t>(comp[q])][static_cast<std::size_t>(v)] != 0) grab.push_back(v);
      for (int v : grab) {
        pending.erase(v);
        comp.push_back(v);
      }
    }
    std::sort(comp.begin(), comp.end());
    const int n = static_cast<int>(comp.size());
    if (n == 1) {
      out.push_back({SimpleType::A, 1});
      continue;
    }

    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    int triples = 0, doubles = 0;
    int short_pos = -1, long_pos = -1;  // ends of the unique double bond
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        int m = bond(comp[static_cast<std::size_t>(i)], comp[static_cast<std::size_t>(j)]);
        if (m == 0) continue;
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
        if (m == 3) ++triples;
        if (m == 2) {
          ++doubles;
          // the -2 row belongs to the short root
          bool i_short = a[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])]
                          [static_cast<std::size_t>(comp[static_cast<std::size_t>(j)])] == -2;
          short_pos = i_short ? i : j;
          long_pos = i_short ? j : i;
        }
      }

    SimpleType type;
    if (triples > 0) {
      assert(n == 2 && triples == 1);
      type = SimpleType::G;
    } else if (doubles == 1) {
      if (n == 2)
        type = SimpleType::B;
      else if (deg[static_cast<std::size_t>(short_pos)] == 1)
        type = SimpleType::B;
      else if (deg[static_cast<std::size_t>(long_pos)] == 1)
        type = SimpleType::C;
      else
        type = SimpleType::F;
    } else {
      assert(doubles == 0);
      int branch = -1;
      for (int k = 0; k < n; ++k)
        if (deg[static_cast<std::size_t>(k)] == 3) branch = k;
      if (branch < 0) {
        type = SimpleType::A;
      } else {
        std::vector<int> arms;
        for (int nb : adj[static_cast<std::size_t>(branch)]) {
          int len = 1, prev = branch, cur = nb;
          for (;;) {
            int nxt = -1;
            for (int cand : adj[static_cast<std::size_t>(cur)])
              if (cand != prev) nxt = cand;
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
            ++len;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        assert(arms.size() == 3);
        type = arms[1] == 1 ? SimpleType::D : SimpleType::E;
      }
    }
    out.push_back({type, n});
  }
  return out;
}

// Order of the standard parabolic subgroup W_I by the classical formulas.
inline BigInt parabolic_weyl_order(const RootSystem& rs, SubsetI I) {
  BigInt n = 1;
  for (const ComponentSpec& c : classify_subdiagram(rs, I))
    n *= detail::component_weyl_order(c.type, c.rank);
  return n;
}

}  // namespace parahoric
