#pragma once

#include <parahoric/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace parahoric {

// A subset of the simple-root index set {0, ..., rank-1}, stored as a bit
// mask. Indices are 0-based internally; parse/print use the 1-based
// convention of the surrounding literature.
struct SubsetI {
  std::uint64_t mask = 0;

  constexpr SubsetI() = default;
  constexpr explicit SubsetI(std::uint64_t m) : mask(m) {}

  static SubsetI of(std::initializer_list<int> indices) {
    SubsetI s;
    for (int i : indices) s.mask |= (std::uint64_t{1} << i);
    return s;
  }

  static SubsetI full(int rank) {
    if (rank >= 64) throw RankTooLarge("rank " + std::to_string(rank) + " exceeds subset mask width");
    return SubsetI{(std::uint64_t{1} << rank) - 1};
  }

  bool contains(int i) const { return (mask >> i) & 1u; }
  bool empty() const { return mask == 0; }
  int size() const { return __builtin_popcountll(mask); }

  SubsetI with(int i) const { return SubsetI{mask | (std::uint64_t{1} << i)}; }
  SubsetI without(int i) const { return SubsetI{mask & ~(std::uint64_t{1} << i)}; }
  SubsetI complement_in(int rank) const { return SubsetI{full(rank).mask & ~mask}; }

  bool subset_of(SubsetI other) const { return (mask & ~other.mask) == 0; }

  SubsetI operator|(SubsetI o) const { return SubsetI{mask | o.mask}; }
  SubsetI operator&(SubsetI o) const { return SubsetI{mask & o.mask}; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 64; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  bool operator==(const SubsetI&) const = default;

  // "{}" or "{1,3}", 1-based.
  std::string to_string_one_based() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

  // Accepts "", "1,3", "{1,3}", with optional spaces. 1-based indices.
  static SubsetI parse_one_based(std::string_view text, int rank) {
    SubsetI s;
    std::string buf;
    auto flush = [&]() {
      if (buf.empty()) return;
      int v = 0;
      for (char c : buf) v = v * 10 + (c - '0');
      if (v < 1 || v > rank)
        throw IndexOutOfRange("simple root index " + buf + " outside 1.." + std::to_string(rank));
      s.mask |= (std::uint64_t{1} << (v - 1));
      buf.clear();
    };
    for (char c : text) {
      if (c >= '0' && c <= '9') {
        buf += c;
      } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
        flush();
      } else {
        throw InvalidSpec(std::string("bad character '") + c + "' in subset");
      }
    }
    flush();
    return s;
  }
};

// Lexicographic order on the ascending index sequences, so {} < {1} < {1,2}
// < {1,3} < {2}. This is the canonical report order for subset sweeps.
inline bool subset_lex_less(SubsetI a, SubsetI b) {
  std::vector<int> va = a.indices(), vb = b.indices();
  return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

// All subsets of {0..rank-1} in the order above. The recursion emits a set
// before its extensions, which is exactly sequence-lex order.
inline std::vector<SubsetI> all_subsets_lex(int rank) {
  if (rank > 24) throw RankTooLarge("subset sweep refused for rank " + std::to_string(rank) + " > 24");
  std::vector<SubsetI> out;
  out.reserve(std::size_t{1} << rank);
  struct Rec {
    int rank;
    std::vector<SubsetI>* out;
    void go(SubsetI cur, int next) {
      out->push_back(cur);
      for (int i = next; i < rank; ++i) go(cur.with(i), i + 1);
    }
  } rec{rank, &out};
  rec.go(SubsetI{}, 0);
  return out;
}

}  // namespace parahoric
