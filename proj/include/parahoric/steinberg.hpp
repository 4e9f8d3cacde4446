#pragma once

// Poincare-style q-polynomials attached to a subset I of the simple roots:
//   coset_polynomial(I)     = sum over minimal coset representatives w in
//                             W^I of q^len(w)  (the Poincare series of W/W_I),
//   steinberg_polynomial(I) = alternating sum over J containing I of
//                             coset_polynomial(J).
// By inclusion-exclusion the latter equals the sum of q^len(w) over the
// elements whose right descent set is exactly the complement of I; for
// I = {} it collapses to the single term q^(number of positive roots).
//
// presentation_report records the generator/quotient shape attached to an
// admissible subset, stamped with the two geometric checks that drive it.

#include <parahoric/alcove.hpp>
#include <parahoric/errors.hpp>
#include <parahoric/parabolic.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/subset.hpp>
#include <parahoric/weyl.hpp>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace parahoric {

struct QPolynomial {
  std::vector<long long> coeffs;  // coeffs[k] multiplies q^k; no trailing zeros

  void normalize() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  long long coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[static_cast<std::size_t>(k)] : 0;
  }

  void add_term(int k, long long c) {
    if (k >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<std::size_t>(k) + 1, 0);
    coeffs[static_cast<std::size_t>(k)] += c;
    normalize();
  }

  QPolynomial operator+(const QPolynomial& o) const {
    QPolynomial r = *this;
    for (int k = 0; k <= o.degree(); ++k) r.add_term(k, o.coeff(k));
    return r;
  }
  QPolynomial operator-(const QPolynomial& o) const {
    QPolynomial r = *this;
    for (int k = 0; k <= o.degree(); ++k) r.add_term(k, -o.coeff(k));
    return r;
  }

  bool operator==(const QPolynomial& o) const { return coeffs == o.coeffs; }

  BigInt eval(long long q) const {
    BigInt acc = 0;
    for (int k = degree(); k >= 0; --k) acc = acc * q + coeff(k);
    return acc;
  }
  BigInt value_at_one() const { return eval(1); }

  // "0", "1 + 2q + q^3", "q - q^2"; exponents with '^', unit coefficients
  // suppressed in front of q.
  std::string to_string() const {
    if (zero()) return "0";
    std::string s;
    for (int k = 0; k <= degree(); ++k) {
      long long c = coeff(k);
      if (c == 0) continue;
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      long long a = c < 0 ? -c : c;
      if (k == 0) {
        s += std::to_string(a);
      } else {
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }
};

inline QPolynomial coset_polynomial(const WeylGroup& w, SubsetI I) {
  QPolynomial p;
  for (int e : w.minimal_coset_reps(I)) p.add_term(w.length(e), 1);
  return p;
}

inline QPolynomial steinberg_polynomial(const WeylGroup& w, SubsetI I) {
  const int l = w.root_system().rank();
  std::vector<int> off;
  for (int i = 0; i < l; ++i)
    if (!I.contains(i)) off.push_back(i);
  QPolynomial acc;
  const std::uint64_t end = std::uint64_t{1} << off.size();
  for (std::uint64_t m = 0; m < end; ++m) {
    SubsetI J = I;
    int extra = 0;
    for (std::size_t b = 0; b < off.size(); ++b)
      if ((m >> b) & 1u) {
        J = J.with(off[b]);
        ++extra;
      }
    QPolynomial term = coset_polynomial(w, J);
    acc = (extra % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Number of elements whose right descent set is exactly the complement of I;
// equals steinberg_polynomial(I) at q = 1.
inline long long descent_count(const WeylGroup& w, SubsetI I) {
  SubsetI target = I.complement_in(w.root_system().rank());
  long long n = 0;
  for (int e = 0; e < static_cast<int>(w.size()); ++e)
    if (w.right_descents(e) == target) ++n;
  return n;
}

// Generator/quotient shape of the representation attached to an admissible
// subset: one compact generator per simple index (the fundamental coweight
// translations), quotient terms indexed by the subsets I u {i} for i off I,
// and the two geometric facts that make the kernel argument run.
struct PresentationReport {
  SubsetI I;
  bool admissible = true;
  std::vector<Coweight> generators;
  std::vector<SubsetI> quotient_terms;
  bool kernel_inclusion_verified = false;
  bool closure_lemma_verified = false;
};

inline PresentationReport presentation_report(const RootSystem& rs, SubsetI I) {
  if (!is_admissible(rs, I))
    throw NotAdmissible("subset " + I.to_string_one_based() + " is not admissible");
  PresentationReport rep;
  rep.I = I;
  rep.admissible = true;
  for (int j = 0; j < rs.rank(); ++j) rep.generators.push_back(Coweight::fundamental(rs.rank(), j));
  for (int i = 0; i < rs.rank(); ++i)
    if (!I.contains(i)) rep.quotient_terms.push_back(I.with(i));
  rep.kernel_inclusion_verified = verify_kernel_inclusion(rs, I).all;
  rep.closure_lemma_verified = verify_closure_lemma(rs, I).pass;
  return rep;
}

}  // namespace parahoric
