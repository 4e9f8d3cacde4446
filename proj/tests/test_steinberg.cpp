// q-polynomials: coset Poincare series, the alternating sum over enclosing
// subsets, its collapse to a single power for the empty subset, the descent
// partition identity, and the presentation report for admissible subsets.

#include <catch2/catch_amalgamated.hpp>

#include <parahoric/parabolic.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/steinberg.hpp>
#include <parahoric/subset.hpp>
#include <parahoric/weyl.hpp>

#include <string>
#include <vector>

using namespace parahoric;

namespace {

// Direct evaluation of the descent-partition form: sum of q^len over the
// elements whose right descent set is exactly the complement of I.
QPolynomial descent_partition_sum(const WeylGroup& g, SubsetI I) {
  SubsetI target = I.complement_in(g.root_system().rank());
  QPolynomial p;
  for (int e = 0; e < static_cast<int>(g.size()); ++e)
    if (g.right_descents(e) == target) p.add_term(g.length(e), 1);
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic, formatting and evaluation", "[steinberg]") {
  QPolynomial zero;
  CHECK(zero.zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.to_string() == "0");
  CHECK(zero.eval(5) == BigInt(0));

  QPolynomial p;
  p.add_term(2, 3);
  p.add_term(2, -3);
  CHECK(p.zero());

  QPolynomial full{{1, 2, 2, 1}};
  CHECK(full.to_string() == "1 + 2q + 2q^2 + q^3");
  CHECK(full.value_at_one() == BigInt(6));
  CHECK(full.eval(2) == BigInt(21));
  CHECK(full.coeff(3) == 1);
  CHECK(full.coeff(7) == 0);
  CHECK(full.coeff(-1) == 0);

  CHECK(QPolynomial{{0, 1, 1}}.to_string() == "q + q^2");
  CHECK(QPolynomial{{0, 0, 0, 1}}.to_string() == "q^3");
  CHECK(QPolynomial{{0, 0, 0, 1}}.eval(2) == BigInt(8));
  CHECK(QPolynomial{{-2, 1}}.to_string() == "-2 + q");
  CHECK((QPolynomial{{0, 1}} - QPolynomial{{0, 0, 1}}).to_string() == "q - q^2");
  CHECK((QPolynomial{{1, 1}} + QPolynomial{{0, 1}}).coeffs == std::vector<long long>{1, 2});
}

TEST_CASE("coset and alternating-sum polynomials frozen in the smallest group", "[steinberg]") {
  RootSystem rs("A2");
  WeylGroup g(rs);

  CHECK(coset_polynomial(g, SubsetI{}).coeffs == std::vector<long long>{1, 2, 2, 1});
  CHECK(coset_polynomial(g, SubsetI::of({0})).coeffs == std::vector<long long>{1, 1, 1});
  CHECK(coset_polynomial(g, SubsetI::full(2)).coeffs == std::vector<long long>{1});

  CHECK(steinberg_polynomial(g, SubsetI{}).coeffs == std::vector<long long>{0, 0, 0, 1});
  CHECK(steinberg_polynomial(g, SubsetI::of({0})).coeffs == std::vector<long long>{0, 1, 1});
  CHECK(steinberg_polynomial(g, SubsetI::full(2)).coeffs == std::vector<long long>{1});

  CHECK(descent_count(g, SubsetI::of({0})) == 2);
  CHECK(descent_count(g, SubsetI{}) == 1);
  CHECK(descent_count(g, SubsetI::full(2)) == 1);
}

TEST_CASE("empty-subset polynomial collapses to the top power", "[steinberg]") {
  for (const char* name : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"}) {
    INFO("type " << name);
    RootSystem rs(name);
    WeylGroup g(rs);
    std::vector<long long> expect(static_cast<std::size_t>(rs.positive_count()) + 1, 0);
    expect.back() = 1;
    CHECK(steinberg_polynomial(g, SubsetI{}).coeffs == expect);
  }
}

TEST_CASE("alternating sum equals the descent partition term", "[steinberg]") {
  for (const char* name : {"B3", "C3", "G2", "D4", "A1xA2"}) {
    INFO("type " << name);
    RootSystem rs(name);
    WeylGroup g(rs);
    QPolynomial total;
    for (SubsetI I : all_subsets_lex(rs.rank())) {
      QPolynomial st = steinberg_polynomial(g, I);
      CHECK(st == descent_partition_sum(g, I));
      CHECK(st.value_at_one() == BigInt(descent_count(g, I)));
      total = total + st;
      // top term: the longest coset representative survives alone
      ParabolicData d = subsystem(rs, I);
      CHECK(st.degree() == rs.positive_count() - static_cast<int>(d.phi_I_pos.size()));
      CHECK(st.coeffs.back() == 1);
    }
    // the descent classes partition the group
    CHECK(total == coset_polynomial(g, SubsetI{}));
  }
}

TEST_CASE("coset polynomial counts cosets at q equal one", "[steinberg]") {
  RootSystem rs("B3");
  WeylGroup g(rs);
  for (SubsetI I : all_subsets_lex(3)) {
    BigInt expected = rs.weyl_order() / parabolic_weyl_order(rs, I);
    CHECK(coset_polynomial(g, I).value_at_one() == expected);
  }
}

TEST_CASE("presentation report for admissible subsets", "[steinberg]") {
  RootSystem a2("A2");
  PresentationReport rep = presentation_report(a2, SubsetI::of({0}));
  CHECK(rep.admissible);
  REQUIRE(rep.generators.size() == 2);
  CHECK(rep.generators[0] == Coweight::fundamental(2, 0));
  CHECK(rep.generators[1] == Coweight::fundamental(2, 1));
  CHECK(rep.quotient_terms == std::vector<SubsetI>{SubsetI::full(2)});
  CHECK(rep.kernel_inclusion_verified);
  CHECK(rep.closure_lemma_verified);

  RootSystem a3("A3");
  PresentationReport rep3 = presentation_report(a3, SubsetI{});
  CHECK(rep3.quotient_terms ==
        std::vector<SubsetI>{SubsetI::of({0}), SubsetI::of({1}), SubsetI::of({2})});
  CHECK(rep3.kernel_inclusion_verified);

  RootSystem b2("B2");
  CHECK_THROWS_AS(presentation_report(b2, SubsetI::full(2)), NotAdmissible);
  RootSystem g2("G2");
  CHECK_THROWS_AS(presentation_report(g2, SubsetI::full(2)), NotAdmissible);
  CHECK(presentation_report(g2, SubsetI::of({1})).kernel_inclusion_verified);
}
