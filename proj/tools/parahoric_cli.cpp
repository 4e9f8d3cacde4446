// Command-line front end: builds root system data, runs the verification
// sweeps, and emits deterministic reports.
//
// Exit codes: 0 all checks pass, 1 a verification stamp failed, 2 usage or
// parse error, 3 a resource cap refused the computation.

#include <parahoric/parahoric.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace parahoric;

Json root_json(const RootSystem& rs, int idx) {
  Json a = Json::array();
  for (int c : rs.root_at(idx).coeffs) a.push_back(c);
  return a;
}

Json subset_json(SubsetI I) {
  Json a = Json::array();
  for (int i : I.indices()) a.push_back(i + 1);
  return a;
}

Json word_json(const std::vector<int>& word) {
  Json a = Json::array();
  for (int i : word) a.push_back(i + 1);
  return a;
}

Json coweight_json(const Coweight& x) {
  Json a = Json::array();
  for (const Rat& c : x.coords) a.push_back(rat_to_string(c));
  return a;
}

Json polynomial_json(const QPolynomial& p) {
  Json j = Json::object();
  j["display"] = p.to_string();
  Json coeffs = Json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(p.coeff(k));
  j["coefficients"] = std::move(coeffs);
  j["degree"] = p.degree();
  j["value_at_one"] = p.value_at_one().str();
  return j;
}

Report cmd_info(const RootSystem& rs) {
  Report rep;
  rep.command = "info";
  rep.spec = rs.spec().to_string();
  Json& r = rep.results;
  r["rank"] = rs.rank();
  Json comps = Json::array();
  for (const Component& c : rs.simple_components()) {
    Json e = Json::object();
    e["type"] = std::string(1, static_cast<char>(c.type));
    e["rank"] = c.rank;
    e["first_index"] = c.offset + 1;
    Json marks = Json::array();
    for (int m : c.marks) marks.push_back(m);
    e["marks"] = std::move(marks);
    e["highest_root"] = root_json(rs, c.highest_root);
    comps.push_back(std::move(e));
  }
  r["components"] = std::move(comps);
  Json cartan = Json::array();
  for (const auto& row : rs.cartan()) {
    Json jr = Json::array();
    for (int v : row) jr.push_back(v);
    cartan.push_back(std::move(jr));
  }
  r["cartan_matrix"] = std::move(cartan);
  r["root_count"] = rs.root_count();
  r["positive_root_count"] = rs.positive_count();
  r["weyl_order"] = rs.weyl_order().str();
  Json pos = Json::array();
  for (int idx : rs.positive_roots()) pos.push_back(root_json(rs, idx));
  r["positive_roots"] = std::move(pos);
  Json verts = Json::array();
  for (const Point& v : fundamental_chamber(rs).vertices) verts.push_back(coweight_json(v));
  r["chamber_vertices"] = std::move(verts);
  return rep;
}

Report cmd_admissible(const RootSystem& rs) {
  Report rep;
  rep.command = "admissible";
  rep.spec = rs.spec().to_string();
  Json good = Json::array();
  Json bad = Json::array();
  for (SubsetI I : all_subsets_lex(rs.rank())) {
    std::optional<int> w = admissibility_witness(rs, I);
    if (!w) {
      good.push_back(subset_json(I));
    } else {
      Json e = Json::object();
      e["subset"] = subset_json(I);
      e["witness_root"] = root_json(rs, *w);
      bad.push_back(std::move(e));
    }
  }
  rep.results["admissible"] = std::move(good);
  rep.results["inadmissible"] = std::move(bad);
  rep.results["admissible_count"] = rep.results["admissible"].size();
  rep.results["subset_count"] = std::size_t{1} << rs.rank();
  return rep;
}

Report cmd_verify(const RootSystem& rs, const std::string& which, std::size_t cap) {
  Report rep;
  rep.command = "verify";
  rep.spec = rs.spec().to_string();
  std::vector<SubsetI> subsets = all_subsets_lex(rs.rank());
  Json ran = Json::array();

  auto want = [&](const char* name) { return which == "all" || which == name; };

  if (want("closure")) {
    ran.push_back("closure");
    VerificationStamp s{"closure_lemma", true, Json(nullptr)};
    for (SubsetI I : subsets) {
      ClosureLemmaResult res = verify_closure_lemma(rs, I);
      if (!res.pass) {
        s.pass = false;
        s.counterexample = Json::object();
        s.counterexample["subset"] = subset_json(I);
        s.counterexample["detail"] = res.detail;
        break;
      }
    }
    rep.stamps.push_back(std::move(s));
  }

  if (want("psi")) {
    ran.push_back("psi");
    VerificationStamp s{"psi_minus_stability", true, Json(nullptr)};
    for (SubsetI I : subsets) {
      auto cex = psi_stability_counterexample(rs, I, cap);
      if (cex) {
        s.pass = false;
        s.counterexample = Json::object();
        s.counterexample["subset"] = subset_json(I);
        s.counterexample["word"] = word_json(cex->w.word);
        s.counterexample["root"] = root_json(rs, cex->root);
        s.counterexample["image"] = root_json(rs, cex->image);
        break;
      }
    }
    rep.stamps.push_back(std::move(s));
  }

  if (want("levels")) {
    ran.push_back("levels");
    VerificationStamp st{"translation_containment", true, Json(nullptr)};
    for (SubsetI I : subsets) {
      auto cex = translation_containment_counterexample(rs, I);
      if (cex) {
        st.pass = false;
        st.counterexample = Json::object();
        st.counterexample["subset"] = subset_json(I);
        st.counterexample["lambda"] = coweight_json(cex->lambda);
        st.counterexample["root"] = cex->root >= 0 ? root_json(rs, cex->root) : Json(nullptr);
        break;
      }
    }
    rep.stamps.push_back(std::move(st));

    VerificationStamp sw{"weyl_chamber_containment", true, Json(nullptr)};
    if (auto cex = weyl_containment_counterexample(rs, cap)) {
      sw.pass = false;
      sw.counterexample = Json::object();
      sw.counterexample["word"] = word_json(cex->w.word);
      sw.counterexample["root"] = cex->root >= 0 ? root_json(rs, cex->root) : Json(nullptr);
    }
    rep.stamps.push_back(std::move(sw));

    VerificationStamp sl{"levi_level_stability", true, Json(nullptr)};
    for (SubsetI I : subsets) {
      auto cex = levi_stability_counterexample(rs, I, cap);
      if (cex) {
        sl.pass = false;
        sl.counterexample = Json::object();
        sl.counterexample["subset"] = subset_json(I);
        sl.counterexample["word"] = word_json(cex->w.word);
        sl.counterexample["root"] = cex->root >= 0 ? root_json(rs, cex->root) : Json(nullptr);
        break;
      }
    }
    rep.stamps.push_back(std::move(sl));
  }

  if (want("neighborhood")) {
    ran.push_back("neighborhood");
    VerificationStamp s{"neighborhood_estimate", true, Json(nullptr)};
    Json mins = Json::array();
    for (SubsetI I : subsets) {
      if (I == SubsetI::full(rs.rank())) continue;
      NeighborhoodEstimate est = neighborhood_estimate(rs, I);
      Json e = Json::object();
      e["subset"] = subset_json(I);
      e["min_pairing"] = est.min_pairing ? Json(*est.min_pairing) : Json(nullptr);
      mins.push_back(std::move(e));
      if (!est.ok) {
        s.pass = false;
        s.counterexample = Json::object();
        s.counterexample["subset"] = subset_json(I);
        s.counterexample["min_pairing"] = est.min_pairing ? Json(*est.min_pairing) : Json(nullptr);
      }
    }
    rep.results["neighborhood_minima"] = std::move(mins);
    rep.stamps.push_back(std::move(s));

    VerificationStamp sa{"index_tower_additivity", true, Json(nullptr)};
    for (SubsetI I : subsets) {
      if (I == SubsetI::full(rs.rank())) continue;
      LevelVector base = opposite_unipotent_levels(rs, I);
      Coweight nu = t_I_coweight(rs, I);
      std::vector<LevelVector> tower{base};
      for (int k = 1; k <= 3; ++k)
        tower.push_back(conjugate_by_translation(rs, tower.back(), nu));
      long long steps = 0;
      for (int k = 0; k < 3; ++k) steps += index_exponent(tower[static_cast<std::size_t>(k) + 1],
                                                          tower[static_cast<std::size_t>(k)]);
      long long whole = index_exponent(tower[3], tower[0]);
      if (steps != whole) {
        sa.pass = false;
        sa.counterexample = Json::object();
        sa.counterexample["subset"] = subset_json(I);
        sa.counterexample["step_sum"] = steps;
        sa.counterexample["whole"] = whole;
        break;
      }
    }
    rep.stamps.push_back(std::move(sa));
  }

  if (want("kernel")) {
    ran.push_back("kernel");
    VerificationStamp s{"kernel_inclusion_matches_admissibility", true, Json(nullptr)};
    for (SubsetI I : subsets) {
      KernelInclusionReport kr = verify_kernel_inclusion(rs, I);
      if (kr.all != is_admissible(rs, I)) {
        s.pass = false;
        s.counterexample = Json::object();
        s.counterexample["subset"] = subset_json(I);
        s.counterexample["kernel_inclusion"] = kr.all;
        s.counterexample["admissible"] = is_admissible(rs, I);
        break;
      }
    }
    rep.stamps.push_back(std::move(s));
  }

  if (ran.empty()) throw InvalidSpec("unknown verification selector '" + which + "'");
  rep.results["which"] = std::move(ran);
  rep.results["subsets_checked"] = subsets.size();
  return rep;
}

Report cmd_steinberg(const RootSystem& rs, SubsetI I, std::optional<long long> at, std::size_t cap) {
  Report rep;
  rep.command = "steinberg";
  rep.spec = rs.spec().to_string();
  WeylGroup w(rs, cap);
  QPolynomial coset = coset_polynomial(w, I);
  QPolynomial st = steinberg_polynomial(w, I);
  long long desc = descent_count(w, I);

  Json& r = rep.results;
  r["subset"] = subset_json(I);
  r["admissible"] = is_admissible(rs, I);
  r["coset_polynomial"] = polynomial_json(coset);
  r["steinberg_polynomial"] = polynomial_json(st);
  r["descent_count"] = desc;
  if (at) {
    Json e = Json::object();
    e["q"] = *at;
    e["value"] = st.eval(*at).str();
    r["evaluation"] = std::move(e);
  }
  if (is_admissible(rs, I)) {
    PresentationReport pr = presentation_report(rs, I);
    Json p = Json::object();
    Json gens = Json::array();
    for (const Coweight& g : pr.generators) gens.push_back(coweight_json(g));
    p["generators"] = std::move(gens);
    Json quot = Json::array();
    for (SubsetI J : pr.quotient_terms) quot.push_back(subset_json(J));
    p["quotient_terms"] = std::move(quot);
    p["kernel_inclusion_verified"] = pr.kernel_inclusion_verified;
    p["closure_lemma_verified"] = pr.closure_lemma_verified;
    r["presentation"] = std::move(p);
    rep.stamps.push_back({"kernel_inclusion", pr.kernel_inclusion_verified, Json(nullptr)});
    rep.stamps.push_back({"closure_lemma", pr.closure_lemma_verified, Json(nullptr)});
  } else {
    r["presentation"] = "not admissible";
    std::optional<int> wit = admissibility_witness(rs, I);
    r["witness_root"] = wit ? root_json(rs, *wit) : Json(nullptr);
  }
  VerificationStamp cross{"descent_count_cross_check", st.value_at_one() == BigInt(desc), Json(nullptr)};
  if (!cross.pass) {
    cross.counterexample = Json::object();
    cross.counterexample["value_at_one"] = st.value_at_one().str();
    cross.counterexample["descent_count"] = desc;
  }
  rep.stamps.push_back(std::move(cross));
  return rep;
}

Report cmd_cosets(const RootSystem& rs, SubsetI I1, SubsetI I2, std::size_t cap) {
  Report rep;
  rep.command = "cosets";
  rep.spec = rs.spec().to_string();
  WeylGroup w(rs, cap);
  DoubleCosetTable t = w.double_cosets(I1, I2);

  Json& r = rep.results;
  r["left_subset"] = subset_json(I1);
  r["right_subset"] = subset_json(I2);
  r["class_count"] = t.classes.size();
  Json classes = Json::array();
  long long total = 0;
  for (const DoubleCosetClass& c : t.classes) {
    Json e = Json::object();
    e["representative_word"] = word_json(w.element(c.representative).word);
    e["length"] = w.length(c.representative);
    e["size"] = c.size;
    classes.push_back(std::move(e));
    total += c.size;
  }
  r["classes"] = std::move(classes);

  VerificationStamp sum{"class_sizes_sum_to_group_order", total == static_cast<long long>(w.size()),
                        Json(nullptr)};
  if (!sum.pass) {
    sum.counterexample = Json::object();
    sum.counterexample["total"] = total;
    sum.counterexample["group_order"] = w.size();
  }
  rep.stamps.push_back(std::move(sum));

  VerificationStamp uniq{"minimal_representative_unique", true, Json(nullptr)};
  for (const DoubleCosetClass& c : t.classes) {
    int rep_len = w.length(c.representative);
    long long at_min = 0;
    for (int e = 0; e < static_cast<int>(w.size()); ++e)
      if (t.class_of[static_cast<std::size_t>(e)] ==
              t.class_of[static_cast<std::size_t>(c.representative)] &&
          w.length(e) == rep_len)
        ++at_min;
    if (at_min != 1) {
      uniq.pass = false;
      uniq.counterexample = Json::object();
      uniq.counterexample["representative_word"] = word_json(w.element(c.representative).word);
      uniq.counterexample["elements_at_min_length"] = at_min;
      break;
    }
  }
  rep.stamps.push_back(std::move(uniq));
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"split root system, Weyl group and affine apartment toolkit"};
  app.require_subcommand(1);

  std::string format = "text";
  std::size_t cap = kDefaultEnumerationCap;
  std::string spec_text;
  std::string which = "all";
  std::string subset_text;
  std::string left_text, right_text;
  long long at_q = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("spec", spec_text, "root system, e.g. A2 or A1xB3")->required();
    sub->add_option("--format", format, "output format: json|tsv|text");
    sub->add_option("--cap", cap, "Weyl enumeration cap");
  };

  CLI::App* info = app.add_subcommand("info", "roots, marks, Weyl order, chamber vertices");
  add_common(info);
  CLI::App* admissible = app.add_subcommand("admissible", "admissible subsets with witnesses");
  add_common(admissible);
  CLI::App* verify = app.add_subcommand("verify", "run the lemma verification sweeps");
  add_common(verify);
  verify->add_option("--which", which, "all|closure|psi|levels|neighborhood|kernel")
      ->check(CLI::IsMember({"all", "closure", "psi", "levels", "neighborhood", "kernel"}));
  CLI::App* steinberg = app.add_subcommand("steinberg", "coset and alternating-sum polynomials");
  add_common(steinberg);
  steinberg->add_option("--subset", subset_text, "1-based simple indices, e.g. 1,3");
  CLI::Option* at_opt = steinberg->add_option("--at", at_q, "evaluate the polynomial at this q");
  CLI::App* cosets = app.add_subcommand("cosets", "double coset table for a pair of subsets");
  add_common(cosets);
  cosets->add_option("--left", left_text, "1-based indices of the left subset");
  cosets->add_option("--right", right_text, "1-based indices of the right subset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    using namespace parahoric;
    OutputFormat fmt = parse_format(format);
    RootSystem rs(spec_text);
    Report rep;
    if (app.got_subcommand(info)) {
      rep = cmd_info(rs);
    } else if (app.got_subcommand(admissible)) {
      rep = cmd_admissible(rs);
    } else if (app.got_subcommand(verify)) {
      rep = cmd_verify(rs, which, cap);
    } else if (app.got_subcommand(steinberg)) {
      SubsetI I = SubsetI::parse_one_based(subset_text, rs.rank());
      std::optional<long long> at;
      if (at_opt->count() > 0) at = at_q;
      rep = cmd_steinberg(rs, I, at, cap);
    } else {
      SubsetI I1 = SubsetI::parse_one_based(left_text, rs.rank());
      SubsetI I2 = SubsetI::parse_one_based(right_text, rs.rank());
      rep = cmd_cosets(rs, I1, I2, cap);
    }
    std::fputs(render(rep, fmt).c_str(), stdout);
    return exit_code_for(rep);
  } catch (const GroupTooLarge& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const RankTooLarge& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
