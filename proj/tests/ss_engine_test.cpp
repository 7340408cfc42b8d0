#include <doctest.h>

#include "hpt/homology_db.hpp"
#include "hpt/poly_text.hpp"
#include "hpt/ss_engine.hpp"
#include "support.hpp"

using namespace hpt;

namespace {

Poincare P(const char* s) { return parse_poincare(s); }

}  // namespace

TEST_SUITE("ss_engine") {
  TEST_CASE("differential degrees") {
    CHECK(DifferentialFamily::sl(2).degree(1) == TriDegree{-2, 4, 2});
    CHECK(DifferentialFamily::sl(3).degree(2) == TriDegree{-4, 12, 2});
    CHECK(DifferentialFamily::minus_one().degree(1) == TriDegree{0, 0, 2});
    CHECK(DifferentialFamily::minus_one().degree(2) == TriDegree{-2, -2, 6});
    CHECK(DifferentialFamily::sl(2).name() == "d(2)");
  }

  TEST_CASE("trefoil collapses to its Khovanov homology and to a point") {
    const Poincare t = P("a^2q^-2 + a^2q^2t^-2 + a^4t^-3");
    CollapseOptions o;
    o.target_grading = Grading::sl(2);
    auto w = collapse_feasible(t, Grading::sl(2).project(t), DifferentialFamily::sl(2), o);
    REQUIRE(w);
    CHECK(w->pair_count() == 0);
    // E_inf(1) of a knot is one generator at t^0.
    auto p = converge_to_point(t, DifferentialFamily::sl(1), 0);
    REQUIRE(p);
    CHECK(p->pair_count(1) == 1);
    CHECK(p->survivors == P("a^2q^-2"));
  }

  TEST_CASE("a single cancellation is found and located") {
    const DifferentialFamily d = DifferentialFamily::sl(2);
    Poincare e1 = P("1") + Poincare::monomial(d.degree(1)) + P("a^3");
    auto w = collapse_feasible(e1, P("a^3"), d);
    REQUIRE(w);
    CHECK(w->pages.at(1) == P("1"));
    CHECK_FALSE(collapse_feasible(e1, P("a^2"), d));
    // Pages before first_page may not cancel.
    CollapseOptions late;
    late.first_page = 2;
    CHECK_FALSE(collapse_feasible(e1, P("a^3"), d, late));
  }

  TEST_CASE("earliest collapse uses as few pages as possible") {
    const DifferentialFamily d = DifferentialFamily::sl(1);
    Poincare e1 = P("1") + Poincare::monomial(d.degree(2)) + P("a^5");
    auto w = collapse_earliest(e1, P("a^5"), d);
    REQUIRE(w);
    CHECK(w->pair_count(2) == 1);
    CHECK(w->pair_count(1) == 0);
  }

  TEST_CASE("flow solver agrees with exhaustive cancellation") {
    auto s = testing::collapse_equivalence(1500, 29);
    CHECK(s.trials >= 1000);
    CHECK(s.feasible > 100);
    CHECK(s.feasible < s.trials);
    CHECK_MESSAGE(s.mismatches == 0, s.first_mismatch);
  }

  TEST_CASE("if every differential vanishes the limit is the input") {
    testing::Rng rng(31);
    int vanishing = 0;
    for (int i = 0; i < 400; ++i) {
      Poincare p = testing::random_poincare(rng, 6);
      const DifferentialFamily d = testing::random_differential(rng);
      int last = std::max(1, d.last_useful_page(p));
      bool all = true;
      for (int k = 1; k <= last + 2; ++k) all = all && differential_vanishes(p, d, k);
      if (!all) continue;
      ++vanishing;
      CHECK(d.last_useful_page(p) == 0);
      CHECK(collapse_feasible(p, p, d).has_value());
      Poincare other = testing::random_poincare(rng, 6);
      if (other != p) CHECK_FALSE(collapse_feasible(p, other, d).has_value());
    }
    CHECK(vanishing > 50);
  }

  TEST_CASE("final KT homology onto its Khovanov homology") {
    const Database db = Database::with_defaults();
    const Poincare kt = db.get("kt-final").poincare(), kh = db.get("kh-kt").poincare();
    CollapseOptions o;
    o.target_grading = Grading::sl(2);
    auto w = collapse_earliest(kt, kh, DifferentialFamily::sl(2), o);
    REQUIRE(w);
    CHECK(w->pair_count() == 8);
    CHECK(w->pair_count(1) == 8);
    CHECK(Grading::sl(2).project(w->survivors) == kh);
    for (int n = 3; n <= 40; ++n)
      for (int k = 1; k <= 6; ++k) CHECK(differential_vanishes(kt, DifferentialFamily::sl(n), k));
  }
}
