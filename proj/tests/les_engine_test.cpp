#include <doctest.h>

#include "hpt/errors.hpp"
#include "hpt/generator_table.hpp"
#include "hpt/homology_db.hpp"
#include "hpt/les_engine.hpp"
#include "hpt/poly_text.hpp"
#include "support.hpp"

using namespace hpt;

namespace {

Poincare P(const char* s) { return parse_poincare(s); }

}  // namespace

TEST_SUITE("les_engine") {
  TEST_CASE("trefoil sequence from the unknot and the Hopf link") {
    const Database db = Database::with_defaults();
    const Poincare unknot = db.get("unknot").poincare();
    const Poincare t = db.get("trefoil+").poincare();
    const Poincare h = db.get("hopf+-total").poincare();
    for (int n : {2, 3, 4, 5, 8}) {
      CAPTURE(n);
      auto w = check_exact(LesSpec::les(), unknot, h, t, Grading::sl(n));
      CHECK(w.has_value());
      CHECK(testing::brute_exact(LesSpec::les(), unknot, h, t, Grading::sl(n)));
    }
  }

  TEST_CASE("trivial sequences") {
    const LesSpec s = LesSpec::les();
    CHECK(check_exact(s, {}, {}, {}).has_value());
    // One isomorphism A -> B.
    CHECK(check_exact(s, P("1"), Poincare::monomial(s.d_f), {}).has_value());
    CHECK_FALSE(check_exact(s, P("1"), {}, {}).has_value());
    CHECK_FALSE(check_exact(s, P("1"), P("1"), {}).has_value());
  }

  TEST_CASE("witness kernels satisfy exactness") {
    testing::Rng rng(3);
    const LesSpec s = LesSpec::totred();
    for (int i = 0; i < 200; ++i) {
      auto p = testing::random_exact_triple(rng, s, testing::uniform(rng, 0, 6));
      auto w = check_exact(s, p[0], p[1], p[2]);
      REQUIRE(w);
      CHECK(w->k_b == p[0].try_subtract(w->k_a)->shifted(s.d_f));
      CHECK(w->k_c == p[1].try_subtract(w->k_b)->shifted(s.d_g));
      CHECK(w->k_a == p[2].try_subtract(w->k_c)->shifted(s.d_h));
    }
  }

  TEST_CASE("zero cycle shift is rejected") {
    LesSpec flat{"flat", {"A", "B", "C"}, {1, 0, 0}, {-1, 0, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(check_exact(flat, P("1"), P("a"), {}), Error);
    // The sl(N) projection can also kill the cycle shift.
    LesSpec tilted{"tilted", {"A", "B", "C"}, {1, 0, 0}, {0, -2, 0}, {0, 0, 0}};
    CHECK_THROWS_AS(check_exact(tilted, P("1"), P("a"), {}, Grading::sl(2)), Error);
  }

  TEST_CASE("check_exact agrees with brute force") {
    auto s = testing::exactness_equivalence(1500, 17);
    CHECK(s.trials >= 1000);
    CHECK(s.feasible > 0);
    CHECK(s.feasible < s.trials);
    CHECK_MESSAGE(s.mismatches == 0, s.first_mismatch);
  }

  TEST_CASE("the true first node is among the corner candidates") {
    testing::Rng rng(23);
    for (const LesSpec& spec : {LesSpec::les(), LesSpec::totred()}) {
      for (int i = 0; i < 200; ++i) {
        auto p = testing::random_exact_triple(rng, spec, testing::uniform(rng, 0, 6));
        CornerSolution sol = solve_corner(spec, p[1], p[2]);
        std::vector<Count> caps;
        for (const auto& pair : sol.pairs) caps.push_back(pair.capacity);
        bool found = false;
        for_each_vector(caps, [&](const std::vector<Count>& x) {
          Poincare cand = enumerate_candidates(sol, x);
          found = found || cand == p[0];
          CHECK(check_exact(spec, cand, p[1], p[2]).has_value());
        });
        CHECK(found);
      }
    }
  }

  TEST_CASE("forced kernel and cokernel") {
    const LesSpec s = LesSpec::les();
    // B has a generator with no partner in C: it must come from A.
    CornerSolution sol = solve_corner(s, P("q"), {});
    CHECK(sol.forced_kernel == P("q"));
    CHECK(sol.pairs.empty());
    CHECK(sol.guaranteed == P("q").shifted(-s.d_f));
    // A generator of B with a partner of C is ambiguous.
    sol = solve_corner(s, P("q"), Poincare::monomial(TriDegree{0, 1, 0} + s.d_g));
    REQUIRE(sol.pairs.size() == 1);
    CHECK(sol.guaranteed.empty());
    CHECK(enumerate_candidates(sol, {1}).total_dim() == 2);
    CHECK_THROWS_AS(enumerate_candidates(sol, {2}), Error);
  }

  TEST_CASE("rotation") {
    LesSpec r = LesSpec::les().rotated();
    CHECK(r.d_f == LesSpec::les().d_h);
    CHECK(r.cycle() == LesSpec::les().cycle());
    CHECK(LesSpec::builtin("ktotred").has_value());
    CHECK_FALSE(LesSpec::builtin("nope").has_value());
  }
}
