#include <doctest.h>

#include "hpt/errors.hpp"
#include "hpt/generator_table.hpp"
#include "hpt/homology_db.hpp"
#include "hpt/poly_text.hpp"

using namespace hpt;

namespace {

const Database& db() {
  static const Database d = Database::with_defaults();
  return d;
}

GeneratorTable published(const std::string& prefix) {
  return GeneratorTable::from_columns(db().get(prefix + "-guaranteed").family(),
                                      db().get(prefix + "-possible-m0").poincare(),
                                      db().get(prefix + "-possible-m-plus").poincare(), LesSpec::ktotred().cycle());
}

bool psi_symmetric_at(const FamilyPoincare& f, int n) {
  const Poincare p = Grading::sl(n).project(evaluate(f, n));
  return psi_dual(p) == p;
}

}  // namespace

TEST_SUITE("generator_table") {
  TEST_CASE("columns must pair up") {
    CHECK_THROWS_AS(GeneratorTable::from_columns({}, parse_poincare("a"), parse_poincare("a"), {0, 0, 2}), DataError);
    GeneratorTable t = GeneratorTable::from_columns({}, parse_poincare("a + 2q"), parse_poincare("at + 2qt"), {0, 0, 2});
    CHECK(t.vector_count() == 6);
    CHECK(t.candidate({2, 1}).as_poincare() == parse_poincare("a + at + 2q + 2qt"));
  }

  TEST_CASE("psi checker matches direct symmetry") {
    GeneratorTable t = GeneratorTable::from_columns(parse_family("[N]"), parse_poincare("a + a^-1t^-1"),
                                                    parse_poincare("at + a^-1"), {0, 0, 2});
    PsiChecker psi = PsiChecker::for_table(t, {2, 3, 4});
    for_each_vector({1, 1}, [&](const std::vector<Count>& x) {
      bool direct = true;
      for (int n : {2, 3, 4}) direct = direct && psi_symmetric_at(t.candidate(x), n);
      CHECK(psi.symmetric(x) == direct);
    });
  }

  TEST_CASE("every psi-accepted K0 candidate is symmetric at every rank") {
    GeneratorTable raw = corner_table(LesSpec::ktotred(), db().get("m0-total").family(),
                                      db().get("m-plus").family(), reference_ranks());
    ConstraintSet cs;
    cs.psi = true;
    CandidateSearch s = search_candidates(raw, cs, reference_ranks(), {2, 3, 4, 5});
    CHECK(s.enumerated == raw.vector_count());
    REQUIRE(s.examined.size() == 16);
    for (const auto& c : s.examined)
      for (int n : {3, 4, 5, 32, 35}) CHECK(psi_symmetric_at(c.family, n));
  }

  TEST_CASE("bounds of the psi search give the first published table") {
    GeneratorTable raw = corner_table(LesSpec::ktotred(), db().get("m0-total").family(),
                                      db().get("m-plus").family(), reference_ranks());
    ConstraintSet cs;
    cs.psi = true;
    auto t1 = search_candidates(raw, cs, reference_ranks(), {2, 3, 4, 5}).bounds();
    REQUIRE(t1);
    const GeneratorTable want = published("k0-table1");
    CHECK(same_family(t1->guaranteed, want.guaranteed));
    CHECK(t1->possible_from_b() == want.possible_from_b());
    CHECK(t1->possible_from_c() == want.possible_from_c());
  }

  TEST_CASE("published tables give the same search as computed ones") {
    ConstraintSet cs;
    cs.psi = true;
    cs.e1_limit = FamilyPoincare::string({}, BracketAtom{0});
    auto s = search_candidates(published("k0-table1"), cs, reference_ranks(), {2, 3, 4, 5});
    CHECK(s.accepted().size() == 4);
    auto t2 = s.bounds();
    REQUIRE(t2);
    const GeneratorTable want = published("k0-table2");
    CHECK(same_family(t2->guaranteed, want.guaranteed));
    CHECK(t2->possible_from_b() == want.possible_from_b());
  }

  TEST_CASE("the Khovanov filter singles out the reduced K0 homology") {
    ConstraintSet cs;
    cs.psi = true;
    cs.e1_limit = FamilyPoincare::string({}, BracketAtom{0});
    cs.khovanov = db().get("kh-L10n36").poincare();
    cs.khovanov_first_page = 2;
    auto s = search_candidates(published("k0-table2"), cs, reference_ranks(), {2, 3, 4, 5});
    auto acc = s.accepted();
    REQUIRE(acc.size() == 1);
    CHECK(same_family(acc.front()->family, db().get("k0-reduced").family()));
    // At N = 2 the reduced homology already has the size of Khovanov homology.
    CHECK(total_dim(acc.front()->family, 2) == 18);
  }
}
