#include <doctest.h>

#include "hpt/errors.hpp"
#include "hpt/homology_db.hpp"
#include "hpt/poly_text.hpp"

using namespace hpt;

namespace {

const Database& db() {
  static const Database d = Database::with_defaults();
  return d;
}

Poincare P(const char* s) { return parse_poincare(s); }
FamilyPoincare F(const char* s) { return parse_family(s); }

// Divides by q^-1 t^{1/2} + q t^{-1/2}, peeling off the term with the
// smallest (t, q) each time. Returns nullopt if the division is not exact.
std::optional<Poincare> divide_by_cone(Poincare p) {
  const TriDegree lo{0, 1, -1}, hi{0, -1, 1};
  Poincare quotient;
  while (!p.empty()) {
    TriDegree lead = p.terms().begin()->first;
    for (const auto& [d, m] : p.terms())
      if (d.t2 < lead.t2 || (d.t2 == lead.t2 && d.q > lead.q)) lead = d;
    const Count m = p.multiplicity(lead);
    TriDegree base = lead - lo;
    auto rest = p.try_subtract(Poincare::monomial(lead, m) + Poincare::monomial(base + hi, m));
    if (!rest) return std::nullopt;
    quotient.add(base, m);
    p = *rest;
  }
  return quotient;
}

}  // namespace

TEST_SUITE("homology_db") {
  TEST_CASE("Hopf link: kernel, cokernel and totally reduced homology") {
    const HomologyRecord& hopf = db().get("hopf+");
    REQUIRE(hopf.orbits);
    CHECK(same_family(hopf.orbits->underlying(), hopf.family()));
    XReduction x = x_string_total_reduce(*hopf.orbits);
    // Kernel aq^-1 + q^{N-1}(q^N t^-1)^2, cokernel aq^-1 + q^{-N+3}(q^N t^-1)^2,
    // written with q^N merged into a.
    CHECK(x.ker == P("aq^-1 + a^3q^-1t^-2"));
    CHECK(x.coker == P("aq^-1 + aq^3t^-2"));
    CHECK(x.total == P("a^3t^-5/2 + aq^-2t^1/2 + at^-1/2 + aq^2t^-3/2"));
    CHECK(x.total == db().get("hopf+-total").poincare());
  }

  TEST_CASE("cone formula for the trefoil") {
    Poincare t = cone_total_reduce_knot(db().get("trefoil+").poincare());
    CHECK(t.total_dim() == 6);
    CHECK(divide_by_cone(t) == db().get("trefoil+").poincare());
  }

  TEST_CASE("m0-total is the cone of a knot homology") {
    auto h = divide_by_cone(db().get("m0-total").poincare());
    REQUIRE(h);
    CHECK(cone_total_reduce_knot(*h) == db().get("m0-total").poincare());
    CHECK(psi_dual(*h) != *h);
  }

  TEST_CASE("connected sum reproduces H(M+)") {
    FamilyPoincare sum = connected_sum(connected_sum(db().get("hopf+").family(), db().get("trefoil+").family()),
                                       psi_dual(db().get("trefoil+").family()));
    FamilyPoincare printed = F(
        "a^3qt^-3 + aq^3t^-2 + a^3q^-3t^-1 + 3aq^-1 + a^-1qt + aq^-5t^2 + a^-1q^-3t^3"
        " + [N-1]a^4q^3t^-5 + [N-1]a^2q^5t^-4 + [N-1]a^4q^-1t^-3 + 3[N-1]a^2qt^-2"
        " + [N-1]q^3t^-1 + [N-1]a^2q^-3 + [N-1]q^-1t");
    CHECK(sum == printed);
    CHECK(same_family(sum, db().get("m-plus").family()));
    CHECK(psi_dual(db().get("trefoil+").family()) == db().get("trefoil-").family());
  }

  TEST_CASE("Khovanov records") {
    CHECK(db().get("kh-L10n36").poincare().total_dim() == 18);
    CHECK(db().get("kh-kt").poincare().total_dim() == 33);
    CHECK(db().get("kh-L10n59").poincare() == db().get("kh-L10n36").poincare());
  }

  TEST_CASE("orbit presentation of the reduced K0 homology") {
    const HomologyRecord& r = db().get("k0-reduced");
    REQUIRE(r.orbits);
    CHECK(r.orbits->size() == 25);
    int growing = 0;
    for (const auto& o : r.orbits->orbits) growing += o.length.grows;
    CHECK(growing == 9);
    CHECK(same_family(r.orbits->underlying(), r.family()));
  }

  TEST_CASE("published K0 totally reduced homology has 50 generators") {
    // Term count of the displayed sum, read with the missing '+' restored.
    CHECK(db().get("k0-total").poincare().total_dim() == 50);
    CHECK(db().get("kt-final").poincare().total_dim() == 49);
  }

  TEST_CASE("records round trip through the text format") {
    for (const auto& name : db().names()) {
      const HomologyRecord& r = db().get(name);
      auto back = parse_records(format_record(r));
      REQUIRE(back.size() == 1);
      CHECK(back[0].name == r.name);
      CHECK(back[0].kind == r.kind);
      CHECK(back[0].value_text() == r.value_text());
      CHECK(back[0].orbits.has_value() == r.orbits.has_value());
    }
  }

  TEST_CASE("parsing and validation errors") {
    CHECK(parse_records("").empty());
    CHECK(parse_records("# only a comment\n\n").empty());
    CHECK_THROWS_AS(parse_records("name: x\nkind: knot-reduced\nprovenance: p\nvalue: [N]\n"), SyntaxError);
    CHECK_THROWS_AS(parse_records("name: x\nkind: nonsense\nprovenance: p\nvalue: 1\n"), SyntaxError);
    try {
      parse_records("name: x\nkind: knot-reduced\nprovenance: p\nvalue: a +\n");
      FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
      CHECK(e.line() == 4);
    }
    auto multi = parse_records(
        "name: x\nkind: knot-reduced\nprovenance: p\nvalue: a\n  + q\n\nname: y\nkind: khovanov\nprovenance: p\n"
        "value: q^2t\n");
    REQUIRE(multi.size() == 2);
    CHECK(multi[0].poincare() == P("a + q"));
  }

  TEST_CASE("shadowing needs permission") {
    Database d = Database::with_defaults();
    const char* rec = "name: unknot\nkind: knot-reduced\nprovenance: test\nvalue: 2\n";
    CHECK_THROWS_AS(d.load_text(rec, "t", false), DuplicateName);
    std::vector<std::string> warnings;
    d.load_text(rec, "t", true, &warnings);
    CHECK(d.get("unknot").poincare() == P("2"));
    CHECK(warnings.size() == 1);
    CHECK_THROWS_AS(
        d.load_text("name: z\nkind: knot-reduced\nprovenance: a\nvalue: 1\n\nname: z\nkind: knot-reduced\n"
                    "provenance: b\nvalue: 1\n",
                    "t", true),
        DuplicateName);
    CHECK_THROWS_AS(d.get("no-such-record"), UnknownRecord);
    CHECK_THROWS_AS(d.load_file("/nonexistent/records.txt", false), DataError);
  }
}
