#include "hpt/homology_db.hpp"

namespace hpt {

namespace {

constexpr std::string_view kRecords = R"REC(
# Base values and published intermediate results for the Kinoshita-Terasaka
# and Conway computations. Khovanov data uses q -> q^{-1} relative to KhoHo.

name: unknot
kind: knot-reduced
provenance: unknot
value: 1

name: trefoil+
kind: knot-reduced
provenance: positive trefoil, Rasmussen "Some differentials on Khovanov-Rozansky homology"
value: a^2q^-2 + a^2q^2t^-2 + a^4t^-3

name: trefoil-
kind: knot-reduced
provenance: negative trefoil, mirror of trefoil+
value: a^-2q^2 + a^-2q^-2t^2 + a^-4t^3

name: hopf+
kind: link-reduced
provenance: positive Hopf link, Rasmussen; X maps q^s to q^{s+2} along the [N-1] string
value: aq^-1 + [N-1]a^2qt^-2
orbits: (aq^-1, 1) (aq^3t^-2, N-1)

name: hopf+-total
kind: link-totally-reduced
provenance: positive Hopf link, totally reduced
value: a^3t^-5/2 + aq^-2t^1/2 + at^-1/2 + aq^2t^-3/2

name: m0-total
kind: link-totally-reduced
provenance: M0 = P(3,-1,2,-3), isotopic to the mirror of 8_20; totally reduced
value: a^4q^3t^-11/2 + a^2q^5t^-9/2 + a^4qt^-9/2 + a^4q^-1t^-7/2 + a^2q^3t^-7/2
  + 2a^2qt^-5/2 + a^4q^-3t^-5/2 + q^3t^-3/2 + 2a^2q^-1t^-3/2 + 2qt^-1/2
  + a^2q^-3t^-1/2 + 2q^-1t^1/2 + a^2q^-5t^1/2 + q^-3t^3/2

name: m-plus
kind: link-reduced
provenance: M+ = Hopf+ # trefoil+ # trefoil-, connected-sum formula
value: a^3qt^-3 + aq^3t^-2 + a^3q^-3t^-1 + 3aq^-1 + a^-1qt + aq^-5t^2 + a^-1q^-3t^3
  + [N-1]a^4q^3t^-5 + [N-1]a^2q^5t^-4 + [N-1]a^4q^-1t^-3 + 3[N-1]a^2qt^-2
  + [N-1]q^3t^-1 + [N-1]a^2q^-3 + [N-1]q^-1t

name: n0-total
kind: link-totally-reduced
provenance: Conway resolution N0 = P(3,-3,2), isotopic to M0
value: a^4q^3t^-11/2 + a^2q^5t^-9/2 + a^4qt^-9/2 + a^4q^-1t^-7/2 + a^2q^3t^-7/2
  + 2a^2qt^-5/2 + a^4q^-3t^-5/2 + q^3t^-3/2 + 2a^2q^-1t^-3/2 + 2qt^-1/2
  + a^2q^-3t^-1/2 + 2q^-1t^1/2 + a^2q^-5t^1/2 + q^-3t^3/2

name: n-plus
kind: link-reduced
provenance: Conway resolution N+, isotopic to M+
value: a^3qt^-3 + aq^3t^-2 + a^3q^-3t^-1 + 3aq^-1 + a^-1qt + aq^-5t^2 + a^-1q^-3t^3
  + [N-1]a^4q^3t^-5 + [N-1]a^2q^5t^-4 + [N-1]a^4q^-1t^-3 + 3[N-1]a^2qt^-2
  + [N-1]q^3t^-1 + [N-1]a^2q^-3 + [N-1]q^-1t

name: kh-L10n36
kind: khovanov
provenance: reduced Khovanov homology of K0 = L10n36 (KhoHo, q inverted)
value: q^9t^-5 + q^7t^-4 + q^5t^-3 + 2q^3t^-2 + q^3t^-1 + qt^-1 + 2q + 2q^-1
  + q^-1t + q^-3t + 2q^-3t^2 + q^-5t^3 + q^-7t^4 + q^-9t^5

name: kh-L10n59
kind: khovanov
provenance: reduced Khovanov homology of L0 = L10n59 (KhoHo, q inverted), equal to L10n36
value: q^9t^-5 + q^7t^-4 + q^5t^-3 + 2q^3t^-2 + q^3t^-1 + qt^-1 + 2q + 2q^-1
  + q^-1t + q^-3t + 2q^-3t^2 + q^-5t^3 + q^-7t^4 + q^-9t^5

name: kh-kt
kind: khovanov
provenance: reduced Khovanov homology of the Kinoshita-Terasaka knot
value: q^8t^-5 + 2q^6t^-4 + 2q^4t^-3 + 3q^2t^-2 + 3t^-1 + q^2t^-1 + 3 + 2q^-2
  + 2q^-2t + 2q^-4t + 3q^-4t^2 + q^-6t^2 + 3q^-6t^3 + 2q^-8t^4 + 2q^-10t^5 + q^-12t^6

name: kh-conway
kind: khovanov
provenance: reduced Khovanov homology of the Conway knot
value: q^8t^-5 + 2q^6t^-4 + 2q^4t^-3 + 3q^2t^-2 + 3t^-1 + q^2t^-1 + 3 + 2q^-2
  + 2q^-2t + 2q^-4t + 3q^-4t^2 + q^-6t^2 + 3q^-6t^3 + 2q^-8t^4 + 2q^-10t^5 + q^-12t^6

name: homfly-kt
kind: homfly-polynomial
provenance: HOMFLY-PT polynomial of the Kinoshita-Terasaka knot
value: a^-4q^-4 - a^-4q^-2 + 2a^-4 - a^-4q^2 + a^-4q^4
  - a^-2q^-6 - 2a^-2q^-2 - 2a^-2q^2 - a^-2q^6
  + q^-6 + 2q^-2 + 1 + 2q^2 + q^6
  - a^2q^-4 + a^2q^-2 - 2a^2 + a^2q^2 - a^2q^4

name: homfly-conway
kind: homfly-polynomial
provenance: HOMFLY-PT polynomial of the Conway knot
value: a^-4q^-4 - a^-4q^-2 + 2a^-4 - a^-4q^2 + a^-4q^4
  - a^-2q^-6 - 2a^-2q^-2 - 2a^-2q^2 - a^-2q^6
  + q^-6 + 2q^-2 + 1 + 2q^2 + q^6
  - a^2q^-4 + a^2q^-2 - 2a^2 + a^2q^2 - a^2q^4

name: k0-table1-guaranteed
kind: link-reduced
provenance: first list of guaranteed generators of H(K0), as printed
value: a^3q^3t^-5 + aq^5t^-4 + a^3q^-1t^-3 + aq^5t^-3 + [N-3]a^2q^3t^-3
  + aqt^-2 + [N-2]q^4t^-2 + aqt^-1 + [N-3]a^2q^-1t^-1
  + a^-1q + aq^-1 + 3[N-2] + [N-2]a^-2q^2t
  + a^-1q^-1t^2 + [N-2]q^-4t^2 + a^-3qt^3 + [N-2]a^-2q^-2t^3
  + a^-1q^-5t^4 + a^-3q^-3t^5

name: k0-table1-possible-m0
kind: link-reduced
provenance: first list of possible generators of H(K0) coming from M0
value: aq^3t^-3 + aqt^-2 + a^-1q^3t^-1 + aq^-1t^-1 + a^-1q + aq^-3 + a^-1q^-1t + a^-1q^-3t^2

name: k0-table1-possible-m-plus
kind: link-reduced
provenance: first list of possible generators of H(K0) coming from M+
value: aq^3t^-2 + aqt^-1 + a^-1q^3 + aq^-1 + a^-1qt + aq^-3t + a^-1q^-1t^2 + a^-1q^-3t^3

name: k0-table2-guaranteed
kind: link-reduced
provenance: updated list of guaranteed generators of H(K0), as printed
value: a^3q^3t^-5 + aq^5t^-4 + a^3q^-1t^-3 + aq^5t^-3 + [N-3]a^2q^3t^-3
  + aqt^-2 + [N-2]q^4t^-2 + aqt^-1 + [N-3]a^2q^-1t^-1
  + a^-1q + aq^-1 + 3[N-2] + [N-2]a^-2q^2t
  + a^-1q^-1t^2 + [N-2]q^-4t^2 + a^-3qt^3 + [N-2]a^-2q^-2t^3
  + a^-1q^-5t^4 + a^-3q^-3t^5

name: k0-table2-possible-m0
kind: link-reduced
provenance: updated list of possible generators of H(K0) coming from M0
value: aqt^-2 + a^-1q^3t^-1 + aq^-1t^-1 + a^-1q + aq^-3 + a^-1q^-1t

name: k0-table2-possible-m-plus
kind: link-reduced
provenance: updated list of possible generators of H(K0) coming from M+
value: aqt^-1 + a^-1q^3 + aq^-1 + a^-1qt + aq^-3t + a^-1q^-1t^2

name: k0-reduced
kind: link-reduced
provenance: reduced HOMFLY-PT homology of K0 = P(3,-2,2,-3) = L10n36
value: a^3q^3t^-5 + aq^5t^-4 + a^3q^-1t^-3 + [N-2]a^2q^2t^-3 + 2aqt^-2 + [N-2]q^4t^-2
  + [N-2]a^2q^-2t^-1 + a^-1q^3t^-1 + aqt^-1
  + a^-1q + aq^-1 + a^-1q^3 + aq^-3 + 3[N-2]
  + aq^-3t + a^-1q^-1t + [N-2]a^-2q^2t + 2a^-1q^-1t^2 + [N-2]q^-4t^2
  + a^-3qt^3 + [N-2]a^-2q^-2t^3 + a^-1q^-5t^4 + a^-3q^-3t^5
orbits: (aq^5t^-3, N-2) (a^-1q^7t^-2, N-2) (aqt^-1, N-2) (a^-1q, N)
  (a^-1q^3, N-2) (a^-1q^3, N-2) (a^-3q^5t, N-2) (a^-1q^-1t^2, N-2) (a^-3qt^3, N-2)
  (a^3q^3t^-5, 1) (aq^5t^-4, 1) (a^3q^-1t^-3, 1) (aqt^-2, 1) (aqt^-2, 1)
  (a^-1q^3t^-1, 1) (aqt^-1, 1) (a^-1q^3, 1) (aq^-3, 1) (aq^-3t, 1) (a^-1q^-1t, 1)
  (a^-1q^-1t^2, 1) (a^-1q^-1t^2, 1) (a^-3qt^3, 1) (a^-1q^-5t^4, 1) (a^-3q^-3t^5, 1)

name: k0-total
kind: link-totally-reduced
provenance: totally reduced HOMFLY-PT homology of K0; string tops and bottoms carry their t-degrees
value: a^3q^4t^-11/2 + aq^6t^-9/2 + a^3q^2t^-9/2 + aq^4t^-7/2 + 2a^3t^-7/2
  + 3aq^2t^-5/2 + aq^4t^-5/2 + a^3q^-2t^-5/2 + a^-1q^4t^-3/2 + a^-1q^6t^-3/2
  + 2at^-3/2 + aq^2t^-3/2 + a^3q^-4t^-3/2 + a^-1q^2t^-1/2 + a^-1q^4t^-1/2
  + 3aq^-2t^-1/2 + 3at^-1/2 + 3a^-1t^1/2 + 3a^-1q^2t^1/2 + aq^-4t^1/2
  + aq^-2t^1/2 + a^-3q^4t^3/2 + a^-1q^-2t^3/2 + 2a^-1t^3/2 + aq^-6t^3/2
  + aq^-4t^3/2 + a^-3q^2t^5/2 + a^-1q^-4t^5/2 + 3a^-1q^-2t^5/2 + 2a^-3t^7/2
  + a^-1q^-4t^7/2 + a^-3q^-2t^9/2 + a^-1q^-6t^9/2 + a^-3q^-4t^11/2

name: kt-final
kind: knot-reduced
provenance: reduced HOMFLY-PT homology of the Kinoshita-Terasaka knot
value: a^2q^4t^-5 + q^6t^-4 + a^2q^2t^-4 + 2a^2t^-3 + q^4t^-3
  + 3q^2t^-2 + a^2q^-2t^-2 + q^4t^-2
  + a^-2q^6t^-1 + a^2q^-4t^-1 + a^-2q^4t^-1 + 2t^-1 + q^2t^-1
  + 3 + 3q^-2 + a^-2q^2 + a^-2q^4
  + 3a^-2q^2t + q^-2t + 2a^-2t + q^-4t
  + a^-4q^4t^2 + q^-6t^2 + 2a^-2t^2 + q^-4t^2 + a^-2q^-2t^2
  + 3a^-2q^-2t^3 + a^-4q^2t^3 + a^-2q^-4t^3 + 2a^-4t^4 + a^-2q^-4t^4
  + a^-4q^-2t^5 + a^-2q^-6t^5 + a^-4q^-4t^6

name: conway-final
kind: knot-reduced
provenance: reduced HOMFLY-PT homology of the Conway knot
value: a^2q^4t^-5 + q^6t^-4 + a^2q^2t^-4 + 2a^2t^-3 + q^4t^-3
  + 3q^2t^-2 + a^2q^-2t^-2 + q^4t^-2
  + a^-2q^6t^-1 + a^2q^-4t^-1 + a^-2q^4t^-1 + 2t^-1 + q^2t^-1
  + 3 + 3q^-2 + a^-2q^2 + a^-2q^4
  + 3a^-2q^2t + q^-2t + 2a^-2t + q^-4t
  + a^-4q^4t^2 + q^-6t^2 + 2a^-2t^2 + q^-4t^2 + a^-2q^-2t^2
  + 3a^-2q^-2t^3 + a^-4q^2t^3 + a^-2q^-4t^3 + 2a^-4t^4 + a^-2q^-4t^4
  + a^-4q^-2t^5 + a^-2q^-6t^5 + a^-4q^-4t^6
)REC";

}  // namespace

std::string_view embedded_records_text() { return kRecords; }

}  // namespace hpt
