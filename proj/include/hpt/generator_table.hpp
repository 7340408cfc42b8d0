#pragma once

#include <optional>
#include <vector>

#include "hpt/graded_poly.hpp"
#include "hpt/les_engine.hpp"

namespace hpt {

// A promotable pair of the unknown node: `capacity` copies of the source unit
// (from the middle node) and of unit + step (from the last node) survive
// together or not at all.
struct PromotionPair {
  TriDegree unit;
  Count capacity;
  friend bool operator==(const PromotionPair&, const PromotionPair&) = default;
};

// Guaranteed and possible generators of an unknown homology, in generic
// (N-independent) form.
struct GeneratorTable {
  FamilyPoincare guaranteed;
  std::vector<PromotionPair> pairs;
  TriDegree step{0, 0, 2};

  Poincare possible_from_b() const;
  Poincare possible_from_c() const;
  FamilyPoincare candidate(const std::vector<Count>& promoted) const;
  // Product of (capacity + 1) over all pairs.
  Count vector_count() const;

  // Rebuilds the pair list from printed columns; the two columns must differ
  // exactly by `step`.
  static GeneratorTable from_columns(const FamilyPoincare& guaranteed, const Poincare& from_b,
                                     const Poincare& from_c, TriDegree step);
};

// Corner solve of `spec` at every rank in `ranks` (sl(N) grading), then
// re-assembly of the guaranteed family and of the pair units.
GeneratorTable corner_table(const LesSpec& spec, const FamilyPoincare& b, const FamilyPoincare& c,
                            const std::vector<int>& ranks);

// Checks symmetry under psi(a,q,t) = (1/a,1/q,1/t) of candidate polynomials
// base + sum x_p * unit_p, one linear system per evaluation.
class PsiChecker {
 public:
  struct View {
    Poincare base;
    std::vector<Poincare> units;
  };

  explicit PsiChecker(const std::vector<View>& views);
  // Views of a generic table at the given sl ranks (ranks where the family
  // is undefined are skipped).
  static PsiChecker for_table(const GeneratorTable& t, const std::vector<int>& ranks);

  bool symmetric(const std::vector<Count>& x) const;

 private:
  struct Row {
    Count constant;
    std::vector<long long> coeff;
  };
  bool hopeless_ = false;
  std::vector<Row> rows_;
};

// Calls f on every promotion vector 0 <= x_p <= capacity_p.
template <class F>
void for_each_vector(const std::vector<Count>& caps, F&& f) {
  std::vector<Count> x(caps.size(), 0);
  while (true) {
    f(static_cast<const std::vector<Count>&>(x));
    std::size_t i = 0;
    while (i < x.size() && x[i] == caps[i]) x[i++] = 0;
    if (i == x.size()) return;
    ++x[i];
  }
}

struct ConstraintSet {
  bool psi = false;
  // Expected E_inf(1) (e.g. [N] for a two-component link, 1 for a knot),
  // compared by homological degree only.
  std::optional<FamilyPoincare> e1_limit;
  // Expected E_inf(2) in (q,t)-grading; pages from khovanov_first_page on.
  std::optional<Poincare> khovanov;
  int khovanov_first_page = 1;
  std::optional<LaurentPoly> euler;
  // Also record whether d(-1) collapses onto e1_limit; never used to reject.
  bool report_minus_one = false;
};

struct CandidateOutcome {
  std::vector<Count> promoted;
  FamilyPoincare family;
  bool psi = true;
  bool euler = true;
  bool e1 = true;
  bool e2 = true;
  std::optional<bool> minus_one;

  bool accepted() const { return psi && euler && e1 && e2; }
};

struct CandidateSearch {
  GeneratorTable table;
  Count enumerated = 0;
  // Outcomes for every vector passing psi (all vectors if psi is off).
  std::vector<CandidateOutcome> examined;

  std::vector<const CandidateOutcome*> accepted() const;
  // Guaranteed = minimum over accepted vectors, possible = max - min.
  std::optional<GeneratorTable> bounds() const;
};

CandidateSearch search_candidates(const GeneratorTable& table, const ConstraintSet& cs,
                                  const std::vector<int>& check_ranks, const std::vector<int>& eval_ranks);

// Guaranteed/possible table of a single corner solution at fixed grading,
// bounded by psi symmetry. Used for per-N cross-checks.
struct FixedRankTable {
  Poincare guaranteed;
  Poincare from_b;
  Poincare from_c;
  std::size_t feasible = 0;
};
FixedRankTable psi_bounded_corner(const CornerSolution& sol);

}  // namespace hpt
