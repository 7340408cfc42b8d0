#include "hpt/generator_table.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hpt/errors.hpp"
#include "hpt/ss_engine.hpp"

namespace hpt {

Poincare GeneratorTable::possible_from_b() const {
  Poincare p;
  for (const auto& pp : pairs) p.add(pp.unit, pp.capacity);
  return p;
}

Poincare GeneratorTable::possible_from_c() const {
  Poincare p;
  for (const auto& pp : pairs) p.add(pp.unit + step, pp.capacity);
  return p;
}

FamilyPoincare GeneratorTable::candidate(const std::vector<Count>& promoted) const {
  if (promoted.size() != pairs.size()) throw Error("promotion vector does not match the pair list");
  Poincare extra;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (promoted[i] < 0 || promoted[i] > pairs[i].capacity) throw Error("promotion exceeds pair capacity");
    extra.add(pairs[i].unit, promoted[i]);
    extra.add(pairs[i].unit + step, promoted[i]);
  }
  return guaranteed + FamilyPoincare(extra);
}

Count GeneratorTable::vector_count() const {
  Count n = 1;
  for (const auto& pp : pairs) n *= pp.capacity + 1;
  return n;
}

GeneratorTable GeneratorTable::from_columns(const FamilyPoincare& guaranteed, const Poincare& from_b,
                                            const Poincare& from_c, TriDegree step) {
  if (from_b.shifted(step) != from_c)
    throw DataError("possible columns are not paired by the sequence");
  GeneratorTable t;
  t.guaranteed = guaranteed;
  t.step = step;
  for (const auto& [d, m] : from_b.terms()) t.pairs.push_back({d, m});
  return t;
}

GeneratorTable corner_table(const LesSpec& spec, const FamilyPoincare& b, const FamilyPoincare& c,
                            const std::vector<int>& ranks) {
  std::map<int, Poincare> guaranteed, units;
  for (int n : ranks) {
    CornerSolution sol = solve_corner(spec, evaluate(b, n), evaluate(c, n), Grading::sl(n));
    guaranteed.emplace(n, sol.guaranteed);
    Poincare u;
    for (const auto& p : sol.pairs) u.add(sol.source_unit(p), p.capacity);
    units.emplace(n, u);
  }
  GeneratorTable t;
  t.guaranteed = assemble_family(guaranteed);
  t.step = spec.cycle();
  const Poincare lifted = assemble_points(units);
  for (const auto& [d, m] : lifted.terms()) t.pairs.push_back({d, m});
  return t;
}

PsiChecker::PsiChecker(const std::vector<View>& views) {
  for (const auto& v : views) {
    std::set<TriDegree> support;
    for (const auto& [d, m] : v.base.terms()) support.insert(d);
    for (const auto& u : v.units)
      for (const auto& [d, m] : u.terms()) support.insert(d);
    std::set<TriDegree> done;
    for (TriDegree d : support) {
      TriDegree rep = std::min(d, -d);
      if (rep == -rep || !done.insert(rep).second) continue;
      Row row;
      row.constant = v.base.multiplicity(rep) - v.base.multiplicity(-rep);
      bool any = false;
      for (const auto& u : v.units) {
        Count c = u.multiplicity(rep) - u.multiplicity(-rep);
        row.coeff.push_back(c.convert_to<long long>());
        any = any || c != 0;
      }
      if (!any) {
        if (row.constant != 0) hopeless_ = true;
        continue;
      }
      rows_.push_back(std::move(row));
    }
  }
}

PsiChecker PsiChecker::for_table(const GeneratorTable& t, const std::vector<int>& ranks) {
  std::vector<View> views;
  for (int n : ranks) {
    if (n < t.guaranteed.min_n()) continue;
    View v;
    v.base = sl_specialize(evaluate(t.guaranteed, n), n);
    for (const auto& pp : t.pairs) {
      Poincare u = Poincare::monomial(Grading::sl(n).project(pp.unit)) +
                   Poincare::monomial(Grading::sl(n).project(pp.unit + t.step));
      v.units.push_back(u);
    }
    views.push_back(std::move(v));
  }
  return PsiChecker(views);
}

bool PsiChecker::symmetric(const std::vector<Count>& x) const {
  if (hopeless_) return false;
  for (const auto& row : rows_) {
    Count s = row.constant;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (row.coeff[i] != 0) s += row.coeff[i] * x[i];
    if (s != 0) return false;
  }
  return true;
}

std::vector<const CandidateOutcome*> CandidateSearch::accepted() const {
  std::vector<const CandidateOutcome*> out;
  for (const auto& c : examined)
    if (c.accepted()) out.push_back(&c);
  return out;
}

std::optional<GeneratorTable> CandidateSearch::bounds() const {
  auto acc = accepted();
  if (acc.empty()) return std::nullopt;
  const std::size_t n = table.pairs.size();
  std::vector<Count> lo = acc.front()->promoted, hi = lo;
  for (const auto* c : acc)
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], c->promoted[i]);
      hi[i] = std::max(hi[i], c->promoted[i]);
    }
  GeneratorTable out;
  out.step = table.step;
  out.guaranteed = canonical(table.candidate(lo));
  for (std::size_t i = 0; i < n; ++i)
    if (hi[i] > lo[i]) out.pairs.push_back({table.pairs[i].unit, hi[i] - lo[i]});
  return out;
}

namespace {

std::vector<int> defined_ranks(const std::vector<int>& ranks, int min_n) {
  std::vector<int> out;
  for (int n : ranks)
    if (n >= std::max(1, min_n)) out.push_back(n);
  return out;
}

bool collapses_everywhere(const FamilyPoincare& fam, const FamilyPoincare& limit, const DifferentialFamily& d,
                          const std::vector<int>& ranks) {
  auto usable = defined_ranks(ranks, std::max(fam.min_n(), limit.min_n()));
  if (usable.empty()) return false;
  CollapseOptions o;
  o.target_grading = Grading::t_only();
  for (int n : usable)
    if (!collapse_feasible(evaluate(fam, n), evaluate(limit, n), d, o)) return false;
  return true;
}

}  // namespace

CandidateSearch search_candidates(const GeneratorTable& input, const ConstraintSet& cs,
                                  const std::vector<int>& check_ranks, const std::vector<int>& eval_ranks) {
  // Evaluations of equal families agree only in sl(N) degrees unless both
  // are in canonical form, and the filters below read exact degrees.
  GeneratorTable table = input;
  table.guaranteed = canonical(input.guaranteed);
  CandidateSearch out;
  out.table = table;
  std::optional<PsiChecker> psi;
  if (cs.psi) {
    std::vector<int> ranks = check_ranks;
    ranks.insert(ranks.end(), eval_ranks.begin(), eval_ranks.end());
    psi.emplace(PsiChecker::for_table(table, ranks));
  }
  std::vector<Count> caps;
  for (const auto& pp : table.pairs) caps.push_back(pp.capacity);

  for_each_vector(caps, [&](const std::vector<Count>& x) {
    ++out.enumerated;
    if (psi && !psi->symmetric(x)) return;
    CandidateOutcome c;
    c.promoted = x;
    c.family = table.candidate(x);
    if (cs.euler) {
      auto plain = c.family.as_poincare();
      c.euler = plain && euler_specialize(*plain) == *cs.euler;
    }
    if (cs.e1_limit) c.e1 = collapses_everywhere(c.family, *cs.e1_limit, DifferentialFamily::sl(1), eval_ranks);
    if (cs.khovanov) {
      if (c.family.min_n() > 2) {
        c.e2 = false;
      } else {
        CollapseOptions o;
        o.first_page = cs.khovanov_first_page;
        o.target_grading = Grading::sl(2);
        c.e2 = collapse_feasible(evaluate(c.family, 2), *cs.khovanov, DifferentialFamily::sl(2), o).has_value();
      }
    }
    if (cs.report_minus_one && cs.e1_limit)
      c.minus_one = collapses_everywhere(c.family, *cs.e1_limit, DifferentialFamily::minus_one(), eval_ranks);
    out.examined.push_back(std::move(c));
  });
  return out;
}

FixedRankTable psi_bounded_corner(const CornerSolution& sol) {
  PsiChecker::View v;
  v.base = sol.guaranteed;
  std::vector<Count> caps;
  for (const auto& p : sol.pairs) {
    v.units.push_back(Poincare::monomial(sol.source_unit(p)) + Poincare::monomial(sol.target_unit(p)));
    caps.push_back(p.capacity);
  }
  PsiChecker psi({v});
  std::optional<std::vector<Count>> lo, hi;
  FixedRankTable out;
  for_each_vector(caps, [&](const std::vector<Count>& x) {
    if (!psi.symmetric(x)) return;
    ++out.feasible;
    if (!lo) {
      lo = x;
      hi = x;
      return;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      (*lo)[i] = std::min((*lo)[i], x[i]);
      (*hi)[i] = std::max((*hi)[i], x[i]);
    }
  });
  if (!lo) return out;
  out.guaranteed = enumerate_candidates(sol, *lo);
  for (std::size_t i = 0; i < caps.size(); ++i) {
    Count extra = (*hi)[i] - (*lo)[i];
    out.from_b.add(sol.source_unit(sol.pairs[i]), extra);
    out.from_c.add(sol.target_unit(sol.pairs[i]), extra);
  }
  return out;
}

}  // namespace hpt
