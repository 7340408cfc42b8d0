#pragma once

// Random instance generators and brute-force oracles shared by the unit
// tests and the acceptance runner.

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hpt/graded_poly.hpp"
#include "hpt/les_engine.hpp"
#include "hpt/ss_engine.hpp"

namespace hpt::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline TriDegree random_degree(Rng& rng, bool integral_t = true) {
  int t2 = integral_t ? 2 * uniform(rng, -3, 3) : uniform(rng, -6, 6);
  return {uniform(rng, -3, 3), uniform(rng, -4, 4), t2};
}

inline Poincare random_poincare(Rng& rng, int max_terms, bool integral_t = true) {
  Poincare p;
  int n = uniform(rng, 0, max_terms);
  for (int i = 0; i < n; ++i) p.add(random_degree(rng, integral_t), uniform(rng, 1, 2));
  return p;
}

inline FamilyPoincare random_family(Rng& rng, int max_terms) {
  FamilyPoincare f = random_poincare(rng, max_terms);
  int strings = uniform(rng, 0, 2);
  for (int i = 0; i < strings; ++i)
    f = f + FamilyPoincare::string(random_degree(rng), BracketAtom{uniform(rng, -2, 1)}, uniform(rng, 1, 2));
  return f;
}

// Sub-multisets of p, as a list of (degree, count) choices.
inline void for_each_submultiset(const Poincare& p, const std::function<void(const Poincare&)>& f) {
  std::vector<std::pair<TriDegree, long long>> terms;
  for (const auto& [d, m] : p.terms()) terms.emplace_back(d, m.convert_to<long long>());
  std::vector<long long> x(terms.size(), 0);
  while (true) {
    Poincare s;
    for (std::size_t i = 0; i < x.size(); ++i) s.add(terms[i].first, x[i]);
    f(s);
    std::size_t i = 0;
    while (i < x.size() && x[i] == terms[i].second) x[i++] = 0;
    if (i == x.size()) return;
    ++x[i];
  }
}

// Exactness by enumerating every possible kernel K_A of the first map; the
// other kernels are then forced by exactness and must close up.
inline bool brute_exact(const LesSpec& spec, const Poincare& pa, const Poincare& pb, const Poincare& pc,
                        const Grading& gr) {
  const Poincare a = gr.project(pa), b = gr.project(pb), c = gr.project(pc);
  const TriDegree f = gr.project(spec.d_f), g = gr.project(spec.d_g), h = gr.project(spec.d_h);
  bool found = false;
  for_each_submultiset(a, [&](const Poincare& ka) {
    if (found) return;
    auto image_a = a.try_subtract(ka);
    Poincare kb = image_a->shifted(f);
    auto image_b = b.try_subtract(kb);
    if (!image_b) return;
    Poincare kc = image_b->shifted(g);
    auto image_c = c.try_subtract(kc);
    if (!image_c) return;
    if (image_c->shifted(h) == ka) found = true;
  });
  return found;
}

// A random exact triangle: a direct sum of two-term pieces x -> x + shift
// between consecutive nodes.
inline std::array<Poincare, 3> random_exact_triple(Rng& rng, const LesSpec& spec, int pieces) {
  std::array<Poincare, 3> p;
  const std::array<TriDegree, 3> shift{spec.d_f, spec.d_g, spec.d_h};
  for (int i = 0; i < pieces; ++i) {
    int node = uniform(rng, 0, 2);
    TriDegree x = random_degree(rng, false);
    p[node].add(x, 1);
    p[(node + 1) % 3].add(x + shift[node], 1);
  }
  return p;
}

// Collapse by trying every cancellation order.
inline bool brute_collapse(const Poincare& e1, const Poincare& target, const DifferentialFamily& fam, int first,
                           int last, const Grading& gr) {
  const Poincare goal = gr.project(target);
  std::set<std::vector<std::pair<TriDegree, long long>>> seen;
  std::function<bool(const Poincare&)> go = [&](const Poincare& p) {
    if (gr.project(p) == goal) return true;
    std::vector<std::pair<TriDegree, long long>> key;
    for (const auto& [d, m] : p.terms()) key.emplace_back(d, m.convert_to<long long>());
    if (!seen.insert(key).second) return false;
    for (const auto& [d, m] : p.terms())
      for (int k = first; k <= last; ++k) {
        TriDegree up = d + fam.degree(k);
        if (p.multiplicity(up) == 0) continue;
        Poincare pair = Poincare::monomial(d) + Poincare::monomial(up);
        if (go(*p.try_subtract(pair))) return true;
      }
    return false;
  };
  return go(e1);
}

inline DifferentialFamily random_differential(Rng& rng) {
  int n = uniform(rng, 0, 3);
  return n == 0 ? DifferentialFamily::minus_one() : DifferentialFamily::sl(n);
}

inline Grading random_grading(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Grading::homfly();
    case 1:
      return Grading::sl(uniform(rng, 1, 3));
    default:
      return Grading::t_only();
  }
}

struct TrialSummary {
  int trials = 0;
  int feasible = 0;
  int mismatches = 0;
  std::string first_mismatch;
};

// collapse_feasible against brute_collapse on random instances with at most
// 12 generators. About half the instances are built to be feasible.
inline TrialSummary collapse_equivalence(int trials, std::uint64_t seed) {
  Rng rng(seed);
  TrialSummary s;
  for (int i = 0; i < trials; ++i) {
    const DifferentialFamily fam = random_differential(rng);
    const int first = uniform(rng, 1, 2), last = uniform(rng, first, 3);
    Poincare survivors = random_poincare(rng, 3, false);
    Poincare e1 = survivors;
    int pairs = uniform(rng, 0, 4);
    for (int j = 0; j < pairs && e1.total_dim() + 2 <= 12; ++j) {
      TriDegree x = random_degree(rng, false);
      e1.add(x, 1);
      e1.add(x + fam.degree(uniform(rng, 1, 3)), 1);
    }
    Poincare target = survivors;
    if (uniform(rng, 0, 1)) target.add(random_degree(rng, false), 1);
    if (uniform(rng, 0, 3) == 0) target = random_poincare(rng, 3, false);
    const Grading gr = random_grading(rng);
    CollapseOptions o;
    o.first_page = first;
    o.last_page = last;
    o.target_grading = gr;
    bool fast = collapse_feasible(e1, target, fam, o).has_value();
    bool slow = brute_collapse(e1, target, fam, first, last, gr);
    ++s.trials;
    s.feasible += slow;
    if (fast != slow && s.mismatches++ == 0)
      s.first_mismatch = "trial " + std::to_string(i) + " " + fam.name() + " " + gr.name();
  }
  return s;
}

// check_exact against brute_exact on random exact triples, half of them
// perturbed by one monomial.
inline TrialSummary exactness_equivalence(int trials, std::uint64_t seed) {
  Rng rng(seed);
  TrialSummary s;
  const std::array<LesSpec, 3> specs{LesSpec::les(), LesSpec::totred(), LesSpec::ktotred()};
  for (int i = 0; i < trials; ++i) {
    const LesSpec& spec = specs[uniform(rng, 0, 2)];
    auto p = random_exact_triple(rng, spec, uniform(rng, 0, 5));
    if (uniform(rng, 0, 1)) {
      int node = uniform(rng, 0, 2);
      if (!p[node].empty() && uniform(rng, 0, 1)) {
        TriDegree d = p[node].terms().begin()->first;
        p[node] = *p[node].try_subtract(Poincare::monomial(d));
      } else {
        p[node].add(random_degree(rng, false), 1);
      }
    }
    const Grading gr = uniform(rng, 0, 1) ? Grading::homfly() : Grading::sl(uniform(rng, 2, 4));
    if (gr.project(spec.cycle()) == TriDegree{}) continue;
    bool fast = check_exact(spec, p[0], p[1], p[2], gr).has_value();
    bool slow = brute_exact(spec, p[0], p[1], p[2], gr);
    ++s.trials;
    s.feasible += slow;
    if (fast != slow && s.mismatches++ == 0) s.first_mismatch = "trial " + std::to_string(i) + " " + spec.name;
  }
  return s;
}

inline LaurentPoly swap_inverse(const LaurentPoly& p) {
  LaurentPoly out;
  for (const auto& [e, c] : p.terms()) out.add(-e.first, -e.second, c);
  return out;
}

// Algebra laws on random inputs; returns the name of the first violated law.
inline std::optional<std::string> algebra_laws(int trials, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < trials; ++i) {
    Poincare x = random_poincare(rng, 6), y = random_poincare(rng, 6);
    FamilyPoincare f = random_family(rng, 4);
    FamilyPoincare g = random_poincare(rng, 4);
    if (psi_dual(psi_dual(x)) != x) return "psi involution (polynomial)";
    if (psi_dual(psi_dual(f)) != f) return "psi involution (family)";
    if (psi_dual(x * y) != psi_dual(x) * psi_dual(y)) return "psi multiplicative";
    if (euler_specialize(x * y) != euler_specialize(x) * euler_specialize(y)) return "Euler multiplicativity";
    if (euler_specialize(x + y) != euler_specialize(x) + euler_specialize(y)) return "Euler additivity";
    if (euler_specialize(psi_dual(x)) != swap_inverse(euler_specialize(x))) return "Euler of psi";
    if ((x + y).total_dim() != x.total_dim() + y.total_dim()) return "dimension additivity";
    if ((x * y).total_dim() != x.total_dim() * y.total_dim()) return "dimension multiplicativity";
    for (int n = std::max(1, f.min_n()); n <= std::max(1, f.min_n()) + 3; ++n) {
      const Grading gr = Grading::sl(n);
      if (total_dim(mul(f, g), n) != total_dim(f, n) * total_dim(g, n)) return "family dimension multiplicativity";
      if (gr.project(evaluate(mul(f, g), n)) != gr.project(evaluate(f, n) * evaluate(g, n)))
        return "evaluation multiplicative";
      if (gr.project(evaluate(psi_dual(f), n)) != gr.project(psi_dual(evaluate(f, n)))) return "psi commutes with N";
    }
  }
  return std::nullopt;
}

}  // namespace hpt::testing
