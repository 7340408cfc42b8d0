#include "hpt/les_engine.hpp"

#include <cctype>
#include <set>

#include "hpt/errors.hpp"

namespace hpt {

LesSpec LesSpec::rotated() const {
  return LesSpec{name + "-rotated", {nodes[2], nodes[0], nodes[1]}, d_h, d_f, d_g};
}

LesSpec LesSpec::totred() {
  return LesSpec{"TOTRED", {"H(L,i)", "H(L,i)", "HH(L)"}, {0, 2, 0}, {0, -1, 1}, {0, -1, 1}};
}

LesSpec LesSpec::les() { return LesSpec{"LES", {"K-", "K0", "K+"}, {1, 0, -1}, {1, 0, -1}, {-2, 0, 4}}; }

LesSpec LesSpec::ktotred() {
  return LesSpec{"KTOTRED", {"L-", "K", "L+"}, {1, 0, -1}, {1, 0, -1}, {-2, 0, 4}};
}

std::optional<LesSpec> LesSpec::builtin(std::string_view name) {
  std::string up;
  for (char c : name) up += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "TOTRED") return totred();
  if (up == "LES") return les();
  if (up == "KTOTRED") return ktotred();
  return std::nullopt;
}

std::optional<ExactnessWitness> check_exact(const LesSpec& spec, const Poincare& pa, const Poincare& pb,
                                            const Poincare& pc, const Grading& grading) {
  const std::array<Poincare, 3> p{grading.project(pa), grading.project(pb), grading.project(pc)};
  const std::array<TriDegree, 3> shift{grading.project(spec.d_f), grading.project(spec.d_g),
                                       grading.project(spec.d_h)};
  if (shift[0] + shift[1] + shift[2] == TriDegree{})
    throw Error("sequence " + spec.name + " has no net degree shift around the cycle in " + grading.name());

  std::array<Poincare, 3> kernel;
  std::array<std::set<TriDegree>, 3> seen;
  auto prev = [](int x) { return (x + 2) % 3; };

  for (int start = 0; start < 3; ++start) {
    for (const auto& [d0, m0] : p[start].terms()) {
      if (seen[start].count(d0)) continue;
      // Walk back to the first occupied position of this chain. Each full
      // turn moves the degree by the nonzero cycle shift, so this ends.
      int x = start;
      TriDegree d = d0;
      while (true) {
        int px = prev(x);
        TriDegree pd = d - shift[px];
        if (p[px].multiplicity(pd) == 0) break;
        x = px;
        d = pd;
      }
      // Along a chain the ranks are forced: rank_out = P - rank_in.
      Count rank_in = 0;
      while (true) {
        const Count& mult = p[x].multiplicity(d);
        if (mult == 0) {
          if (rank_in != 0) return std::nullopt;
          break;
        }
        Count rank_out = mult - rank_in;
        if (rank_out < 0) return std::nullopt;
        kernel[x].add(d, rank_in);
        seen[x].insert(d);
        rank_in = rank_out;
        d = d + shift[x];
        x = (x + 1) % 3;
      }
    }
  }
  return ExactnessWitness{kernel[0], kernel[1], kernel[2]};
}

TriDegree CornerSolution::source_unit(const AmbiguousPair& p) const {
  return p.source - grading.project(spec.d_f);
}

TriDegree CornerSolution::target_unit(const AmbiguousPair& p) const {
  return p.target + grading.project(spec.d_h);
}

std::size_t CornerSolution::total_capacity() const {
  Count s = 0;
  for (const auto& p : pairs) s += p.capacity;
  return s.convert_to<std::size_t>();
}

CornerSolution solve_corner(const LesSpec& spec, const Poincare& pb, const Poincare& pc, const Grading& grading) {
  CornerSolution sol;
  sol.spec = spec;
  sol.grading = grading;
  const Poincare b = grading.project(pb);
  const Poincare c = grading.project(pc);
  const TriDegree g = grading.project(spec.d_g);

  for (const auto& [m, bm] : b.terms()) {
    const Count& cn = c.multiplicity(m + g);
    Count cap = bm < cn ? bm : cn;
    if (bm > cap) sol.forced_kernel.add(m, bm - cap);
    if (cap > 0) sol.pairs.push_back({m, m + g, cap});
  }
  for (const auto& [n, cn] : c.terms()) {
    const Count& bm = b.multiplicity(n - g);
    if (cn > bm) sol.forced_cokernel.add(n, cn - bm);
  }
  sol.guaranteed = sol.forced_kernel.shifted(-grading.project(spec.d_f)) +
                   sol.forced_cokernel.shifted(grading.project(spec.d_h));
  return sol;
}

Poincare enumerate_candidates(const CornerSolution& sol, const std::vector<Count>& promoted) {
  if (promoted.size() != sol.pairs.size()) throw Error("promotion vector does not match the pair list");
  Poincare out = sol.guaranteed;
  for (std::size_t i = 0; i < promoted.size(); ++i) {
    const auto& pair = sol.pairs[i];
    if (promoted[i] < 0 || promoted[i] > pair.capacity) throw Error("promotion exceeds pair capacity");
    out.add(sol.source_unit(pair), promoted[i]);
    out.add(sol.target_unit(pair), promoted[i]);
  }
  return out;
}

}  // namespace hpt
