#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpt/graded_poly.hpp"

namespace hpt {

// A 3-periodic long exact sequence A -f-> B -g-> C -h-> A with fixed map
// degrees. Degrees of the (N, .) sl(N) shifts are written as a-shifts.
struct LesSpec {
  std::string name;
  std::array<std::string, 3> nodes;
  TriDegree d_f;
  TriDegree d_g;
  TriDegree d_h;

  TriDegree cycle() const { return d_f + d_g + d_h; }
  // The same sequence read from C: (C, A, B) with maps (h, f, g).
  LesSpec rotated() const;

  static LesSpec totred();
  static LesSpec les();
  static LesSpec ktotred();
  static std::optional<LesSpec> builtin(std::string_view name);
};

// Kernels of the outgoing map at each node. Exactness means
// K_A = d_h (P_C - K_C), K_B = d_f (P_A - K_A), K_C = d_g (P_B - K_B).
struct ExactnessWitness {
  Poincare k_a;
  Poincare k_b;
  Poincare k_c;
};

// All degrees are compared after projecting through `grading`; the witness is
// expressed in projected degrees.
std::optional<ExactnessWitness> check_exact(const LesSpec& spec, const Poincare& pa, const Poincare& pb,
                                            const Poincare& pc, const Grading& grading = Grading::homfly());

// `capacity` generators of B at `source` may or may not map onto generators
// of C at `target`.
struct AmbiguousPair {
  TriDegree source;
  TriDegree target;
  Count capacity;
};

struct CornerSolution {
  LesSpec spec;
  Grading grading = Grading::homfly();
  Poincare forced_kernel;
  Poincare forced_cokernel;
  Poincare guaranteed;
  std::vector<AmbiguousPair> pairs;

  // Degrees in A contributed by one surviving unit of a pair.
  TriDegree source_unit(const AmbiguousPair& p) const;
  TriDegree target_unit(const AmbiguousPair& p) const;
  std::size_t total_capacity() const;
};

// Unknown A from known B and C.
CornerSolution solve_corner(const LesSpec& spec, const Poincare& pb, const Poincare& pc,
                            const Grading& grading = Grading::homfly());

// promoted[i] survivors of pair i, 0 <= promoted[i] <= capacity.
Poincare enumerate_candidates(const CornerSolution& sol, const std::vector<Count>& promoted);

}  // namespace hpt
