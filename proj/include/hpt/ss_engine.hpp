#pragma once

#include <map>
#include <optional>
#include <string>

#include "hpt/graded_poly.hpp"

namespace hpt {

// The differentials d_k(N) of degree (-2k, 2Nk, 1) and d_k(-1) of degree
// (2-2k, 2-2k, 2k-1) on reduced HOMFLY-PT homology.
class DifferentialFamily {
 public:
  static DifferentialFamily sl(int n);
  static DifferentialFamily minus_one();

  TriDegree degree(int k) const;
  bool is_minus_one() const { return minus_one_; }
  int rank() const { return n_; }
  std::string name() const;
  // Largest k for which d_k connects two occupied degrees of p (0 if none).
  int last_useful_page(const Poincare& p) const;

 private:
  DifferentialFamily(bool m, int n) : minus_one_(m), n_(n) {}
  bool minus_one_;
  int n_;
};

struct CollapseOptions {
  int first_page = 1;
  // Defaults to DifferentialFamily::last_useful_page of the input.
  std::optional<int> last_page;
  // Survivors are compared with the target after projecting through this.
  Grading target_grading = Grading::homfly();
};

// pages[k] lists the lower ends of the pairs cancelled by d_k; the upper ends
// sit at pages[k] shifted by the degree of d_k.
struct CancellationWitness {
  std::map<int, Poincare> pages;
  Poincare survivors;

  Count pair_count() const;
  Count pair_count(int k) const;
};

// Can E_1 be reduced to the target by cancelling pairs (x, x + deg d_k),
// k in the allowed range? Solved as a bipartite b-matching (generators split
// by the parity of t), via max-flow, so the answer is exact.
std::optional<CancellationWitness> collapse_feasible(const Poincare& e1, const Poincare& target,
                                                     const DifferentialFamily& fam,
                                                     const CollapseOptions& opts = {});

// Like collapse_feasible, but first tries page range [first, first] and widens
// one page at a time, so the witness uses as few pages as possible.
std::optional<CancellationWitness> collapse_earliest(const Poincare& e1, const Poincare& target,
                                                     const DifferentialFamily& fam,
                                                     const CollapseOptions& opts = {});

bool differential_vanishes(const Poincare& p, const DifferentialFamily& fam, int k);

// E_1 collapses onto `count` generators, all in homological degree t.
std::optional<CancellationWitness> converge_to_degree(const Poincare& e1, const DifferentialFamily& fam,
                                                      int survivor_t2, const Count& count);

std::optional<CancellationWitness> converge_to_point(const Poincare& e1, const DifferentialFamily& fam,
                                                     int survivor_t2);

}  // namespace hpt
