#include "hpt/ss_engine.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long long,
                    boost::property<boost::edge_residual_capacity_t, long long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;
using Vertex = Traits::vertex_descriptor;
using Edge = Traits::edge_descriptor;

class FlowNet {
 public:
  Vertex node() { return boost::add_vertex(g_); }

  Edge arc(Vertex u, Vertex v, long long cap) {
    auto cap_map = boost::get(boost::edge_capacity, g_);
    auto rev_map = boost::get(boost::edge_reverse, g_);
    Edge e = boost::add_edge(u, v, g_).first;
    Edge r = boost::add_edge(v, u, g_).first;
    cap_map[e] = cap;
    cap_map[r] = 0;
    rev_map[e] = r;
    rev_map[r] = e;
    return e;
  }

  long long max_flow(Vertex s, Vertex t) { return boost::push_relabel_max_flow(g_, s, t); }

  long long flow(Edge e) const {
    return boost::get(boost::edge_capacity, g_, e) - boost::get(boost::edge_residual_capacity, g_, e);
  }

 private:
  FlowGraph g_;
};

long long as_capacity(const Count& c) {
  if (c > Count(std::numeric_limits<long long>::max() / 8))
    throw Error("multiplicity too large for the cancellation search");
  return c.convert_to<long long>();
}

// Generators on either side of a cancelling pair differ by an odd t-shift,
// so the t2 residue mod 4 splits them into two classes.
bool lower_class(TriDegree d) { return ((d.t2 % 4) + 4) % 4 < 2; }

}  // namespace

DifferentialFamily DifferentialFamily::sl(int n) {
  if (n < 1) throw Error("d(N) needs N >= 1");
  return DifferentialFamily(false, n);
}

DifferentialFamily DifferentialFamily::minus_one() { return DifferentialFamily(true, -1); }

TriDegree DifferentialFamily::degree(int k) const {
  if (minus_one_) return {2 - 2 * k, 2 - 2 * k, 2 * (2 * k - 1)};
  return {-2 * k, 2 * n_ * k, 2};
}

std::string DifferentialFamily::name() const {
  return minus_one_ ? std::string("d(-1)") : "d(" + std::to_string(n_) + ")";
}

int DifferentialFamily::last_useful_page(const Poincare& p) const {
  if (p.empty()) return 0;
  int lo_a = std::numeric_limits<int>::max(), hi_a = std::numeric_limits<int>::min();
  int lo_t = lo_a, hi_t = hi_a;
  for (const auto& [d, m] : p.terms()) {
    lo_a = std::min(lo_a, d.a);
    hi_a = std::max(hi_a, d.a);
    lo_t = std::min(lo_t, d.t2);
    hi_t = std::max(hi_t, d.t2);
  }
  int bound = minus_one_ ? (hi_t - lo_t) / 4 + 1 : (hi_a - lo_a) / 2;
  int last = 0;
  for (int k = 1; k <= bound; ++k) {
    TriDegree s = degree(k);
    for (const auto& [d, m] : p.terms())
      if (p.multiplicity(d + s) > 0) {
        last = k;
        break;
      }
  }
  return last;
}

Count CancellationWitness::pair_count() const {
  Count s = 0;
  for (const auto& [k, p] : pages) s += p.total_dim();
  return s;
}

Count CancellationWitness::pair_count(int k) const {
  auto it = pages.find(k);
  return it == pages.end() ? Count(0) : it->second.total_dim();
}

std::optional<CancellationWitness> collapse_feasible(const Poincare& e1, const Poincare& target,
                                                     const DifferentialFamily& fam, const CollapseOptions& opts) {
  const Grading& gr = opts.target_grading;
  const Poincare goal = gr.project(target);
  const int first = std::max(1, opts.first_page);
  const int last = opts.last_page ? *opts.last_page : fam.last_useful_page(e1);

  // Quick necessary conditions: dimensions agree up to cancelled pairs.
  if (goal.total_dim() > e1.total_dim() || (e1.total_dim() - goal.total_dim()) % 2 != 0) return std::nullopt;

  FlowNet net;
  Vertex src = net.node();
  Vertex sink = net.node();
  std::map<TriDegree, Vertex> gen;
  std::map<TriDegree, Vertex> bucket;
  long long need_lower = 0, need_upper = 0;

  for (const auto& [d, m] : e1.terms()) gen.emplace(d, net.node());
  for (const auto& [b, m] : goal.terms()) bucket.emplace(b, net.node());

  struct PairEdge {
    Edge e;
    TriDegree low;
    int k;
  };
  std::vector<PairEdge> pair_edges;
  std::vector<std::pair<Edge, TriDegree>> survive_edges;

  for (const auto& [d, m] : e1.terms()) {
    long long cap = as_capacity(m);
    Vertex v = gen.at(d);
    auto b = bucket.find(gr.project(d));
    if (lower_class(d)) {
      net.arc(src, v, cap);
      need_lower += cap;
      if (b != bucket.end()) survive_edges.emplace_back(net.arc(v, b->second, cap), d);
      for (int k = first; k <= last; ++k) {
        TriDegree s = fam.degree(k);
        for (TriDegree other : {d + s, d - s}) {
          auto it = gen.find(other);
          if (it == gen.end()) continue;
          TriDegree low = other < d ? other : d;
          pair_edges.push_back({net.arc(v, it->second, cap), low, k});
        }
      }
    } else {
      net.arc(v, sink, cap);
      need_upper += cap;
      if (b != bucket.end()) survive_edges.emplace_back(net.arc(b->second, v, cap), d);
    }
  }
  for (const auto& [b, m] : goal.terms()) {
    long long cap = as_capacity(m);
    if (lower_class(b)) {
      net.arc(bucket.at(b), sink, cap);
      need_upper += cap;
    } else {
      net.arc(src, bucket.at(b), cap);
      need_lower += cap;
    }
  }
  if (need_lower != need_upper) return std::nullopt;
  if (net.max_flow(src, sink) != need_lower) return std::nullopt;

  CancellationWitness w;
  for (const auto& pe : pair_edges) {
    long long f = net.flow(pe.e);
    if (f > 0) w.pages[pe.k].add(pe.low, f);
  }
  for (const auto& [e, d] : survive_edges) {
    long long f = net.flow(e);
    if (f > 0) w.survivors.add(d, f);
  }
  return w;
}

std::optional<CancellationWitness> collapse_earliest(const Poincare& e1, const Poincare& target,
                                                     const DifferentialFamily& fam, const CollapseOptions& opts) {
  const int first = std::max(1, opts.first_page);
  const int last = opts.last_page ? *opts.last_page : fam.last_useful_page(e1);
  for (int upto = first; upto <= std::max(first, last); ++upto) {
    CollapseOptions o = opts;
    o.first_page = first;
    o.last_page = upto;
    if (auto w = collapse_feasible(e1, target, fam, o)) return w;
  }
  return std::nullopt;
}

bool differential_vanishes(const Poincare& p, const DifferentialFamily& fam, int k) {
  TriDegree s = fam.degree(k);
  for (const auto& [d, m] : p.terms())
    if (p.multiplicity(d + s) > 0) return false;
  return true;
}

std::optional<CancellationWitness> converge_to_degree(const Poincare& e1, const DifferentialFamily& fam,
                                                      int survivor_t2, const Count& count) {
  CollapseOptions o;
  o.target_grading = Grading::t_only();
  return collapse_feasible(e1, Poincare::monomial({0, 0, survivor_t2}, count), fam, o);
}

std::optional<CancellationWitness> converge_to_point(const Poincare& e1, const DifferentialFamily& fam,
                                                     int survivor_t2) {
  return converge_to_degree(e1, fam, survivor_t2, 1);
}

}  // namespace hpt
