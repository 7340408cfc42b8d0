#include "hpt/graded_poly.hpp"

#include <algorithm>
#include <limits>
#include <tuple>

#include "hpt/errors.hpp"

namespace hpt {

namespace {

const Count kZero = 0;

void add_term(std::map<TriDegree, Count>& terms, TriDegree d, const Count& mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms.try_emplace(d, mult);
  if (!inserted) it->second += mult;
}

}  // namespace

Poincare Poincare::monomial(TriDegree d, const Count& mult) {
  Poincare p;
  p.add(d, mult);
  return p;
}

void Poincare::add(TriDegree d, const Count& mult) {
  if (mult < 0) throw Error("negative multiplicity in Poincare polynomial");
  add_term(terms_, d, mult);
}

const Count& Poincare::multiplicity(TriDegree d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? kZero : it->second;
}

Count Poincare::total_dim() const {
  Count s = 0;
  for (const auto& [d, m] : terms_) s += m;
  return s;
}

Poincare Poincare::shifted(TriDegree by) const {
  Poincare out;
  for (const auto& [d, m] : terms_) out.terms_.emplace(d + by, m);
  return out;
}

std::optional<Poincare> Poincare::try_subtract(const Poincare& other) const {
  Poincare out = *this;
  for (const auto& [d, m] : other.terms_) {
    auto it = out.terms_.find(d);
    if (it == out.terms_.end() || it->second < m) return std::nullopt;
    it->second -= m;
    if (it->second == 0) out.terms_.erase(it);
  }
  return out;
}

Poincare operator+(const Poincare& x, const Poincare& y) {
  Poincare out = x;
  for (const auto& [d, m] : y.terms_) add_term(out.terms_, d, m);
  return out;
}

Poincare operator*(const Poincare& x, const Poincare& y) {
  Poincare out;
  for (const auto& [dx, mx] : x.terms_)
    for (const auto& [dy, my] : y.terms_) add_term(out.terms_, dx + dy, mx * my);
  return out;
}

std::strong_ordering operator<=>(const FamilyKey& x, const FamilyKey& y) {
  if (auto c = x.center <=> y.center; c != 0) return c;
  if (x.atom.has_value() != y.atom.has_value())
    return x.atom.has_value() ? std::strong_ordering::greater : std::strong_ordering::less;
  if (!x.atom) return std::strong_ordering::equal;
  return x.atom->offset <=> y.atom->offset;
}

FamilyPoincare::FamilyPoincare(const Poincare& p) {
  for (const auto& [d, m] : p.terms()) terms_.emplace(FamilyKey{d, std::nullopt}, m);
}

FamilyPoincare FamilyPoincare::string(TriDegree center, BracketAtom atom, const Count& mult) {
  FamilyPoincare f;
  f.add(FamilyKey{center, atom}, mult);
  return f;
}

void FamilyPoincare::add(const FamilyKey& key, const Count& mult) {
  if (mult < 0) throw Error("negative multiplicity in family polynomial");
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, mult);
  if (!inserted) it->second += mult;
}

bool FamilyPoincare::has_brackets() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.atom.has_value(); });
}

std::optional<Poincare> FamilyPoincare::as_poincare() const {
  if (has_brackets()) return std::nullopt;
  Poincare p;
  for (const auto& [k, m] : terms_) p.add(k.center, m);
  return p;
}

int FamilyPoincare::min_n() const {
  int lo = 0;
  for (const auto& [k, m] : terms_)
    if (k.atom) lo = std::max(lo, -k.atom->offset);
  return lo;
}

FamilyPoincare operator+(const FamilyPoincare& x, const FamilyPoincare& y) {
  FamilyPoincare out = x;
  for (const auto& [k, m] : y.terms_) out.add(k, m);
  return out;
}

void LaurentPoly::add(int a, int q, const Count& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(a, q);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Count LaurentPoly::coefficient(int a, int q) const {
  auto it = terms_.find({a, q});
  return it == terms_.end() ? Count(0) : it->second;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out = x;
  for (const auto& [k, c] : y.terms_) out.add(k.first, k.second, c);
  return out;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  LaurentPoly out;
  for (const auto& [kx, cx] : x.terms_)
    for (const auto& [ky, cy] : y.terms_) out.add(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return out;
}

TriDegree Grading::project(TriDegree d) const {
  switch (kind_) {
    case Kind::Homfly:
      return d;
    case Kind::Sl:
      return {0, n_ * d.a + d.q, d.t2};
    case Kind::TOnly:
      return {0, 0, d.t2};
  }
  return d;
}

Poincare Grading::project(const Poincare& p) const {
  if (kind_ == Kind::Homfly) return p;
  Poincare out;
  for (const auto& [d, m] : p.terms()) out.add(project(d), m);
  return out;
}

std::string Grading::name() const {
  switch (kind_) {
    case Kind::Homfly:
      return "homfly";
    case Kind::Sl:
      return "sl(" + std::to_string(n_) + ")";
    case Kind::TOnly:
      return "t-only";
  }
  return "?";
}

FamilyPoincare mul(const FamilyPoincare& x, const FamilyPoincare& y) {
  FamilyPoincare out;
  for (const auto& [kx, mx] : x.terms())
    for (const auto& [ky, my] : y.terms()) {
      if (kx.atom && ky.atom)
        throw BracketProduct("product of two [N+c] strings is not a single string");
      out.add(FamilyKey{kx.center + ky.center, kx.atom ? kx.atom : ky.atom}, mx * my);
    }
  return out;
}

Poincare psi_dual(const Poincare& p) {
  Poincare out;
  for (const auto& [d, m] : p.terms()) out.add(-d, m);
  return out;
}

FamilyPoincare psi_dual(const FamilyPoincare& f) {
  FamilyPoincare out;
  for (const auto& [k, m] : f.terms()) out.add(FamilyKey{-k.center, k.atom}, m);
  return out;
}

LaurentPoly euler_specialize(const Poincare& p) {
  LaurentPoly out;
  for (const auto& [d, m] : p.terms()) {
    if (!d.integral_t())
      throw HalfIntegerT("Euler characteristic needs integral t-degrees");
    out.add(d.a, d.q, (d.t2 / 2) % 2 == 0 ? Count(m) : Count(-m));
  }
  return out;
}

Poincare sl_specialize(const Poincare& p, int n) { return Grading::sl(n).project(p); }

Poincare evaluate(const FamilyPoincare& f, int n) {
  Poincare out;
  for (const auto& [k, m] : f.terms()) {
    if (!k.atom) {
      out.add(k.center, m);
      continue;
    }
    int len = k.atom->length(n);
    if (len < 0)
      throw BracketDomain("[N" + std::to_string(k.atom->offset) + "] is undefined at N=" +
                          std::to_string(n));
    for (int j = 0; j < len; ++j)
      out.add({k.center.a, k.center.q + len - 1 - 2 * j, k.center.t2}, m);
  }
  return out;
}

Count total_dim(const Poincare& p) { return p.total_dim(); }

Count total_dim(const FamilyPoincare& f, int n) { return evaluate(f, n).total_dim(); }

const std::vector<int>& reference_ranks() {
  static const std::vector<int> ranks{32, 33, 34, 35};
  return ranks;
}

namespace {

struct Run {
  int t2;
  int lo;
  int hi;
  Count mult;
};

std::vector<Run> greedy_runs(const Poincare& sl) {
  std::map<int, std::map<int, Count>> by_t;
  for (const auto& [d, m] : sl.terms()) {
    if (d.a != 0) throw AssemblyError("assembly expects sl-graded input");
    by_t[d.t2][d.q] += m;
  }
  std::vector<Run> runs;
  for (auto& [t2, qs] : by_t) {
    while (!qs.empty()) {
      int lo = qs.begin()->first;
      int hi = lo;
      Count m = qs.begin()->second;
      for (auto it = qs.find(hi + 2); it != qs.end(); it = qs.find(hi + 2)) {
        hi += 2;
        m = std::min(m, it->second);
      }
      for (int q = lo; q <= hi; q += 2) {
        auto it = qs.find(q);
        it->second -= m;
        if (it->second == 0) qs.erase(it);
      }
      runs.push_back({t2, lo, hi, m});
    }
  }
  std::sort(runs.begin(), runs.end(), [](const Run& x, const Run& y) {
    return std::tie(x.t2, x.lo, x.hi) < std::tie(y.t2, y.lo, y.hi);
  });
  return runs;
}

// Exact line through (n, v) pairs; throws if the data is not linear with
// integer slope.
std::pair<int, int> fit_line(const std::vector<std::pair<int, int>>& pts) {
  auto [n0, v0] = pts.front();
  auto [n1, v1] = pts.back();
  if (n0 == n1 || (v1 - v0) % (n1 - n0) != 0)
    throw AssemblyError("degrees are not linear in N with integer slope");
  int slope = (v1 - v0) / (n1 - n0);
  int icept = v0 - slope * n0;
  for (auto [n, v] : pts)
    if (slope * n + icept != v) throw AssemblyError("degrees are not linear in N");
  return {slope, icept};
}

void require_ranks(const std::map<int, Poincare>& sl_by_rank) {
  if (sl_by_rank.size() < 2) throw AssemblyError("assembly needs at least two ranks");
}

}  // namespace

FamilyPoincare assemble_family(const std::map<int, Poincare>& sl_by_rank) {
  require_ranks(sl_by_rank);
  std::vector<std::pair<int, std::vector<Run>>> per_rank;
  for (const auto& [n, p] : sl_by_rank) per_rank.emplace_back(n, greedy_runs(p));
  const std::size_t count = per_rank.front().second.size();
  for (const auto& [n, runs] : per_rank)
    if (runs.size() != count) throw AssemblyError("string structure changes with N");

  FamilyPoincare out;
  for (std::size_t i = 0; i < count; ++i) {
    const Run& r0 = per_rank.front().second[i];
    std::vector<std::pair<int, int>> los, his;
    for (const auto& [n, runs] : per_rank) {
      const Run& r = runs[i];
      if (r.t2 != r0.t2 || r.mult != r0.mult)
        throw AssemblyError("string structure changes with N");
      los.emplace_back(n, r.lo);
      his.emplace_back(n, r.hi);
    }
    auto [s_lo, i_lo] = fit_line(los);
    auto [s_hi, i_hi] = fit_line(his);
    int n0 = per_rank.front().first;
    int len0 = (r0.hi - r0.lo) / 2 + 1;
    if (s_hi - s_lo == 2) {
      if ((s_lo + s_hi) % 2 != 0 || (i_lo + i_hi) % 2 != 0)
        throw AssemblyError("string center is not an integral degree");
      TriDegree center{(s_lo + s_hi) / 2, (i_lo + i_hi) / 2, r0.t2};
      out.add(FamilyKey{center, BracketAtom{len0 - n0}}, r0.mult);
    } else if (s_hi == s_lo) {
      for (int j = 0; j < len0; ++j)
        out.add(FamilyKey{TriDegree{s_lo, i_lo + 2 * j, r0.t2}, std::nullopt}, r0.mult);
    } else {
      throw AssemblyError("string length grows faster than N");
    }
  }
  return out;
}

Poincare assemble_points(const std::map<int, Poincare>& sl_by_rank) {
  require_ranks(sl_by_rank);
  std::vector<std::pair<int, std::vector<std::pair<TriDegree, Count>>>> per_rank;
  for (const auto& [n, p] : sl_by_rank) {
    std::vector<std::pair<TriDegree, Count>> pts(p.terms().begin(), p.terms().end());
    per_rank.emplace_back(n, std::move(pts));
  }
  const std::size_t count = per_rank.front().second.size();
  Poincare out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::pair<int, int>> qs;
    const auto& [d0, m0] = per_rank.front().second[i];
    for (const auto& [n, pts] : per_rank) {
      if (pts.size() != count || pts[i].first.t2 != d0.t2 || pts[i].second != m0 ||
          pts[i].first.a != 0)
        throw AssemblyError("point structure changes with N");
      qs.emplace_back(n, pts[i].first.q);
    }
    auto [alpha, beta] = fit_line(qs);
    out.add({alpha, beta, d0.t2}, m0);
  }
  return out;
}

FamilyPoincare canonical(const FamilyPoincare& f) {
  std::map<int, Poincare> shadows;
  for (int n : reference_ranks()) shadows.emplace(n, sl_specialize(evaluate(f, n), n));
  return assemble_family(shadows);
}

bool same_family(const FamilyPoincare& x, const FamilyPoincare& y) {
  return canonical(x) == canonical(y);
}

}  // namespace hpt
