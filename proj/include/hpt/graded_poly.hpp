#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hpt {

using Count = boost::multiprecision::cpp_int;

// Exponents of a, q and t. The t exponent is stored doubled so that
// half-integer powers of t (totally reduced homology) are exact.
struct TriDegree {
  int a = 0;
  int q = 0;
  int t2 = 0;

  constexpr TriDegree() = default;
  constexpr TriDegree(int a_, int q_, int t2_) : a(a_), q(q_), t2(t2_) {}

  bool integral_t() const { return t2 % 2 == 0; }

  friend constexpr bool operator==(const TriDegree&, const TriDegree&) = default;
  friend constexpr std::strong_ordering operator<=>(const TriDegree& x,
                                                    const TriDegree& y) {
    if (auto c = x.t2 <=> y.t2; c != 0) return c;
    if (auto c = x.a <=> y.a; c != 0) return c;
    return x.q <=> y.q;
  }
  friend constexpr TriDegree operator+(TriDegree x, TriDegree y) {
    return {x.a + y.a, x.q + y.q, x.t2 + y.t2};
  }
  friend constexpr TriDegree operator-(TriDegree x, TriDegree y) {
    return {x.a - y.a, x.q - y.q, x.t2 - y.t2};
  }
  constexpr TriDegree operator-() const { return {-a, -q, -t2}; }
};

// Nonnegative combination of monomials a^i q^j t^k.
class Poincare {
 public:
  using Terms = std::map<TriDegree, Count>;

  Poincare() = default;
  static Poincare monomial(TriDegree d, const Count& mult = 1);

  void add(TriDegree d, const Count& mult);
  const Count& multiplicity(TriDegree d) const;
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Count total_dim() const;

  Poincare shifted(TriDegree by) const;
  // Termwise difference; nullopt if some multiplicity would go negative.
  std::optional<Poincare> try_subtract(const Poincare& other) const;

  friend bool operator==(const Poincare&, const Poincare&) = default;
  friend Poincare operator+(const Poincare& x, const Poincare& y);
  friend Poincare operator*(const Poincare& x, const Poincare& y);

 private:
  Terms terms_;
};

// The q-string [N+c] = q^{N+c-1} + q^{N+c-3} + ... + q^{-(N+c-1)}.
struct BracketAtom {
  int offset = 0;

  int length(int n) const { return n + offset; }
  friend constexpr auto operator<=>(const BracketAtom&, const BracketAtom&) = default;
};

struct FamilyKey {
  TriDegree center;
  std::optional<BracketAtom> atom;

  friend constexpr bool operator==(const FamilyKey&, const FamilyKey&) = default;
  friend std::strong_ordering operator<=>(const FamilyKey& x, const FamilyKey& y);
};

// Poincare polynomial whose terms may carry a single [N+c] factor, so that it
// describes a whole family indexed by N.
class FamilyPoincare {
 public:
  using Terms = std::map<FamilyKey, Count>;

  FamilyPoincare() = default;
  FamilyPoincare(const Poincare& p);  // NOLINT: a plain polynomial is a constant family
  static FamilyPoincare string(TriDegree center, BracketAtom atom, const Count& mult = 1);

  void add(const FamilyKey& key, const Count& mult);
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool has_brackets() const;
  // Returns the plain polynomial when no term carries a bracket.
  std::optional<Poincare> as_poincare() const;
  // Smallest N at which every bracket has nonnegative length.
  int min_n() const;

  friend bool operator==(const FamilyPoincare&, const FamilyPoincare&) = default;
  friend FamilyPoincare operator+(const FamilyPoincare& x, const FamilyPoincare& y);

 private:
  Terms terms_;
};

// Signed Laurent polynomial in a and q, used for HOMFLY-PT polynomials.
class LaurentPoly {
 public:
  using Terms = std::map<std::pair<int, int>, Count>;

  void add(int a, int q, const Count& coeff);
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Count coefficient(int a, int q) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y);
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);

 private:
  Terms terms_;
};

// Degree projection used to compare graded objects: exact HOMFLY grading,
// the sl(N) grading a -> q^N, or the homological grading alone.
class Grading {
 public:
  enum class Kind { Homfly, Sl, TOnly };

  static Grading homfly() { return Grading(Kind::Homfly, 0); }
  static Grading sl(int n) { return Grading(Kind::Sl, n); }
  static Grading t_only() { return Grading(Kind::TOnly, 0); }

  Kind kind() const { return kind_; }
  int rank() const { return n_; }
  TriDegree project(TriDegree d) const;
  Poincare project(const Poincare& p) const;
  std::string name() const;

  friend bool operator==(const Grading&, const Grading&) = default;

 private:
  Grading(Kind k, int n) : kind_(k), n_(n) {}
  Kind kind_;
  int n_;
};

FamilyPoincare mul(const FamilyPoincare& x, const FamilyPoincare& y);
Poincare psi_dual(const Poincare& p);
FamilyPoincare psi_dual(const FamilyPoincare& p);
// P(a,q,-1); throws HalfIntegerT on half-integer t exponents.
LaurentPoly euler_specialize(const Poincare& p);
// a^i q^j t^k -> q^{Ni+j} t^k.
Poincare sl_specialize(const Poincare& p, int n);
// Expands every [N+c] at the given N; the result is a mixed-degree polynomial
// in which string members keep the a-exponent of their center.
Poincare evaluate(const FamilyPoincare& f, int n);
Count total_dim(const Poincare& p);
Count total_dim(const FamilyPoincare& f, int n);

// Reference ranks large enough that sl(N) degrees of the data in this
// project decode uniquely back to (a, q).
const std::vector<int>& reference_ranks();

// Rebuilds a family from its sl(N) shadows. At each N and each t-degree the
// q-degrees are split greedily into maximal step-2 runs; runs whose length
// grows like N become [N+c] strings, fixed-length runs become monomials.
// Every endpoint must be linear in N across all given ranks.
FamilyPoincare assemble_family(const std::map<int, Poincare>& sl_by_rank);

// Same as assemble_family but for point data: each sl(N) generator is
// decoded individually without merging into strings.
Poincare assemble_points(const std::map<int, Poincare>& sl_by_rank);

// Canonical bracket form, obtained by re-assembling the sl(N) shadows at the
// reference ranks. Two families are equal iff their canonical forms are.
FamilyPoincare canonical(const FamilyPoincare& f);
bool same_family(const FamilyPoincare& x, const FamilyPoincare& y);

}  // namespace hpt
