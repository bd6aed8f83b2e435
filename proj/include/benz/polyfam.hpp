// Intersecting families of bounded-degree polynomials over F_q, plus the
// counting lemmas behind the odd order Laguerre classification: point
// counts through two prescribed values split by root number, rootless
// polynomial counts, and quadratic-type separators.
//
// Two agreement notions coexist.  The polynomial family operations count
// agreements over F_q only.  The counting lemmas work in the Laguerre
// world where a polynomial also takes the value "leading coefficient" at
// a far point, encoded as x = q.
#pragma once

#include "benz/search.hpp"

namespace benz {

// All q^(k+1) polynomials of degree at most k, indexed like the Laguerre
// circle list: index digits in base q are the coefficients, leading
// first, so index = sum over j of coeff_j q^j.
struct PolySpace {
  std::shared_ptr<const Field> field;
  int k = 0;
  int n = 0;

  // values[f][x], precomputed while q^(k+2) stays small
  std::vector<std::vector<int>> values;

  static PolySpace create(std::shared_ptr<const Field> f, int k);

  int q() const { return (int)field->order(); }
  // coefficient of X^j
  int coeff(int f, int j) const;
  int leading(int f) const { return coeff(f, k); }
  int eval(int f, int x) const;
};

// Number of x in F_q with f(x) = g(x).
int agreement(const PolySpace& s, int f, int g);

// Polynomials adjacent when they agree in at least t places.
BitGraph poly_agreement_graph(const PolySpace& s, int t);

struct PolyMax {
  FamilyWitness t_intersecting;      // expected size q^(k+1-t)
  FamilyWitness non_t_intersecting;  // pairwise under t agreements, expected q^t
};

// Both extremal sizes at once, each seeded with the family the bound
// names: prescribed values at t points, respectively degree under t.
PolyMax max_t_intersecting_polys(const PolySpace& s, int t, const SearchBudget& b = {});

struct PolyEkr {
  EnumerationResult enumeration;      // all intersecting families of size q^k
  std::vector<std::pair<int, int>> labels;  // (x, y) with family = {f : f(x) = y}
  bool all_stabilizers = false;       // every family is such a point stabilizer
};

// Complete enumeration of the maximum intersecting families and the
// check that each one fixes a point value.  Requires 2 <= k < q.
PolyEkr strong_ekr_polys(const PolySpace& s, const SearchBudget& b = {});

struct MiCounts {
  long long m0 = 0;  // no roots over F_q plus far point
  long long m1 = 0;  // exactly one
  long long m2 = 0;  // exactly two
};

// Degree <= 2 polynomials h with h(x1) = y1 and h(x2) = y2, counted by
// the number of distinct roots over F_q plus the far point x = q, where
// h takes its leading coefficient.  Odd q, x1 != x2, y1 and y2 nonzero.
MiCounts mi_counts(const std::shared_ptr<const Field>& f, int x1, int y1, int x2, int y2);

// Degree <= 2 polynomials with no roots over F_q plus the far point that
// pass through (x, y).  Odd q, y nonzero; the count is q(q-1)/2.
long long rootless_count(const std::shared_ptr<const Field>& f, int x, int y);

// Smallest c by element index such that c - a and c - b are nonzero and
// one is a square while the other is not.  Odd q, a != b.
int square_separator(const std::shared_ptr<const Field>& f, int a, int b);

}  // namespace benz
