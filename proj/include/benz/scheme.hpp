// Association scheme machinery on the circle sets of a geometry, all of
// it exact: relation partitions by intersection size, the scheme test,
// eigenvalue and dual eigenvalue matrices over the rationals, and the
// bounds used for intersecting families.  No floating point enters any
// verdict here; doubles only ever suggest candidates that are then
// certified with integer arithmetic.
#pragma once

#include "benz/closed_form.hpp"
#include "benz/geometry.hpp"

namespace benz {

struct RelationSet {
  int n = 0;  // circles
  int d = 0;  // classes besides the identity
  std::vector<std::vector<Bitrow>> rows;  // rows[i][x] = {y : (x,y) in R_i}
  std::vector<uint8_t> rel;               // flattened n x n relation ids
  std::vector<long long> valencies;       // size d+1, constant over x

  int relation(int x, int y) const { return rel[(size_t)x * n + y]; }
};

// Partition circle pairs by intersection size: 1 -> R1, 2 -> R2, 0 -> R3
// for the three geometries, 2 -> R1, 0 -> R2 for the nucleus extension.
// Throws Errc::unexpected_intersection_size on any other size.
RelationSet relations(const CircleGeometry& g);

struct SchemeCheck {
  bool is_scheme = false;
  int d = 0;
  std::vector<long long> p;  // (d+1)^3 intersection tensor when is_scheme
  std::string witness;       // first counterexample otherwise

  long long pk(int k, int i, int j) const {
    return p[((size_t)k * (d + 1) + i) * (d + 1) + j];
  }
};

SchemeCheck check_scheme(const RelationSet& r);

struct EigenData {
  int d = 0;
  long long n = 0;
  QMat P;  // rows: eigenspaces (row 0 the valencies), columns: relations
  QMat Q;  // rows: relations, columns: eigenspaces; P Q = n I
  std::vector<long long> mult;  // first row of Q, verified integral
};

// Exact spectra from the intersection matrices.  Requires s.is_scheme;
// throws Errc::non_integer_eigenvalue if a characteristic polynomial
// fails to split over the integers.  Rows after the first are ordered by
// multiplicity descending, then by the eigenvalue row lexicographically
// descending.
EigenData eigendata(const RelationSet& r, const SchemeCheck& s);

// Compare computed P, Q, multiplicities against the closed forms.  Rows
// are matched by content, so the reference row order does not need to
// agree with the computed order.
bool verify_reference_tables(const EigenData& e, Family f, long long q,
                             std::string* why = nullptr);

// A_i T_x = T_x B_i for each given base circle x, plus B_i acting on the
// columns of Q with eigenvalue P(m,i).
bool intersection_matrix_check(const RelationSet& r, const SchemeCheck& s,
                               const EigenData& e, const std::vector<int>& base,
                               std::string* why = nullptr);

// Ratio bound for cocliques of the weighted union sum w_i A_i:
// n (-tau) / (k - tau) with k the largest and tau the smallest eigenvalue.
// w has size d+1 and w[0] must be zero.
Rational hoffman_bound(const EigenData& e, const std::vector<Rational>& w);

// n / clique, the clique-coclique bound for vertex-transitive graphs.
long long clique_coclique_bound(long long n, long long clique);

struct LPResult {
  Rational value;
  std::vector<Rational> a;  // optimal inner distribution on the allowed classes
};

// Delsarte linear program: maximize 1 + sum a_i over a >= 0 supported on
// the allowed classes with (a Q)_m >= 0, solved exactly by vertex
// enumeration.
LPResult delsarte_lp_bound(const EigenData& e, const std::vector<int>& allowed);

struct GramReport {
  bool identity_holds = false;
  long long rank = -1;        // incidence rank over the rationals
  bool rank_certified = false;
  std::string identity;       // which Gram identities were verified
  std::string note;
};

// Gram identities of the circle-point incidence and its exact rank,
// certified by a modular lower bound meeting an explicit kernel-based
// upper bound.
GramReport incidence_identities(const CircleGeometry& g, const RelationSet& r);

// Product of (A_j - lambda I) over the eigenvalues of column j vanishes,
// for every j, in exact integer arithmetic.
bool spectral_closure(const RelationSet& r, const EigenData& e, std::string* why = nullptr);

// Traces of A_j^s for s = 1, 2, 3 match the multiplicity-weighted power
// sums of the eigenvalues.
bool multiplicity_traces(const RelationSet& r, const SchemeCheck& s, const EigenData& e,
                         std::string* why = nullptr);

// Number of distinct eigenvalues of A_j, found numerically and then
// certified exactly: the product of (A_j - lambda I) over the candidates
// is zero and dropping any single factor leaves a nonzero matrix.
int distinct_eigenvalues_exact(const RelationSet& r, int j);

}  // namespace benz
