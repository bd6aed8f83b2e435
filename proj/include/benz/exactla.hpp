// Small exact linear algebra over the rationals, plus modular rank for
// large integer matrices.  Everything here is dense Gauss elimination;
// the rational routines are meant for matrices of algebra dimension
// (a handful of rows), the modular rank for incidence-sized ones.
#pragma once

#include <vector>

#include "benz/rational.hpp"

namespace benz {

using QMat = std::vector<std::vector<Rational>>;

QMat qmat(int rows, int cols);
QMat qidentity(int n);
QMat qmul(const QMat& a, const QMat& b);

// Gauss-Jordan inverse.  Throws Errc::internal on a singular input.
QMat qinverse(QMat a);

int qrank(QMat a);

// Basis of the right kernel, one vector per row of the result.
QMat qkernel(QMat a);

// Solve a x = b for every column of b; a must have full column rank and
// the system must be consistent, else Errc::internal.
QMat qsolve(const QMat& a, const QMat& b);

// Characteristic polynomial coefficients c[0..n], c[n] = 1, by the
// Faddeev-LeVerrier recurrence.
std::vector<Rational> char_poly(const QMat& a);

// Integer roots of a monic integer polynomial with multiplicities,
// sorted descending.  remaining_degree reports what is left after
// deflating them out (0 means the polynomial splits over the integers).
struct IntRoots {
  std::vector<std::pair<long long, int>> roots;
  int remaining_degree = 0;
};
IntRoots integer_roots(const std::vector<Rational>& poly);

// Rank of an integer matrix reduced mod a prime.
int rank_mod_p(const std::vector<std::vector<long long>>& a, long long p);

}  // namespace benz
