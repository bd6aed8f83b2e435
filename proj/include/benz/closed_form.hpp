// Closed-form eigenvalue tables and intersection numbers for the circle
// geometry schemes, parameterized by the order q.  These are the frozen
// reference values the computed spectra are checked against.
#pragma once

#include <array>

#include "benz/exactla.hpp"

namespace benz {

// which relation partitions carry a scheme, by geometry and parity
enum class Family { mobius_even, laguerre_odd, minkowski_even, laguerre_plus_even };

std::string family_name(Family f);

// number of circles
long long family_size(Family f, long long q);

std::vector<long long> reference_valencies(Family f, long long q);
std::vector<long long> reference_mult(Family f, long long q);

// rows indexed by eigenspace, columns by relation
QMat reference_P(Family f, long long q);
// rows indexed by relation, columns by eigenspace
QMat reference_Q(Family f, long long q);

// full intersection tensor of the even Mobius scheme
long long mobius_p(long long q, int k, int i, int j);

// spot values of the odd Laguerre tensor: ((k,i,j), value)
std::vector<std::pair<std::array<int, 3>, long long>> laguerre_odd_p_samples(long long q);

}  // namespace benz
