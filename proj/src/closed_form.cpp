#include "benz/closed_form.hpp"

#include "benz/errors.hpp"

namespace benz {

std::string family_name(Family f) {
  switch (f) {
    case Family::mobius_even: return "mobius-even";
    case Family::laguerre_odd: return "laguerre-odd";
    case Family::minkowski_even: return "minkowski-even";
    case Family::laguerre_plus_even: return "laguerre-plus-even";
  }
  return "?";
}

namespace {

void need_parity(Family f, long long q) {
  bool even = q % 2 == 0;
  bool want_even = f != Family::laguerre_odd;
  if (even != want_even) fail(Errc::wrong_parity, "no scheme at this parity");
}

}  // namespace

long long family_size(Family f, long long q) {
  switch (f) {
    case Family::mobius_even: return q * q * q + q;
    case Family::laguerre_odd:
    case Family::laguerre_plus_even: return q * q * q;
    case Family::minkowski_even: return q * q * q - q;
  }
  return 0;
}

std::vector<long long> reference_valencies(Family f, long long q) {
  need_parity(f, q);
  switch (f) {
    case Family::mobius_even:
      return {1, q * q - 1, q * q * (q + 1) / 2, q * (q - 1) * (q - 2) / 2};
    case Family::laguerre_odd:
      return {1, q * q - 1, q * (q * q - 1) / 2, q * (q - 1) * (q - 1) / 2};
    case Family::minkowski_even:
      return {1, q * q - 1, q * (q + 1) * (q - 2) / 2, (q - 1) * q * q / 2};
    case Family::laguerre_plus_even:
      return {1, (q + 2) * (q + 1) * (q - 1) / 2, q * (q - 1) * (q - 1) / 2};
  }
  return {};
}

std::vector<long long> reference_mult(Family f, long long q) {
  need_parity(f, q);
  switch (f) {
    case Family::mobius_even:
      return {1, q * (q * q + 1) / 2, q * q, (q * q + 1) * (q - 2) / 2};
    case Family::laguerre_odd:
      // the scheme is self-dual, multiplicities equal valencies
      return reference_valencies(f, q);
    case Family::minkowski_even:
      return {1, (q + 1) * (q + 1) * (q - 2) / 2, q * (q - 1) * (q - 1) / 2, q * q};
    case Family::laguerre_plus_even:
      return {1, (q + 1) * (q - 1) * (q - 1), (q - 1) * (q + 2)};
  }
  return {};
}

QMat reference_P(Family f, long long q) {
  need_parity(f, q);
  auto val = reference_valencies(f, q);
  QMat P;
  P.push_back(std::vector<Rational>(val.begin(), val.end()));
  switch (f) {
    case Family::mobius_even:
      P.push_back({1, q - 1, -q, 0});
      P.push_back({1, -2, q * (q - 1) / 2, -(q + 1) * (q - 2) / 2});
      P.push_back({1, -(q + 1), 0, q});
      break;
    case Family::laguerre_odd:
      P.push_back({1, -1, q * (q - 1) / 2, -q * (q - 1) / 2});
      P.push_back({1, q - 1, -q, 0});
      P.push_back({1, -(q + 1), 0, q});
      break;
    case Family::minkowski_even:
      P.push_back({1, q - 1, -q, 0});
      P.push_back({1, -(q + 1), 0, q});
      P.push_back({1, 0, (q * q - q - 2) / 2, -(q - 1) * q / 2});
      break;
    case Family::laguerre_plus_even:
      P.push_back({1, Rational(-(q + 2), 2), Rational(q, 2)});
      P.push_back({1, (q + 1) * (q - 2) / 2, -q * (q - 1) / 2});
      break;
  }
  return P;
}

QMat reference_Q(Family f, long long q) {
  need_parity(f, q);
  auto mult = reference_mult(f, q);
  QMat Q;
  Q.push_back(std::vector<Rational>(mult.begin(), mult.end()));
  switch (f) {
    case Family::mobius_even:
      Q.push_back({1, Rational(q * (q * q + 1), 2 * (q + 1)), Rational(-2 * q * q, q * q - 1),
                   Rational(-(q - 2) * (q * q + 1), 2 * (q - 1))});
      Q.push_back({1, Rational(-(q * q + 1), q + 1), Rational(q * (q - 1), q + 1), 0});
      Q.push_back({1, 0, Rational(-q * (q + 1), q - 1), Rational(q * q + 1, q - 1)});
      break;
    case Family::laguerre_odd:
      return reference_P(f, q);  // self-dual in this row order
    case Family::minkowski_even:
      Q.push_back({1, (q + 1) * (q - 2) / 2, -(q - 1) * q / 2, 0});
      Q.push_back({1, -(q + 1), 0, q});
      Q.push_back({1, 0, q - 1, -q});
      break;
    case Family::laguerre_plus_even: {
      // derived from P by exact inversion; the independent content is P
      // and the multiplicities
      QMat inv = qinverse(reference_P(f, q));
      long long n = family_size(f, q);
      Q = qmat((int)inv.size(), (int)inv.size());
      for (int i = 0; i < (int)inv.size(); ++i)
        for (int j = 0; j < (int)inv.size(); ++j) Q[i][j] = inv[i][j] * Rational(n);
      break;
    }
  }
  return Q;
}

long long mobius_p(long long q, int k, int i, int j) {
  if (q % 2) fail(Errc::wrong_parity, "even order only");
  if (i > j) std::swap(i, j);  // the tensor is symmetric in i, j
  auto val = reference_valencies(Family::mobius_even, q);
  if (k == 0) return i == j ? val[i] : 0;
  if (i == 0) return j == k ? 1 : 0;
  switch (k * 100 + i * 10 + j) {
    case 111: return q - 2;
    case 112: return q * q / 2;
    case 113: return q * (q - 2) / 2;
    case 122: return q * q * (q + 2) / 4;
    case 123: return q * q * (q - 2) / 4;
    case 133: return q * (q - 2) * (q - 4) / 4;
    case 211: return q - 1;
    case 212: return (q - 1) * (q / 2 + 1);
    case 213: return (q - 1) * (q / 2 - 1);
    case 222: return q * (q - 1) * (q + 4) / 4;
    case 223: return q * (q - 1) * (q - 2) / 4;
    case 233: return (q - 1) * (q - 2) * (q - 2) / 4;
    case 311: return q + 1;
    case 312: return (q + 1) * q / 2;
    case 313: return (q + 1) * (q - 4) / 2;
    case 322: return (q + 1) * q * q / 4;
    case 323: return (q + 1) * q * (q - 2) / 4;
    case 333: return q * (q - 4) * (q - 3) / 4 + 1;
  }
  fail(Errc::bad_arguments, "tensor index out of range");
}

std::vector<std::pair<std::array<int, 3>, long long>> laguerre_odd_p_samples(long long q) {
  if (q % 2 == 0) fail(Errc::wrong_parity, "odd order only");
  return {
      {{1, 1, 1}, q - 2},
      {{2, 1, 1}, q - 1},
      {{2, 1, 2}, (q * q - 1) / 2},
      {{3, 2, 3}, (q + 1) * (q - 1) * (q - 1) / 4},
  };
}

}  // namespace benz
