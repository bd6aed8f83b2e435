#include "benz/exactla.hpp"

#include <algorithm>
#include <cstdlib>

#include "benz/errors.hpp"

namespace benz {

QMat qmat(int rows, int cols) { return QMat(rows, std::vector<Rational>(cols)); }

QMat qidentity(int n) {
  QMat m = qmat(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat qmul(const QMat& a, const QMat& b) {
  int r = (int)a.size(), k = (int)b.size(), c = (int)b[0].size();
  QMat out = qmat(r, c);
  for (int i = 0; i < r; ++i)
    for (int t = 0; t < k; ++t) {
      if (a[i][t] == Rational(0)) continue;
      for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

namespace {

// row echelon with full pivoting disabled; returns pivot columns
std::vector<int> echelon(QMat& m) {
  int rows = (int)m.size(), cols = rows ? (int)m[0].size() : 0;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != Rational(0)) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == Rational(0)) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

QMat qinverse(QMat a) {
  int n = (int)a.size();
  for (int i = 0; i < n; ++i) {
    a[i].resize(2 * n);
    a[i][n + i] = 1;
  }
  auto piv = echelon(a);
  if ((int)piv.size() != n || piv.back() != n - 1)
    fail(Errc::internal, "matrix is singular");
  QMat out = qmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

int qrank(QMat a) { return (int)echelon(a).size(); }

QMat qkernel(QMat a) {
  int cols = a.empty() ? 0 : (int)a[0].size();
  auto piv = echelon(a);
  std::vector<char> is_piv(cols, 0);
  for (int c : piv) is_piv[c] = 1;
  QMat basis;
  for (int c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<Rational> v(cols);
    v[c] = 1;
    for (int r = 0; r < (int)piv.size(); ++r) v[piv[r]] = -a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

QMat qsolve(const QMat& a, const QMat& b) {
  int rows = (int)a.size(), cols = (int)a[0].size(), bc = (int)b[0].size();
  QMat aug = qmat(rows, cols + bc);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    for (int j = 0; j < bc; ++j) aug[i][cols + j] = b[i][j];
  }
  auto piv = echelon(aug);
  for (int c : piv)
    if (c >= cols) fail(Errc::internal, "inconsistent linear system");
  if ((int)piv.size() != cols) fail(Errc::internal, "system is underdetermined");
  QMat x = qmat(cols, bc);
  for (int r = 0; r < cols; ++r)
    for (int j = 0; j < bc; ++j) x[r][j] = aug[r][cols + j];
  return x;
}

std::vector<Rational> char_poly(const QMat& a) {
  int n = (int)a.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMat m = qmat(n, n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{n-k+1} I)
    QMat t = m;
    for (int i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
    m = qmul(a, t);
    Rational tr;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    c[n - k] = -tr / Rational(k);
  }
  return c;
}

IntRoots integer_roots(const std::vector<Rational>& poly) {
  std::vector<long long> p;
  for (const auto& c : poly) {
    if (!c.is_integer()) fail(Errc::internal, "expected an integer polynomial");
    p.push_back(c.to_integer());
  }
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.size() <= 1 || p.back() != 1)
    fail(Errc::internal, "expected a monic polynomial");

  auto eval_is_root = [&](long long r) {
    // Horner with overflow-checked steps via __int128
    __int128 acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; --i) {
      acc = acc * r + p[i];
      if (acc > (__int128)1 << 100 || acc < -((__int128)1 << 100))
        return false;  // wildly off, cannot be a root of this size
    }
    return acc == 0;
  };
  auto deflate = [&](long long r) {
    // p /= (x - r), exact synthetic division
    std::vector<long long> q(p.size() - 1);
    long long carry = p.back();
    for (int i = (int)p.size() - 2; i >= 0; --i) {
      q[i] = carry;
      carry = p[i] + carry * r;
    }
    p = std::move(q);
  };

  IntRoots out;
  bool progress = true;
  while (p.size() > 1 && progress) {
    progress = false;
    long long a0 = p[0];
    std::vector<long long> cands;
    if (a0 == 0) {
      cands.push_back(0);
    } else {
      long long n = std::llabs(a0);
      for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        cands.insert(cands.end(), {d, -d, n / d, -(n / d)});
      }
    }
    for (long long r : cands)
      if (eval_is_root(r)) {
        int mult = 0;
        while (p.size() > 1 && eval_is_root(r)) {
          deflate(r);
          ++mult;
        }
        out.roots.push_back({r, mult});
        progress = true;
        break;
      }
  }
  out.remaining_degree = (int)p.size() - 1;
  std::sort(out.roots.begin(), out.roots.end(),
            [](auto& a, auto& b) { return a.first > b.first; });
  return out;
}

int rank_mod_p(const std::vector<std::vector<long long>>& a, long long p) {
  int rows = (int)a.size(), cols = rows ? (int)a[0].size() : 0;
  std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m[i][j] = ((a[i][j] % p) + p) % p;

  auto inv_mod = [&](long long x) {
    long long r = 1, e = p - 2, b = x % p;
    while (e) {
      if (e & 1) r = (__int128)r * b % p;
      b = (__int128)b * b % p;
      e >>= 1;
    }
    return r;
  };

  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pr = -1;
    for (int i = rank; i < rows; ++i)
      if (m[i][c]) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    long long inv = inv_mod(m[rank][c]);
    for (int j = c; j < cols; ++j) m[rank][j] = (__int128)m[rank][j] * inv % p;
    for (int i = rank + 1; i < rows; ++i) {
      if (!m[i][c]) continue;
      long long f = m[i][c];
      for (int j = c; j < cols; ++j) {
        m[i][j] = (m[i][j] - (__int128)f * m[rank][j]) % p;
        if (m[i][j] < 0) m[i][j] += p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace benz
