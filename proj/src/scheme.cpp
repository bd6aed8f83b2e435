#include "benz/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>

#include "benz/errors.hpp"

namespace benz {

RelationSet relations(const CircleGeometry& g) {
  RelationSet r;
  r.n = g.num_circles();
  const bool plus = g.kind == GeoKind::laguerre_plus;
  r.d = plus ? 2 : 3;
  r.rel.assign((size_t)r.n * r.n, 0);
  r.rows.assign(r.d + 1, std::vector<Bitrow>(r.n, Bitrow(r.n)));

  for (int x = 0; x < r.n; ++x) {
    r.rows[0][x].set(x);
    for (int y = x + 1; y < r.n; ++y) {
      int k = g.circle_bits[x].and_count(g.circle_bits[y]);
      int id;
      if (plus)
        id = k == 2 ? 1 : k == 0 ? 2 : -1;
      else
        id = k == 1 ? 1 : k == 2 ? 2 : k == 0 ? 3 : -1;
      if (id < 0)
        fail(Errc::unexpected_intersection_size,
             "circles " + std::to_string(x) + " and " + std::to_string(y) + " meet in " +
                 std::to_string(k) + " points");
      r.rel[(size_t)x * r.n + y] = r.rel[(size_t)y * r.n + x] = (uint8_t)id;
      r.rows[id][x].set(y);
      r.rows[id][y].set(x);
    }
  }

  r.valencies.resize(r.d + 1);
  for (int i = 0; i <= r.d; ++i) r.valencies[i] = r.rows[i][0].count();
  for (int x = 1; x < r.n; ++x)
    for (int i = 0; i <= r.d; ++i)
      if (r.rows[i][x].count() != r.valencies[i])
        fail(Errc::internal, "relation valencies are not constant");
  return r;
}

SchemeCheck check_scheme(const RelationSet& r) {
  SchemeCheck out;
  out.d = r.d;
  const int D = r.d + 1;
  out.p.assign((size_t)D * D * D, -1);
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y) {
      int k = r.relation(x, y);
      for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j) {
          long long c = r.rows[i][x].and_count(r.rows[j][y]);
          auto& slot = out.p[((size_t)k * D + i) * D + j];
          if (slot < 0) {
            slot = c;
          } else if (slot != c) {
            out.witness = "pairs in relation " + std::to_string(k) +
                          " disagree: p^" + std::to_string(k) + "_{" + std::to_string(i) +
                          "," + std::to_string(j) + "} = " + std::to_string(slot) +
                          " elsewhere but " + std::to_string(c) + " at circles (" +
                          std::to_string(x) + "," + std::to_string(y) + ")";
            return out;
          }
        }
    }
  out.is_scheme = true;
  return out;
}

namespace {

QMat transpose(const QMat& m) {
  QMat t = qmat((int)m[0].size(), (int)m.size());
  for (int i = 0; i < (int)m.size(); ++i)
    for (int j = 0; j < (int)m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

EigenData eigendata(const RelationSet& r, const SchemeCheck& s) {
  if (!s.is_scheme)
    fail(Errc::not_a_scheme, "relation partition is not an association scheme: " + s.witness);
  for (long long v : r.valencies)
    if (v == 0) fail(Errc::not_a_scheme, "a relation class is empty");
  const int D = r.d + 1;
  const long long n = r.n;

  std::vector<QMat> B(D, qmat(D, D));
  for (int i = 0; i < D; ++i)
    for (int k = 0; k < D; ++k)
      for (int j = 0; j < D; ++j) B[i][k][j] = s.pk(k, i, j);

  // split by the first intersection matrix, then refine shared eigenvalues
  // with the later ones; left eigenvectors of B_i are right ones of the
  // transpose
  QMat M1 = transpose(B[1]);
  auto roots = integer_roots(char_poly(M1));
  if (roots.remaining_degree)
    fail(Errc::non_integer_eigenvalue,
         "characteristic polynomial does not split over the integers");
  std::vector<QMat> subs;  // rows of each entry are basis vectors
  for (auto [lam, mult] : roots.roots) {
    QMat A = M1;
    for (int i = 0; i < D; ++i) A[i][i] -= Rational(lam);
    QMat ker = qkernel(A);
    if ((int)ker.size() != mult)
      fail(Errc::internal, "eigenspace dimension differs from root multiplicity");
    subs.push_back(std::move(ker));
  }

  for (int lev = 2; lev < D; ++lev) {
    QMat Ml = transpose(B[lev]);
    std::vector<QMat> next;
    for (auto& W : subs) {
      int k = (int)W.size();
      if (k == 1) {
        next.push_back(W);
        continue;
      }
      QMat Wc = qmat(D, k);
      for (int i = 0; i < D; ++i)
        for (int j = 0; j < k; ++j) Wc[i][j] = W[j][i];
      QMat R = qsolve(Wc, qmul(Ml, Wc));
      auto rr = integer_roots(char_poly(R));
      if (rr.remaining_degree)
        fail(Errc::non_integer_eigenvalue,
             "restricted characteristic polynomial does not split over the integers");
      for (auto [mu, mm] : rr.roots) {
        QMat A = R;
        for (int i = 0; i < k; ++i) A[i][i] -= Rational(mu);
        QMat ker = qkernel(A);
        QMat sub;
        for (auto& kr : ker) {
          std::vector<Rational> v(D);
          for (int i = 0; i < D; ++i)
            for (int j = 0; j < k; ++j) v[i] += kr[j] * W[j][i];
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    subs = std::move(next);
  }

  std::vector<std::vector<Rational>> urows;
  std::vector<Rational> umult;
  for (auto& W : subs) {
    if (W.size() != 1) fail(Errc::not_a_scheme, "common eigenspaces are not one-dimensional");
    auto u = W[0];
    if (u[0] == Rational(0)) fail(Errc::internal, "eigenvector with zero identity coordinate");
    Rational inv = Rational(1) / u[0];
    for (auto& x : u) x *= inv;
    QMat ur;
    ur.push_back(u);
    for (int i = 0; i < D; ++i) {
      QMat prod = qmul(ur, B[i]);
      for (int j = 0; j < D; ++j)
        if (prod[0][j] != u[i] * u[j])
          fail(Errc::internal, "refined vector is not a common eigenvector");
    }
    Rational denom;
    for (int i = 0; i < D; ++i) denom += u[i] * u[i] / Rational(r.valencies[i]);
    umult.push_back(Rational(n) / denom);
    urows.push_back(std::move(u));
  }

  int perron = -1;
  for (int m = 0; m < D; ++m) {
    bool all = true;
    for (int i = 0; i < D; ++i)
      if (urows[m][i] != Rational(r.valencies[i])) all = false;
    if (all) perron = m;
  }
  if (perron < 0) fail(Errc::internal, "valency eigenvector missing");

  std::vector<int> order{perron};
  std::vector<int> rest;
  for (int m = 0; m < D; ++m)
    if (m != perron) rest.push_back(m);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    if (umult[a] != umult[b]) return umult[b] < umult[a];
    return std::lexicographical_compare(urows[b].begin(), urows[b].end(),
                                        urows[a].begin(), urows[a].end());
  });
  order.insert(order.end(), rest.begin(), rest.end());

  EigenData e;
  e.d = r.d;
  e.n = n;
  for (int m : order) e.P.push_back(urows[m]);
  QMat inv = qinverse(e.P);
  e.Q = qmat(D, D);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) e.Q[i][j] = inv[i][j] * Rational(n);
  long long total = 0;
  for (int m = 0; m < D; ++m) {
    if (!e.Q[0][m].is_integer() || e.Q[0][m] != umult[order[m]])
      fail(Errc::internal, "multiplicities are inconsistent");
    e.mult.push_back(e.Q[0][m].to_integer());
    total += e.mult.back();
  }
  if (total != n) fail(Errc::internal, "multiplicities do not sum to the circle count");
  return e;
}

bool verify_reference_tables(const EigenData& e, Family f, long long q, std::string* why) {
  auto set_why = [&](const std::string& s) {
    if (why) *why = s;
  };
  QMat Pref = reference_P(f, q), Qref = reference_Q(f, q);
  auto mref = reference_mult(f, q);
  const int D = e.d + 1;
  if ((int)Pref.size() != D) {
    set_why("class count differs from the reference");
    return false;
  }
  std::vector<int> sigma(D, -1);
  std::vector<char> used(D, 0);
  for (int m = 0; m < D; ++m) {
    for (int t = 0; t < D; ++t)
      if (!used[t] && e.P[m] == Pref[t]) {
        sigma[m] = t;
        used[t] = 1;
        break;
      }
    if (sigma[m] < 0) {
      std::string row;
      for (auto& x : e.P[m]) row += x.str() + " ";
      set_why("computed eigenvalue row [" + row + "] is not a reference row");
      return false;
    }
  }
  for (int m = 0; m < D; ++m)
    if (e.mult[m] != mref[sigma[m]]) {
      set_why("multiplicity " + std::to_string(e.mult[m]) + " differs from reference " +
              std::to_string(mref[sigma[m]]));
      return false;
    }
  for (int i = 0; i < D; ++i)
    for (int m = 0; m < D; ++m)
      if (e.Q[i][m] != Qref[i][sigma[m]]) {
        set_why("dual eigenvalue Q(" + std::to_string(i) + "," + std::to_string(m) +
                ") = " + e.Q[i][m].str() + " differs from reference " +
                Qref[i][sigma[m]].str());
        return false;
      }
  return true;
}

bool intersection_matrix_check(const RelationSet& r, const SchemeCheck& s,
                               const EigenData& e, const std::vector<int>& base,
                               std::string* why) {
  auto set_why = [&](const std::string& msg) {
    if (why) *why = msg;
  };
  const int D = r.d + 1;
  for (int x : base)
    for (int y = 0; y < r.n; ++y) {
      int k = r.relation(x, y);
      for (int i = 0; i < D; ++i)
        for (int j = 0; j < D; ++j)
          if (r.rows[i][y].and_count(r.rows[j][x]) != s.pk(k, i, j)) {
            set_why("A_i T_x = T_x B_i fails at base circle " + std::to_string(x) +
                    ", circle " + std::to_string(y) + ", i=" + std::to_string(i) +
                    ", j=" + std::to_string(j));
            return false;
          }
    }
  for (int i = 0; i < D; ++i)
    for (int k = 0; k < D; ++k)
      for (int m = 0; m < D; ++m) {
        Rational lhs;
        for (int j = 0; j < D; ++j) lhs += Rational(s.pk(k, i, j)) * e.Q[j][m];
        if (lhs != e.P[m][i] * e.Q[k][m]) {
          set_why("B_i does not act on column " + std::to_string(m) +
                  " of Q with eigenvalue P(" + std::to_string(m) + "," + std::to_string(i) +
                  ")");
          return false;
        }
      }
  return true;
}

Rational hoffman_bound(const EigenData& e, const std::vector<Rational>& w) {
  const int D = e.d + 1;
  if ((int)w.size() != D || w[0] != Rational(0))
    fail(Errc::bad_arguments, "weights need size d+1 with zero identity weight");
  std::vector<Rational> vals(D);
  for (int m = 0; m < D; ++m)
    for (int i = 0; i < D; ++i) vals[m] += w[i] * e.P[m][i];
  Rational k = vals[0], tau = vals[0];
  for (auto& v : vals) {
    if (k < v) k = v;
    if (v < tau) tau = v;
  }
  if (k == tau) fail(Errc::bad_arguments, "weighted graph has a single eigenvalue");
  return Rational(e.n) * (-tau) / (k - tau);
}

long long clique_coclique_bound(long long n, long long clique) {
  if (clique <= 0) fail(Errc::bad_arguments, "clique size must be positive");
  return n / clique;
}

LPResult delsarte_lp_bound(const EigenData& e, const std::vector<int>& allowed) {
  const int D = e.d + 1;
  for (int i : allowed)
    if (i < 1 || i > e.d) fail(Errc::bad_arguments, "allowed classes must be in 1..d");
  const int v = (int)allowed.size();
  if (v == 0) return {Rational(1), {}};

  // constraints c . a >= b
  std::vector<std::vector<Rational>> C;
  std::vector<Rational> bs;
  for (int t = 0; t < v; ++t) {
    std::vector<Rational> row(v);
    row[t] = 1;
    C.push_back(row);
    bs.push_back(Rational(0));
  }
  for (int m = 0; m < D; ++m) {
    std::vector<Rational> row(v);
    for (int t = 0; t < v; ++t) row[t] = e.Q[allowed[t]][m];
    C.push_back(row);
    bs.push_back(-e.Q[0][m]);
  }

  const int total = (int)C.size();
  LPResult best{Rational(0), {}};
  bool found = false;
  std::vector<int> pick(v);
  // every vertex of the feasible polytope binds v of the constraints
  auto consider = [&](const std::vector<int>& S) {
    QMat A = qmat(v, v), rhs = qmat(v, 1);
    for (int t = 0; t < v; ++t) {
      A[t] = C[S[t]];
      rhs[t][0] = bs[S[t]];
    }
    QMat x;
    try {
      x = qsolve(A, rhs);
    } catch (const Error&) {
      return;  // singular subset
    }
    for (int r = 0; r < total; ++r) {
      Rational dot;
      for (int t = 0; t < v; ++t) dot += C[r][t] * x[t][0];
      if (dot < bs[r]) return;  // infeasible vertex
    }
    Rational obj(1);
    for (int t = 0; t < v; ++t) obj += x[t][0];
    if (!found || best.value < obj) {
      best.value = obj;
      best.a.clear();
      for (int t = 0; t < v; ++t) best.a.push_back(x[t][0]);
      found = true;
    }
  };
  std::vector<int> idx(total);
  for (int i = 0; i < total; ++i) idx[i] = i;
  std::vector<int> comb(v);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == v) {
      consider(comb);
      return;
    }
    for (int i = start; i < total; ++i) {
      comb[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  if (!found) fail(Errc::internal, "no feasible vertex in the linear program");
  return best;
}

GramReport incidence_identities(const CircleGeometry& g, const RelationSet& r) {
  GramReport rep;
  const int q = g.q, n = g.num_circles(), np = g.num_points();
  const bool plus = g.kind == GeoKind::laguerre_plus;
  const int diag = plus ? q + 2 : q + 1;

  rep.identity_holds = true;
  for (int x = 0; x < n && rep.identity_holds; ++x)
    for (int y = 0; y < n; ++y) {
      int cnt = g.circle_bits[x].and_count(g.circle_bits[y]);
      int want;
      if (x == y)
        want = diag;
      else if (plus)
        want = r.relation(x, y) == 1 ? 2 : 0;
      else {
        int k = r.relation(x, y);
        want = k == 1 ? 1 : k == 2 ? 2 : 0;
      }
      if (cnt != want) {
        rep.identity_holds = false;
        rep.note = "Gram entry (" + std::to_string(x) + "," + std::to_string(y) +
                   ") is " + std::to_string(cnt) + ", expected " + std::to_string(want);
        break;
      }
    }
  rep.identity = plus ? "W W^t = (q+2) I + 2 A_1" : "W W^t = (q+1) I + A_1 + 2 A_2";

  if (g.kind == GeoKind::mobius && rep.identity_holds) {
    for (int a = 0; a < np && rep.identity_holds; ++a)
      for (int b = 0; b < np; ++b) {
        int cnt = g.point_bits[a].and_count(g.point_bits[b]);
        int want = a == b ? q * (q + 1) : q + 1;
        if (cnt != want) {
          rep.identity_holds = false;
          rep.note = "point Gram entry (" + std::to_string(a) + "," + std::to_string(b) +
                     ") is " + std::to_string(cnt) + ", expected " + std::to_string(want);
          break;
        }
      }
    rep.identity += "; W^t W = (q^2-1) I + (q+1) J";
  }

  // exact rank: a modular lower bound must meet the kernel upper bound
  const long long pr = 1000003;
  std::vector<std::vector<long long>> W(np, std::vector<long long>(n, 0));
  for (int c = 0; c < n; ++c)
    for (int p : g.circles[c]) W[p][c] = 1;
  long long lower = rank_mod_p(W, pr);

  std::vector<std::vector<long long>> kerv;
  for (int rel = 0; rel < g.r(); ++rel)
    for (int k = 1; k < (int)g.classes[rel].size(); ++k) {
      std::vector<long long> v(np, 0);
      for (int p : g.classes[rel][k]) v[p] += 1;
      for (int p : g.classes[rel][0]) v[p] -= 1;
      for (const auto& circ : g.circles) {
        long long sum = 0;
        for (int p : circ) sum += v[p];
        if (sum != 0) fail(Errc::internal, "class difference is not in the kernel");
      }
      kerv.push_back(std::move(v));
    }
  long long kdim = kerv.empty() ? 0 : rank_mod_p(kerv, pr);
  if (kdim != (long long)kerv.size())
    fail(Errc::internal, "kernel vectors are not independent");
  long long upper = np - kdim;

  rep.rank = lower;
  rep.rank_certified = lower == upper;
  if (!rep.rank_certified)
    rep.note += (rep.note.empty() ? "" : "; ") + std::string("rank bounds ") +
                std::to_string(lower) + " and " + std::to_string(upper) + " do not meet";
  return rep;
}

namespace {

// dense integer product helpers for the closure checks
using IMat = std::vector<long long>;

IMat imul(const IMat& a, const IMat& b, int n) {
  IMat out((size_t)n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a[(size_t)i * n + k];
      if (!aik) continue;
      const long long* brow = &b[(size_t)k * n];
      long long* orow = &out[(size_t)i * n];
      for (int j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  return out;
}

IMat rel_matrix(const RelationSet& r, int j, long long shift) {
  IMat m((size_t)r.n * r.n, 0);
  for (int x = 0; x < r.n; ++x) {
    r.rows[j][x].for_each([&](int y) { m[(size_t)x * r.n + y] = 1; });
    m[(size_t)x * r.n + x] -= shift;
  }
  return m;
}

bool all_zero(const IMat& m) {
  for (long long v : m)
    if (v) return false;
  return true;
}

}  // namespace

bool spectral_closure(const RelationSet& r, const EigenData& e, std::string* why) {
  const int D = r.d + 1;
  for (int j = 1; j < D; ++j) {
    std::vector<long long> lams;
    for (int m = 0; m < D; ++m) {
      if (!e.P[m][j].is_integer()) {
        if (why) *why = "non-integer eigenvalue in column " + std::to_string(j);
        return false;
      }
      long long l = e.P[m][j].to_integer();
      if (std::find(lams.begin(), lams.end(), l) == lams.end()) lams.push_back(l);
    }
    // row-sum norms bound every intermediate entry well inside int64
    IMat cur = rel_matrix(r, j, lams[0]);
    for (size_t t = 1; t < lams.size(); ++t)
      cur = imul(cur, rel_matrix(r, j, lams[t]), r.n);
    if (!all_zero(cur)) {
      if (why)
        *why = "product over the spectrum of A_" + std::to_string(j) + " is nonzero";
      return false;
    }
  }
  return true;
}

bool multiplicity_traces(const RelationSet& r, const SchemeCheck& s, const EigenData& e,
                         std::string* why) {
  auto set_why = [&](const std::string& msg) {
    if (why) *why = msg;
  };
  const int D = r.d + 1;
  for (int j = 1; j < D; ++j) {
    Rational t1, t2, t3;
    for (int m = 0; m < D; ++m) {
      Rational lam = e.P[m][j], mm(e.mult[m]);
      t1 += mm * lam;
      t2 += mm * lam * lam;
      t3 += mm * lam * lam * lam;
    }
    long long nj = r.valencies[j];
    if (t1 != Rational(0)) {
      set_why("trace of A_" + std::to_string(j) + " is not zero");
      return false;
    }
    if (t2 != Rational(e.n) * Rational(nj)) {
      set_why("trace of A_" + std::to_string(j) + "^2 differs from n n_j");
      return false;
    }
    if (t3 != Rational(e.n) * Rational(nj) * Rational(s.pk(j, j, j))) {
      set_why("trace of A_" + std::to_string(j) + "^3 differs from n n_j p^j_jj");
      return false;
    }
  }
  return true;
}

int distinct_eigenvalues_exact(const RelationSet& r, int j) {
  const int n = r.n;
  // numeric discovery by cyclic Jacobi on the symmetric relation matrix
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (int x = 0; x < n; ++x)
    r.rows[j][x].for_each([&](int y) { a[x][y] = 1.0; });
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-18) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-15) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), sn = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - sn * akq;
          a[k][q] = sn * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - sn * aqk;
          a[q][k] = sn * apk + c * aqk;
        }
      }
  }
  std::vector<long long> cand;
  for (int i = 0; i < n; ++i) {
    long long v = llround(a[i][i]);
    if (std::fabs(a[i][i] - (double)v) > 0.25)
      fail(Errc::internal, "eigenvalue far from an integer, cannot certify");
    if (std::find(cand.begin(), cand.end(), v) == cand.end()) cand.push_back(v);
  }
  std::sort(cand.begin(), cand.end(), std::greater<>());

  // certification: the product over all candidates vanishes, and omitting
  // any one candidate leaves a nonzero matrix
  auto product_skipping = [&](int skip) {
    IMat cur;
    bool started = false;
    for (int t = 0; t < (int)cand.size(); ++t) {
      if (t == skip) continue;
      if (!started) {
        cur = rel_matrix(r, j, cand[t]);
        started = true;
      } else {
        cur = imul(cur, rel_matrix(r, j, cand[t]), n);
      }
    }
    return cur;
  };
  if (!all_zero(product_skipping(-1)))
    fail(Errc::internal, "candidate spectrum does not annihilate the matrix");
  int count = 0;
  for (int t = 0; t < (int)cand.size(); ++t)
    if (!all_zero(product_skipping(t))) ++count;
  return count;
}

}  // namespace benz
