#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "benz/errors.hpp"
#include "benz/geometry.hpp"
#include "benz/polyfam.hpp"
#include "support/oracle.hpp"

using namespace benz;

static PolySpace space(long long q, int k) { return PolySpace::create(Field::create(q), k); }

static long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST_CASE("space indexing and evaluation") {
  auto s = space(3, 2);
  CHECK(s.n == 27);
  // index 14 = 1*9 + 1*3 + 2 is X^2 + X + 2
  CHECK(s.coeff(14, 0) == 2);
  CHECK(s.coeff(14, 1) == 1);
  CHECK(s.coeff(14, 2) == 1);
  CHECK(s.leading(14) == 1);
  CHECK(s.eval(14, 0) == 2);
  CHECK(s.eval(14, 1) == 1);
  CHECK(s.eval(14, 2) == 2);

  CHECK(agreement(s, 5, 5) == 3);
  // adding a nonzero constant kills every agreement
  CHECK(agreement(s, 3, 4) == 0);
  // X^2 and X agree exactly on 0 and 1
  CHECK(agreement(s, 9, 3) == 2);

  CHECK_THROWS_AS(PolySpace::create(Field::create(3), 0), Error);
  CHECK_THROWS_AS(PolySpace::create(Field::create(1024), 3), Error);

  // a space too large for evaluation tables still evaluates correctly
  auto big = PolySpace::create(Field::create(16), 4);
  CHECK(big.values.empty());
  auto f16 = Field::create(16);
  int idx = (int)ipow(16, 4) + 3;  // X^4 + 3
  for (int x : {0, 1, 5, 11}) CHECK(big.eval(idx, x) == f16->add(f16->pow(x, 4), 3));
}

TEST_CASE("agreement graph is the cayley graph it claims to be") {
  for (auto [q, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}}) {
    auto s = space(q, k);
    for (int t = 1; t <= 2; ++t) {
      CAPTURE(q);
      CAPTURE(t);
      auto g = poly_agreement_graph(s, t);
      int deg = g.degree(0);
      for (int v = 0; v < g.n; ++v) CHECK(g.degree(v) == deg);
      for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j)
          CHECK(g.adj[i].test(j) == (agreement(s, i, j) >= t));
    }
  }
  CHECK_THROWS_AS(poly_agreement_graph(space(3, 2), 0), Error);
}

TEST_CASE("extremal family sizes") {
  struct Row {
    int q, k, t;
  };
  for (Row r : {Row{3, 2, 1}, Row{3, 2, 2}, Row{4, 2, 1}, Row{4, 2, 2}, Row{5, 2, 1},
                Row{5, 2, 2}, Row{7, 2, 1}, Row{7, 2, 2}, Row{4, 3, 1}, Row{4, 3, 2}}) {
    CAPTURE(r.q);
    CAPTURE(r.k);
    CAPTURE(r.t);
    auto s = space(r.q, r.k);
    auto m = max_t_intersecting_polys(s, r.t);
    CHECK(m.t_intersecting.optimal);
    CHECK(m.t_intersecting.size == ipow(r.q, r.k + 1 - r.t));
    CHECK(m.non_t_intersecting.optimal);
    CHECK(m.non_t_intersecting.size == ipow(r.q, r.t));

    // the witnesses really are what they claim
    const auto& good = m.t_intersecting.circles;
    for (size_t i = 0; i < good.size(); ++i)
      for (size_t j = i + 1; j < good.size(); ++j)
        CHECK(agreement(s, good[i], good[j]) >= r.t);
    const auto& avoid = m.non_t_intersecting.circles;
    for (size_t i = 0; i < avoid.size(); ++i)
      for (size_t j = i + 1; j < avoid.size(); ++j)
        CHECK(agreement(s, avoid[i], avoid[j]) < r.t);
  }

  CHECK_THROWS_AS(max_t_intersecting_polys(space(3, 2), 3), Error);
  CHECK_THROWS_AS(max_t_intersecting_polys(space(3, 3), 1), Error);
}

TEST_CASE("strong EKR classification") {
  for (auto [q, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 2}, {4, 3}}) {
    CAPTURE(q);
    CAPTURE(k);
    auto s = space(q, k);
    auto e = strong_ekr_polys(s);
    CHECK(e.enumeration.complete);
    CHECK(e.all_stabilizers);
    CHECK((long long)e.enumeration.families.size() == (long long)q * q);
    REQUIRE(e.labels.size() == e.enumeration.families.size());

    std::set<std::pair<int, int>> seen;
    for (size_t i = 0; i < e.labels.size(); ++i) {
      auto [x, y] = e.labels[i];
      REQUIRE(x >= 0);
      seen.insert({x, y});
      CHECK(e.enumeration.families[i].size == ipow(q, k));
      // the family is exactly the polynomials through (x, y)
      std::vector<int> through;
      for (int f = 0; f < s.n; ++f)
        if (s.eval(f, x) == y) through.push_back(f);
      CHECK(e.enumeration.families[i].circles == through);
    }
    CHECK((long long)seen.size() == (long long)q * q);
  }

  CHECK_THROWS_AS(strong_ekr_polys(space(3, 1)), Error);
  CHECK_THROWS_AS(strong_ekr_polys(space(3, 3)), Error);
}

TEST_CASE("point stabilizers are intersecting of full size") {
  for (auto [q, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
    CAPTURE(q);
    CAPTURE(k);
    auto s = space(q, k);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        std::vector<int> fam;
        for (int f = 0; f < s.n; ++f)
          if (s.eval(f, x) == y) fam.push_back(f);
        CHECK((long long)fam.size() == ipow(q, k));
        bool inter = true;
        for (size_t i = 0; i < fam.size() && inter; ++i)
          for (size_t j = i + 1; j < fam.size() && inter; ++j)
            inter = agreement(s, fam[i], fam[j]) >= 1;
        CHECK(inter);
      }
  }
}

TEST_CASE("two value counts follow the quadratic type") {
  for (int q : {3, 5, 7}) {
    CAPTURE(q);
    auto f = Field::create(q);
    for (int x1 : {0, 1, q})
      for (int x2 : {0, 2, q}) {
        if (x1 == x2 || (q == 3 && (x1 == 2 || x2 == 2))) continue;
        long long sum0 = 0;
        for (int y1 = 1; y1 < q; ++y1)
          for (int y2 = 1; y2 < q; ++y2) {
            auto m = mi_counts(f, x1, y1, x2, y2);
            bool sq = f->quadratic_character(f->div(y1, y2)) == QChar::square;
            CHECK(m.m1 == (sq ? 2 : 0));
            CHECK(m.m0 == (sq ? (q - 1) / 2 : (q + 1) / 2));
            CHECK(m.m2 == (sq ? (q - 3) / 2 : (q - 1) / 2));
            CHECK(m.m0 + m.m1 + m.m2 == q);
            CHECK(m.m1 + 2 * m.m2 == q - 1);
            sum0 += m.m0;
          }
        // every rootless quadratic passes through nonzero values only,
        // so the class size comes back on summation
        CHECK(sum0 == (long long)q * (q - 1) * (q - 1) / 2);
      }
  }

  auto f5 = Field::create(5);
  CHECK_THROWS_AS(mi_counts(Field::create(4), 0, 1, 1, 1), Error);
  CHECK_THROWS_AS(mi_counts(f5, 0, 0, 1, 1), Error);
  CHECK_THROWS_AS(mi_counts(f5, 2, 1, 2, 1), Error);
  CHECK_THROWS_AS(mi_counts(f5, 0, 1, 6, 1), Error);
}

TEST_CASE("rootless counts") {
  for (int q : {3, 5, 7, 9}) {
    CAPTURE(q);
    auto f = Field::create(q);
    for (int x : {0, 1, q})
      for (int y : {1, 2}) CHECK(rootless_count(f, x, y) == (long long)q * (q - 1) / 2);
  }

  // independent recount in plain modular arithmetic
  for (int q : {3, 5, 7}) {
    CAPTURE(q);
    long long plain = 0;
    for (int a = 1; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) {
          if ((a * 0 * 0 + b * 0 + c) % q != 1) continue;
          bool rootless = true;
          for (int x = 0; x < q && rootless; ++x)
            rootless = (a * x * x + b * x + c) % q != 0;
          plain += rootless;
        }
    CHECK(plain == rootless_count(Field::create(q), 0, 1));
  }

  CHECK_THROWS_AS(rootless_count(Field::create(4), 0, 1), Error);
  CHECK_THROWS_AS(rootless_count(Field::create(5), 0, 0), Error);
}

TEST_CASE("square separator") {
  auto euler_square = [](const Field& f, int a) {
    return f.pow(a, (int)(f.order() - 1) / 2) == 1;
  };
  for (int q : {3, 5, 7, 9}) {
    CAPTURE(q);
    auto f = Field::create(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        if (a == b) continue;
        int c = square_separator(f, a, b);
        CHECK(c != a);
        CHECK(c != b);
        CHECK(euler_square(*f, f->sub(c, a)) != euler_square(*f, f->sub(c, b)));
        // nothing smaller qualifies
        for (int d = 0; d < c; ++d) {
          if (d == a || d == b) continue;
          CHECK(euler_square(*f, f->sub(d, a)) == euler_square(*f, f->sub(d, b)));
        }
      }
  }
  CHECK(square_separator(Field::create(5), 0, 1) == 2);
  CHECK(square_separator(Field::create(7), 0, 1) == 3);

  CHECK_THROWS_AS(square_separator(Field::create(4), 0, 1), Error);
  CHECK_THROWS_AS(square_separator(Field::create(5), 2, 2), Error);
}

TEST_CASE("degree two space matches the Laguerre circle list") {
  for (int q : {3, 4, 5}) {
    CAPTURE(q);
    auto s = space(q, 2);
    auto g = laguerre_polynomial_model(Field::create(q));
    REQUIRE(g.num_circles() == s.n);
    for (int i = 0; i < s.n; ++i)
      for (int j = i + 1; j < s.n; ++j) {
        int meet = oracle::intersect_count(g.circles[i], g.circles[j]);
        int far = s.leading(i) == s.leading(j);
        CHECK(meet == agreement(s, i, j) + far);
      }
  }
}
