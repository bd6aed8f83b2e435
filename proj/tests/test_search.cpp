#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "benz/errors.hpp"
#include "benz/geometry.hpp"
#include "benz/search.hpp"
#include "support/oracle.hpp"

using namespace benz;

static std::shared_ptr<const Space> make_space(long long q) {
  return std::make_shared<Space>(Field::create(q));
}

static CircleGeometry mobius(long long q) {
  return from_quadratic_set(elliptic_quadric(make_space(q)));
}

static CircleGeometry laguerre(long long q) {
  return laguerre_polynomial_model(Field::create(q));
}

static CircleGeometry minkowski(long long q) {
  return minkowski_pgl_model(Field::create(q));
}

// Pairwise check straight on the sorted point lists, no bit rows.
static bool is_t_family(const CircleGeometry& g, const std::vector<int>& circles, int t) {
  for (size_t i = 0; i < circles.size(); ++i)
    for (size_t j = i + 1; j < circles.size(); ++j)
      if (oracle::intersect_count(g.circles[circles[i]], g.circles[circles[j]]) < t) return false;
  return true;
}

TEST_CASE("max clique on hand built graphs") {
  BitGraph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  CHECK(c5.degree(0) == 2);

  auto w = max_clique(c5, SearchBudget{});
  CHECK(w.size == 2);
  CHECK(w.optimal);
  CHECK(w.circles == std::vector<int>{0, 1});

  // the complement of a 5-cycle is again a 5-cycle
  BitGraph cc = c5.complement();
  for (int v = 0; v < 5; ++v) CHECK(cc.degree(v) == 2);
  auto wc = max_clique(cc, SearchBudget{});
  CHECK(wc.size == 2);
  CHECK(wc.circles == std::vector<int>{0, 2});

  BitGraph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  auto e2 = cliques_of_size(k3, 2, SearchBudget{});
  CHECK(e2.complete);
  REQUIRE(e2.families.size() == 3);
  CHECK(e2.families[0].circles == std::vector<int>{0, 1});
  CHECK(e2.families[1].circles == std::vector<int>{0, 2});
  CHECK(e2.families[2].circles == std::vector<int>{1, 2});
  auto e3 = cliques_of_size(k3, 3, SearchBudget{});
  CHECK(e3.families.size() == 1);
  auto e4 = cliques_of_size(k3, 4, SearchBudget{});
  CHECK(e4.complete);
  CHECK(e4.families.empty());

  CHECK_THROWS_AS(cliques_of_size(k3, 0, SearchBudget{}), Error);
  try {
    cliques_of_size(k3, 0, SearchBudget{});
  } catch (const Error& e) {
    CHECK(e.code == Errc::bad_arguments);
  }
}

TEST_CASE("agreement graph degrees match relation valencies") {
  auto l3 = laguerre(3);
  auto t1 = agreement_graph(l3, 1);
  auto t2 = agreement_graph(l3, 2);
  CHECK(t1.n == 27);
  for (int v = 0; v < t1.n; ++v) {
    // tangent + secant neighbours, then secant only
    CHECK(t1.degree(v) == 20);
    CHECK(t2.degree(v) == 12);
    Bitrow extra = t2.adj[v];
    extra.and_not(t1.adj[v]);
    CHECK(extra.none());
  }

  auto m4 = mobius(4);
  auto m4t2 = agreement_graph(m4, 2);
  CHECK(m4t2.n == 68);
  for (int v = 0; v < m4t2.n; ++v) CHECK(m4t2.degree(v) == 40);

  CHECK_THROWS_AS(agreement_graph(l3, 0), Error);
}

TEST_CASE("engine agrees with the brute force oracle") {
  struct Case {
    const char* name;
    CircleGeometry g;
  };
  std::vector<Case> cases;
  cases.push_back({"mobius 2", mobius(2)});
  cases.push_back({"mobius 3", mobius(3)});
  cases.push_back({"laguerre 2", laguerre(2)});
  cases.push_back({"laguerre 3", laguerre(3)});
  cases.push_back({"laguerre plus 2", laguerre_plus(laguerre(2))});
  cases.push_back({"minkowski 2", minkowski(2)});
  cases.push_back({"minkowski 3", minkowski(3)});

  for (const auto& c : cases) {
    for (int t = 1; t <= 2; ++t) {
      CAPTURE(c.name);
      CAPTURE(t);
      auto ref = oracle::from_geometry(c.g, t);
      int want = oracle::max_clique_size(ref);

      auto w = max_t_intersecting(c.g, t);
      CHECK(w.optimal);
      CHECK(w.size == want);
      CHECK((int)w.circles.size() == want);
      CHECK(is_t_family(c.g, w.circles, t));

      auto raw = max_clique(agreement_graph(c.g, t), SearchBudget{});
      CHECK(raw.optimal);
      CHECK(raw.size == want);
    }
  }
}

TEST_CASE("proven maxima with their certificates") {
  auto check = [](const CircleGeometry& g, int size, const char* how) {
    auto p = proven_max_intersecting(g);
    CHECK(p.size == size);
    CHECK(p.certified);
    CHECK(p.certificate == how);
  };
  // odd order Mobius planes carry no scheme and the pencil is beaten
  check(mobius(3), 15, "exhaustive search");
  check(mobius(4), 20, "ratio bound met by a pencil");
  check(laguerre(2), 4, "ratio bound met by a pencil");
  check(laguerre(3), 9, "ratio bound met by a pencil");
  check(laguerre(4), 16, "ratio bound met by a pencil");
  check(laguerre(5), 25, "ratio bound met by a pencil");
  check(minkowski(2), 2, "exhaustive search");
  check(minkowski(3), 6, "exhaustive search");
  check(minkowski(4), 12, "ratio bound met by a pencil");
}

TEST_CASE("two intersecting maxima, Laguerre") {
  auto at = [](long long q) { return max_t_intersecting(laguerre(q), 2); };
  struct Row {
    long long q;
    int max;
  };
  for (Row r : {Row{3, 4}, Row{4, 4}, Row{5, 7}, Row{7, 10}, Row{8, 8}}) {
    CAPTURE(r.q);
    auto w = at(r.q);
    CHECK(w.optimal);
    CHECK(w.size == r.max);
    CHECK(is_t_family(laguerre(r.q), w.circles, 2));
  }
}

TEST_CASE("two intersecting maxima, Minkowski") {
  auto at = [](long long q) { return max_t_intersecting(minkowski(q), 2); };
  struct Row {
    long long q;
    int max;
  };
  for (Row r : {Row{2, 1}, Row{3, 2}, Row{4, 4}, Row{5, 5}, Row{7, 8}, Row{8, 10}, Row{9, 12}}) {
    CAPTURE(r.q);
    auto w = at(r.q);
    CHECK(w.optimal);
    CHECK(w.size == r.max);
    CHECK(is_t_family(minkowski(r.q), w.circles, 2));
  }
}

TEST_CASE("two intersecting maxima, Mobius") {
  // Certified exact values, cross checked against an independent
  // Bron-Kerbosch enumeration: 2q is an upper bound for every order
  // here, attained at q = 2, 5, 8 and nowhere else.
  auto at = [](long long q) { return max_t_intersecting(mobius(q), 2); };
  struct Row {
    long long q;
    int max;
  };
  for (Row r : {Row{2, 4}, Row{3, 5}, Row{4, 7}, Row{5, 10}, Row{7, 12}, Row{8, 16}}) {
    CAPTURE(r.q);
    auto w = at(r.q);
    CHECK(w.optimal);
    CHECK(w.size == r.max);
    CHECK(is_t_family(mobius(r.q), w.circles, 2));
  }

  // the two orders where the value is easy to misremember get a second,
  // engine independent confirmation
  CHECK(oracle::max_clique_size(oracle::from_geometry(mobius(4), 2)) == 7);
  CHECK(oracle::max_clique_size(oracle::from_geometry(mobius(5), 2)) == 10);

  CHECK(at(4).circles == std::vector<int>{0, 5, 9, 18, 22, 45, 50});
  CHECK(at(5).circles == std::vector<int>{0, 4, 12, 27, 47, 71, 86, 89, 114, 125});
}

TEST_CASE("enumeration of maximum intersecting families") {
  auto names = [](const EnumerationResult& res) {
    std::vector<std::string> out;
    for (const auto& f : res.families) out.push_back(label_name(f.cls));
    return out;
  };
  auto count_label = [](const EnumerationResult& res, FamilyLabel l) {
    int c = 0;
    for (const auto& f : res.families) c += f.cls.label == l;
    return c;
  };

  SUBCASE("laguerre 2") {
    auto g = laguerre(2);
    auto res = enumerate_maximum_intersecting(g, 4);
    CHECK(res.complete);
    CHECK(res.families.size() == 16);
    CHECK(count_label(res, FamilyLabel::pencil) == 6);
    CHECK(count_label(res, FamilyLabel::nucleus) == 2);
    CHECK(count_label(res, FamilyLabel::other) == 8);

    // the full list matches the oracle's maximum cliques
    auto ref = oracle::maximum_cliques(oracle::from_geometry(g, 1));
    REQUIRE(ref.size() == res.families.size());
    for (size_t i = 0; i < ref.size(); ++i) CHECK(res.families[i].circles == ref[i]);
  }

  SUBCASE("laguerre 3") {
    auto res = enumerate_maximum_intersecting(laguerre(3), 9);
    CHECK(res.complete);
    CHECK(res.families.size() == 12);
    CHECK(count_label(res, FamilyLabel::pencil) == 12);
    // one pencil per point
    std::set<int> ids;
    for (const auto& f : res.families) ids.insert(f.cls.id);
    CHECK(ids.size() == 12);

    auto ref = oracle::maximum_cliques(oracle::from_geometry(laguerre(3), 1));
    REQUIRE(ref.size() == 12);
    for (size_t i = 0; i < ref.size(); ++i) CHECK(res.families[i].circles == ref[i]);
  }

  SUBCASE("minkowski 3") {
    auto res = enumerate_maximum_intersecting(minkowski(3), 6);
    CHECK(res.complete);
    CHECK(res.families.size() == 16);
    CHECK(count_label(res, FamilyLabel::pencil) == 16);

    auto ref = oracle::maximum_cliques(oracle::from_geometry(minkowski(3), 1));
    CHECK(ref.size() == 16);
  }

  SUBCASE("mobius 4") {
    auto res = enumerate_maximum_intersecting(mobius(4), 20);
    CHECK(res.complete);
    CHECK(res.families.size() == 17);
    CHECK(count_label(res, FamilyLabel::pencil) == 17);
    std::set<int> ids;
    for (const auto& f : res.families) ids.insert(f.cls.id);
    CHECK(ids.size() == 17);
  }

  SUBCASE("laguerre 4, both models") {
    for (bool poly : {true, false}) {
      auto g = poly ? laguerre(4) : from_quadratic_set(quadric_cone(make_space(4)));
      CAPTURE(poly);
      auto res = enumerate_maximum_intersecting(g, 16);
      CHECK(res.complete);
      CHECK(res.families.size() == 24);
      CHECK(count_label(res, FamilyLabel::pencil) == 20);
      CHECK(count_label(res, FamilyLabel::nucleus) == 4);
      std::set<int> nids;
      for (const auto& f : res.families)
        if (f.cls.label == FamilyLabel::nucleus) nids.insert(f.cls.id);
      CHECK(nids == std::set<int>{0, 1, 2, 3});
    }
  }

  SUBCASE("laguerre 5") {
    auto res = enumerate_maximum_intersecting(laguerre(5), 25);
    CHECK(res.complete);
    CHECK(res.families.size() == 30);
    CHECK(count_label(res, FamilyLabel::pencil) == 30);
    CHECK(names(res)[0].substr(0, 7) == "pencil(");
  }
}

TEST_CASE("family classification") {
  auto g = laguerre(3);
  std::vector<int> pencil0;
  for (int c = 0; c < g.num_circles(); ++c)
    if (g.point_bits[0].test(c)) pencil0.push_back(c);
  REQUIRE(pencil0.size() == 9);
  auto cls = classify_family(g, pencil0);
  CHECK(cls.label == FamilyLabel::pencil);
  CHECK(cls.id == 0);
  CHECK(label_name(cls) == "pencil(0)");

  // a strict subset of a pencil is not the pencil
  std::vector<int> part(pencil0.begin(), pencil0.end() - 1);
  CHECK(classify_family(g, part).label == FamilyLabel::other);

  auto g2 = laguerre(2);
  std::vector<int> nuc;
  for (int c = 0; c < g2.num_circles(); ++c)
    if (g2.nucleus_map[c] == 1) nuc.push_back(c);
  REQUIRE(nuc.size() == 4);
  auto cls2 = classify_family(g2, nuc);
  CHECK(cls2.label == FamilyLabel::nucleus);
  CHECK(cls2.id == 1);
  CHECK(label_name(cls2) == "nucleus(1)");
}

TEST_CASE("budgets make exhaustion explicit") {
  auto g = mobius(8);
  SearchBudget tiny;
  tiny.node_limit = 1;
  auto w = max_t_intersecting(g, 2, tiny);
  CHECK_FALSE(w.optimal);
  // the seeded two point pencil survives as a valid lower bound
  CHECK(w.size >= 9);
  CHECK((int)w.circles.size() == w.size);
  CHECK(is_t_family(g, w.circles, 2));

  auto en = cliques_of_size(agreement_graph(mobius(4), 1), 20, tiny);
  CHECK_FALSE(en.complete);

  CHECK_THROWS_AS(max_t_intersecting(g, 3), Error);
}

TEST_CASE("witnesses are thread count independent") {
  auto m4 = mobius(4);
  SearchBudget par;
  par.threads = 4;

  auto w1 = max_t_intersecting(m4, 2);
  auto w4 = max_t_intersecting(m4, 2, par);
  CHECK(w1.circles == w4.circles);

  auto k7a = max_t_intersecting(minkowski(7), 2);
  auto k7b = max_t_intersecting(minkowski(7), 2, par);
  CHECK(k7a.circles == k7b.circles);

  auto e1 = enumerate_maximum_intersecting(m4, 20);
  auto e4 = enumerate_maximum_intersecting(m4, 20, par);
  REQUIRE(e1.families.size() == e4.families.size());
  for (size_t i = 0; i < e1.families.size(); ++i)
    CHECK(e1.families[i].circles == e4.families[i].circles);

  // rooted search may fix circle 0; the lexicographically first optimum
  // contains it anyway
  auto graph = agreement_graph(m4, 2);
  auto rooted = max_clique(graph, SearchBudget{}, true);
  auto free_ = max_clique(graph, SearchBudget{});
  CHECK(rooted.circles == free_.circles);
  CHECK(rooted.circles.front() == 0);
}
