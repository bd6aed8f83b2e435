#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "benz/quadset.hpp"

using namespace benz;

static std::shared_ptr<const Space> make_space(long long q) {
  return std::make_shared<Space>(Field::create(q));
}

TEST_CASE("elliptic quadric sizes and ovoid axioms") {
  for (long long q : {2LL, 3LL, 4LL, 5LL, 7LL, 8LL, 9LL}) {
    CAPTURE(q);
    auto s = make_space(q);
    auto e = elliptic_quadric(s);  // constructor itself validates
    CHECK((long long)e.points.size() == q * q + 1);
    CHECK(no_three_collinear(*s, e.points));
  }
}

TEST_CASE("elliptic quadric section census") {
  for (long long q : {3LL, 4LL, 5LL}) {
    CAPTURE(q);
    auto s = make_space(q);
    auto e = elliptic_quadric(s);
    std::map<SectionKind, int> census;
    for (int pl = 0; pl < s->num_planes(); ++pl) {
      auto sec = plane_section(e, pl);
      census[sec.kind]++;
      if (sec.kind == SectionKind::oval) CHECK((long long)sec.points.size() == q + 1);
    }
    CHECK(census[SectionKind::tangent_point] == q * q + 1);
    CHECK(census[SectionKind::oval] == q * q * q + q);
    CHECK(census[SectionKind::line_pair_or_lines] == 0);
    CHECK(census[SectionKind::other] == 0);
  }
}

TEST_CASE("secant tangent external line counts through an elliptic quadric") {
  auto s = make_space(5);
  auto e = elliptic_quadric(s);
  // every line meets the ovoid in 0, 1 or 2 points; count each class
  std::map<std::vector<int>, int> seen;
  long long counts[3] = {0, 0, 0};
  for (int p = 0; p < s->num_points(); ++p) {
    for (int r = p + 1; r < s->num_points(); ++r) {
      auto l = s->line_through(p, r);
      if (l.points[0] != p || !seen.emplace(l.points, 0).second) continue;
      int c = Space::line_class(l, e.member);
      REQUIRE(c <= 2);
      counts[c]++;
    }
  }
  // tangent lines: q+1 through each of the q^2+1 points
  CHECK(counts[1] == 26 * 6);
  // secants: one per point pair
  CHECK(counts[2] == 26 * 25 / 2);
}

TEST_CASE("quadric cone structure") {
  for (long long q : {2LL, 3LL, 4LL, 5LL, 8LL}) {
    CAPTURE(q);
    auto s = make_space(q);
    auto c = quadric_cone(s);
    CHECK((long long)c.points.size() == q * (q + 1) + 1);
    CHECK(c.vertex == s->point_index({0, 0, 0, 1}));
    CHECK((long long)c.base_oval.size() == q + 1);
    CHECK(no_three_collinear(*s, c.base_oval));
    // planes through the vertex are never oval planes
    for (int pl = 0; pl < s->num_planes(); ++pl) {
      if (!s->incident(c.vertex, pl)) continue;
      CHECK(plane_section(c, pl).kind != SectionKind::oval);
    }
    if (q % 2 == 0) {
      CHECK((long long)c.nucleus_line.size() == q + 1);
      CHECK(std::binary_search(c.nucleus_line.begin(), c.nucleus_line.end(), c.vertex));
      // nucleus line touches the cone only at the vertex
      int on = 0;
      for (int p : c.nucleus_line) on += c.member.test(p);
      CHECK(on == 1);
    }
  }
}

TEST_CASE("cone oval plane count") {
  for (long long q : {3LL, 4LL}) {
    CAPTURE(q);
    auto s = make_space(q);
    auto c = quadric_cone(s);
    int ovals = 0;
    for (int pl = 0; pl < s->num_planes(); ++pl)
      ovals += plane_section(c, pl).kind == SectionKind::oval;
    CHECK((long long)ovals == q * q * q);
  }
}

TEST_CASE("oval cone over the conic reproduces the quadric cone") {
  auto s = make_space(5);
  auto c1 = quadric_cone(s);
  auto c2 = oval_cone(s, c1.base_oval);
  CHECK(c1.points == c2.points);
  CHECK(c1.vertex == c2.vertex);
}

TEST_CASE("oval cone rejects non-ovals") {
  auto s = make_space(4);
  // take a line's points plus fillers: collinear triple inside
  auto l = s->line_through(0, 1);
  std::vector<int> bad(l.points.begin(), l.points.end());
  CHECK_THROWS_AS(oval_cone(s, bad), Error);
  try {
    oval_cone(s, bad);
  } catch (const Error& e) {
    CHECK(e.code == Errc::not_an_oval);
  }
}

TEST_CASE("hyperoval minus point gives a valid oval cone at q=4") {
  auto s = make_space(4);
  auto base = hyperoval_minus_point_oval(*s);
  CHECK((int)base.size() == 5);
  // differs from the canonical conic as a point set
  auto conic = quadric_cone(s).base_oval;
  CHECK(base != conic);
  auto cone = oval_cone(s, base);
  CHECK((int)cone.points.size() == 21);  // 20 non-singular + vertex
  int ovals = 0;
  for (int pl = 0; pl < s->num_planes(); ++pl)
    ovals += plane_section(cone, pl).kind == SectionKind::oval;
  CHECK(ovals == 64);
}

TEST_CASE("hyperbolic quadric and rulings") {
  for (long long q : {2LL, 3LL, 4LL, 5LL}) {
    CAPTURE(q);
    auto s = make_space(q);
    auto h = hyperbolic_quadric(s);
    CHECK((long long)h.points.size() == (q + 1) * (q + 1));
    CHECK((long long)h.rulings[0].size() == q + 1);
    CHECK((long long)h.rulings[1].size() == q + 1);
    // each point lies on exactly one line of each ruling
    for (int p : h.points) {
      for (auto& ruling : h.rulings) {
        int on = 0;
        for (auto& l : ruling)
          on += std::binary_search(l.begin(), l.end(), p);
        CHECK(on == 1);
      }
    }
    // opposite rulings meet in one point
    for (auto& a : h.rulings[0])
      for (auto& b : h.rulings[1]) {
        std::vector<int> tmp;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::back_inserter(tmp));
        CHECK((int)tmp.size() == 1);
      }
  }
}

TEST_CASE("hyperbolic section census") {
  auto s = make_space(4);
  auto h = hyperbolic_quadric(s);
  std::map<SectionKind, int> census;
  for (int pl = 0; pl < s->num_planes(); ++pl) census[plane_section(h, pl).kind]++;
  CHECK(census[SectionKind::oval] == 3 * 4 * 5);      // (q-1)q(q+1)
  CHECK(census[SectionKind::line_pair_or_lines] == 25);  // tangent planes
  CHECK(census[SectionKind::tangent_point] == 0);
  CHECK(census[SectionKind::other] == 0);
}

TEST_CASE("suzuki tits ovoid at q=8") {
  auto s = make_space(8);
  auto st = suzuki_tits(s);
  CHECK((int)st.points.size() == 65);
  CHECK(no_three_collinear(*s, st.points));
  // plane sections have size 1 or q+1
  std::map<int, int> sizes;
  for (int pl = 0; pl < s->num_planes(); ++pl)
    sizes[(int)plane_section(st, pl).points.size()]++;
  CHECK(sizes.size() == 2);
  CHECK(sizes[1] == 65);
  CHECK(sizes[9] == 520);
}

TEST_CASE("suzuki tits rejects wrong orders") {
  for (long long q : {2LL, 4LL, 16LL}) {
    CAPTURE(q);
    auto s = make_space(q);
    CHECK_THROWS_AS(suzuki_tits(s), Error);
    try {
      suzuki_tits(s);
    } catch (const Error& e) {
      CHECK(e.code == Errc::unsupported_order);
    }
  }
}

TEST_CASE("suzuki tits ovoid satisfies no quadratic form") {
  auto s = make_space(8);
  auto st = suzuki_tits(s);
  CHECK(vanishing_form_dim(*s, st.points) == 0);
  // while the elliptic quadric satisfies exactly one form up to scalar
  auto e = elliptic_quadric(s);
  CHECK(vanishing_form_dim(*s, e.points) == 1);
}

TEST_CASE("census nucleus behaviour") {
  auto s4 = make_space(4);
  auto c4 = quadric_cone(s4);
  int nuc = oval_nucleus(*s4, c4.base_plane, c4.base_oval);
  CHECK(nuc >= 0);
  CHECK(!c4.member.test(nuc));
  // odd q: no nucleus
  auto s5 = make_space(5);
  auto c5 = quadric_cone(s5);
  CHECK(oval_nucleus(*s5, c5.base_plane, c5.base_oval) == -1);
}
