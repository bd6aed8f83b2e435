#include "benz/quadset.hpp"

#include <algorithm>
#include <map>

namespace benz {
namespace {

Bitrow membership(const Space& s, const std::vector<int>& pts) {
  Bitrow m(s.num_points());
  for (int p : pts) m.set(p);
  return m;
}

std::vector<int> points_on_plane(const Space& s, int plane) {
  std::vector<int> out;
  for (int p = 0; p < s.num_points(); ++p)
    if (s.incident(p, plane)) out.push_back(p);
  return out;
}

// Row-echelon rank and kernel basis over GF(q).
struct GfElim {
  int rank;
  std::vector<std::vector<int>> kernel;
};

GfElim gf_eliminate(const Field& f, std::vector<std::vector<int>> rows, int ncols) {
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < ncols && r < (int)rows.size(); ++c) {
    int sel = -1;
    for (int i = r; i < (int)rows.size(); ++i)
      if (rows[i][c] != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    int s = f.inv(rows[r][c]);
    for (int j = c; j < ncols; ++j) rows[r][j] = f.mul(rows[r][j], s);
    for (int i = 0; i < (int)rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      int m = rows[i][c];
      for (int j = c; j < ncols; ++j)
        rows[i][j] = f.sub(rows[i][j], f.mul(m, rows[r][j]));
    }
    pivot_col.push_back(c);
    ++r;
  }
  GfElim out;
  out.rank = r;
  std::vector<char> is_pivot(ncols, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  for (int c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(ncols, 0);
    v[c] = 1;
    for (int i = 0; i < r; ++i) v[pivot_col[i]] = f.neg(rows[i][c]);
    out.kernel.push_back(std::move(v));
  }
  return out;
}

// plane through three non-collinear points
int plane_through(const Space& s, int a, int b, int c) {
  const Field& f = s.field();
  std::vector<std::vector<int>> rows;
  for (int p : {a, b, c}) {
    const Coords& x = s.point(p);
    rows.push_back({x[0], x[1], x[2], x[3]});
  }
  auto elim = gf_eliminate(f, rows, 4);
  if ((int)elim.kernel.size() != 1)
    fail(Errc::bad_arguments, "points do not span a plane");
  Coords pl;
  for (int i = 0; i < 4; ++i) pl[i] = (uint16_t)elim.kernel[0][i];
  return s.plane_index(pl);
}

void validate_ovoid(const Space& s, const std::vector<int>& pts, Errc on_fail,
                    const char* what) {
  long long q = s.q();
  if ((long long)pts.size() != q * q + 1)
    fail(on_fail, std::string(what) + ": expected q^2+1 points, got " +
                      std::to_string(pts.size()));
  if (!no_three_collinear(s, pts))
    fail(on_fail, std::string(what) + ": three points are collinear");
}

}  // namespace

bool no_three_collinear(const Space& s, const std::vector<int>& pts) {
  Bitrow m = membership(s, pts);
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      if (Space::line_class(s.line_through(pts[i], pts[j]), m) > 2) return false;
  return true;
}

QuadraticSet elliptic_quadric(std::shared_ptr<const Space> sp) {
  const Space& s = *sp;
  const Field& f = s.field();
  long long q = s.q();
  int ga, gb, gc;  // g = ga X0^2 + gb X0X1 + gc X1^2
  if (q % 2 == 1) {
    ga = 1;
    gb = 0;
    gc = f.neg(f.smallest_nonsquare());
  } else {
    ga = 1;
    gb = 1;
    gc = f.smallest_trace_one();
  }
  QuadraticSet qs;
  qs.kind = QuadKind::elliptic;
  qs.space = sp;
  for (int p = 0; p < s.num_points(); ++p) {
    const Coords& x = s.point(p);
    int g = f.add(f.add(f.mul(ga, f.mul(x[0], x[0])), f.mul(gb, f.mul(x[0], x[1]))),
                  f.mul(gc, f.mul(x[1], x[1])));
    if (f.add(g, f.mul(x[2], x[3])) == 0) qs.points.push_back(p);
  }
  validate_ovoid(s, qs.points, Errc::construction_invalid, "elliptic quadric");
  qs.member = membership(s, qs.points);
  return qs;
}

QuadraticSet quadric_cone(std::shared_ptr<const Space> sp) {
  const Space& s = *sp;
  const Field& f = s.field();
  long long q = s.q();
  QuadraticSet qs;
  qs.kind = QuadKind::cone;
  qs.space = sp;
  qs.vertex = s.point_index({0, 0, 0, 1});
  for (int a = 0; a < q; ++a) {
    qs.points.push_back(s.point_index({1, 0, 0, (uint16_t)a}));
    for (int t = 0; t < q; ++t)
      qs.points.push_back(
          s.point_index({(uint16_t)f.mul(t, t), (uint16_t)t, 1, (uint16_t)a}));
  }
  qs.points.push_back(qs.vertex);
  std::sort(qs.points.begin(), qs.points.end());
  if ((long long)qs.points.size() != q * (q + 1) + 1 ||
      std::adjacent_find(qs.points.begin(), qs.points.end()) != qs.points.end())
    fail(Errc::construction_invalid, "cone point count is off");
  qs.member = membership(s, qs.points);

  qs.base_plane = s.plane_index({0, 0, 0, 1});  // X3 = 0
  qs.base_oval.push_back(s.point_index({1, 0, 0, 0}));
  for (int t = 0; t < q; ++t)
    qs.base_oval.push_back(s.point_index({(uint16_t)f.mul(t, t), (uint16_t)t, 1, 0}));
  std::sort(qs.base_oval.begin(), qs.base_oval.end());

  if (q % 2 == 0) {
    int nuc = oval_nucleus(s, qs.base_plane, qs.base_oval);
    if (nuc < 0) fail(Errc::construction_invalid, "conic base has no nucleus");
    qs.nucleus_line = s.line_through(qs.vertex, nuc).points;
  }
  return qs;
}

QuadraticSet oval_cone(std::shared_ptr<const Space> sp, const std::vector<int>& base) {
  const Space& s = *sp;
  long long q = s.q();
  if ((long long)base.size() != q + 1)
    fail(Errc::not_an_oval, "base must have q+1 points");
  if (!no_three_collinear(s, base))
    fail(Errc::not_an_oval, "three base points are collinear");
  int plane = plane_through(s, base[0], base[1], base[2]);
  for (int p : base)
    if (!s.incident(p, plane)) fail(Errc::not_an_oval, "base is not coplanar");

  int vertex = -1;
  for (int p = 0; p < s.num_points(); ++p)
    if (!s.incident(p, plane)) { vertex = p; break; }

  QuadraticSet qs;
  qs.kind = QuadKind::cone;
  qs.space = sp;
  qs.vertex = vertex;
  qs.base_plane = plane;
  qs.base_oval = base;
  std::sort(qs.base_oval.begin(), qs.base_oval.end());
  Bitrow m(s.num_points());
  for (int b : qs.base_oval)
    for (int p : s.line_through(vertex, b).points) m.set(p);
  qs.member = m;
  qs.points = m.to_vector();
  if ((long long)qs.points.size() != q * (q + 1) + 1)
    fail(Errc::construction_invalid, "cone generators overlap unexpectedly");

  if (q % 2 == 0) {
    int nuc = oval_nucleus(s, plane, qs.base_oval);
    if (nuc < 0) fail(Errc::construction_invalid, "even-q base oval has no nucleus");
    qs.nucleus_line = s.line_through(vertex, nuc).points;
  }
  return qs;
}

QuadraticSet hyperbolic_quadric(std::shared_ptr<const Space> sp) {
  const Space& s = *sp;
  const Field& f = s.field();
  long long q = s.q();
  QuadraticSet qs;
  qs.kind = QuadKind::hyperbolic;
  qs.space = sp;
  for (int p = 0; p < s.num_points(); ++p) {
    const Coords& x = s.point(p);
    if (f.add(f.mul(x[0], x[1]), f.mul(x[2], x[3])) == 0) qs.points.push_back(p);
  }
  if ((long long)qs.points.size() != (q + 1) * (q + 1))
    fail(Errc::construction_invalid, "hyperbolic quadric point count is off");
  qs.member = membership(s, qs.points);

  // full lines on the quadric, two through every point
  std::map<std::pair<int, int>, std::vector<int>> lines;
  for (size_t i = 0; i < qs.points.size(); ++i) {
    for (size_t j = i + 1; j < qs.points.size(); ++j) {
      auto l = s.line_through(qs.points[i], qs.points[j]);
      if (Space::line_class(l, qs.member) == (int)l.points.size())
        lines.emplace(l.key(), l.points);
    }
  }
  if ((long long)lines.size() != 2 * (q + 1))
    fail(Errc::construction_invalid, "ruling line count is off");
  std::vector<std::vector<int>> all;
  for (auto& [k, v] : lines) all.push_back(v);
  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
      if (std::binary_search(b.begin(), b.end(), x)) return false;
    return true;
  };
  for (auto& l : all) {
    if (&l == &all[0] || disjoint(l, all[0]))
      qs.rulings[0].push_back(l);
    else
      qs.rulings[1].push_back(l);
  }
  for (auto& ruling : qs.rulings) {
    if ((long long)ruling.size() != q + 1)
      fail(Errc::construction_invalid, "ruling does not have q+1 lines");
    Bitrow covered(s.num_points());
    for (auto& l : ruling)
      for (int p : l) {
        if (covered.test(p)) fail(Errc::construction_invalid, "ruling lines overlap");
        covered.set(p);
      }
    if (!(covered == qs.member))
      fail(Errc::construction_invalid, "ruling does not partition the quadric");
  }
  return qs;
}

QuadraticSet suzuki_tits(std::shared_ptr<const Space> sp) {
  const Space& s = *sp;
  const Field& f = s.field();
  long long q = s.q();
  if (f.characteristic() != 2 || f.degree() % 2 == 0 || f.degree() == 1)
    fail(Errc::unsupported_order, "Suzuki-Tits ovoid needs q = 2^h, h > 1 odd");
  long long sigma = 1LL << ((f.degree() + 1) / 2);  // sigma^2 = 2q

  QuadraticSet qs;
  qs.kind = QuadKind::suzuki_tits;
  qs.space = sp;
  qs.points.push_back(s.point_index({1, 0, 0, 0}));
  for (int x = 0; x < q; ++x) {
    for (int y = 0; y < q; ++y) {
      int lead = f.add(f.mul(x, y), f.add(f.pow(x, sigma + 2), f.pow(y, sigma)));
      qs.points.push_back(
          s.point_index({(uint16_t)lead, 1, (uint16_t)x, (uint16_t)y}));
    }
  }
  std::sort(qs.points.begin(), qs.points.end());
  if (std::adjacent_find(qs.points.begin(), qs.points.end()) != qs.points.end())
    fail(Errc::construction_invalid, "Suzuki-Tits parametrization repeats a point");
  validate_ovoid(s, qs.points, Errc::construction_invalid, "Suzuki-Tits ovoid");
  qs.member = membership(s, qs.points);
  return qs;
}

PlaneSection plane_section(const QuadraticSet& qs, int plane) {
  const Space& s = *qs.space;
  PlaneSection sec;
  for (int p : qs.points)
    if (s.incident(p, plane)) sec.points.push_back(p);
  long long q = s.q();
  size_t n = sec.points.size();
  if (n == 1) {
    sec.kind = SectionKind::tangent_point;
    return sec;
  }
  if (n < 1) {
    sec.kind = SectionKind::other;
    return sec;
  }
  // census: does the section contain a full line? any 3 collinear points?
  Bitrow m = membership(s, sec.points);
  bool has_full_line = false, has_triple = false;
  for (size_t i = 0; i < n && !has_full_line; ++i) {
    for (size_t j = i + 1; j < n && !has_full_line; ++j) {
      auto l = s.line_through(sec.points[i], sec.points[j]);
      int c = Space::line_class(l, m);
      if (c > 2) has_triple = true;
      if (c == (int)l.points.size()) has_full_line = true;
    }
  }
  if (has_full_line)
    sec.kind = SectionKind::line_pair_or_lines;
  else if (n == (size_t)(q + 1) && !has_triple)
    sec.kind = SectionKind::oval;
  else
    sec.kind = SectionKind::other;
  return sec;
}

int oval_nucleus(const Space& s, int plane, const std::vector<int>& oval) {
  if (s.q() % 2 == 1) return -1;
  Bitrow m = membership(s, oval);
  int found = -1;
  for (int cand : points_on_plane(s, plane)) {
    if (m.test(cand)) continue;
    bool all_tangent = true;
    for (int o : oval) {
      if (Space::line_class(s.line_through(cand, o), m) != 1) {
        all_tangent = false;
        break;
      }
    }
    if (all_tangent) {
      if (found >= 0) return -1;  // not unique: no nucleus
      found = cand;
    }
  }
  return found;
}

int vanishing_form_dim(const Space& s, const std::vector<int>& pts) {
  const Field& f = s.field();
  // monomials x_i x_j, i <= j: 10 columns
  std::vector<std::vector<int>> rows;
  for (int p : pts) {
    const Coords& x = s.point(p);
    std::vector<int> row;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) row.push_back(f.mul(x[i], x[j]));
    rows.push_back(std::move(row));
  }
  auto elim = gf_eliminate(f, std::move(rows), 10);
  return 10 - elim.rank;
}

std::vector<int> hyperoval_minus_point_oval(const Space& s) {
  const Field& f = s.field();
  long long q = s.q();
  if (q % 2 == 1) fail(Errc::wrong_parity, "hyperovals need even q");
  std::vector<int> conic;
  conic.push_back(s.point_index({1, 0, 0, 0}));
  for (int t = 0; t < q; ++t)
    conic.push_back(s.point_index({(uint16_t)f.mul(t, t), (uint16_t)t, 1, 0}));
  std::sort(conic.begin(), conic.end());
  int plane = s.plane_index({0, 0, 0, 1});
  int nuc = oval_nucleus(s, plane, conic);
  if (nuc < 0) fail(Errc::internal, "conic lost its nucleus");
  std::vector<int> oval(conic.begin() + 1, conic.end());  // drop smallest conic point
  oval.push_back(nuc);
  std::sort(oval.begin(), oval.end());
  return oval;
}

}  // namespace benz
