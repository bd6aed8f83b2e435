#include "benz/geometry.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "benz/errors.hpp"

namespace benz {

std::string kind_name(GeoKind k) {
  switch (k) {
    case GeoKind::mobius: return "mobius";
    case GeoKind::laguerre: return "laguerre";
    case GeoKind::minkowski: return "minkowski";
    case GeoKind::laguerre_plus: return "laguerre_plus";
  }
  return "?";
}

namespace {

std::string coords_label(const Coords& c) {
  std::ostringstream os;
  os << "(" << c[0] << ":" << c[1] << ":" << c[2] << ":" << c[3] << ")";
  return os.str();
}

// fill circle_bits / point_bits and derive classes from class_of
void finish(CircleGeometry& g) {
  int n = g.num_points(), m = g.num_circles();
  g.circle_bits.assign(m, Bitrow(n));
  g.point_bits.assign(n, Bitrow(m));
  for (int c = 0; c < m; ++c)
    for (int p : g.circles[c]) {
      g.circle_bits[c].set(p);
      g.point_bits[p].set(c);
    }
  g.classes.clear();
  for (const auto& rel : g.class_of) {
    int k = 0;
    for (int c : rel) k = std::max(k, c + 1);
    std::vector<std::vector<int>> cls(k);
    for (int p = 0; p < (int)rel.size(); ++p) cls[rel[p]].push_back(p);
    g.classes.push_back(std::move(cls));
  }
}

}  // namespace

CircleGeometry from_quadratic_set(const QuadraticSet& qs) {
  const Space& s = *qs.space;
  CircleGeometry g;
  g.q = (int)s.q();
  g.field = s.field_ptr();
  switch (qs.kind) {
    case QuadKind::elliptic:
      g.kind = GeoKind::mobius;
      g.model = "elliptic-quadric";
      break;
    case QuadKind::suzuki_tits:
      g.kind = GeoKind::mobius;
      g.model = "suzuki-tits";
      break;
    case QuadKind::cone:
      g.kind = GeoKind::laguerre;
      break;  // model named below once the base is inspected
    case QuadKind::hyperbolic:
      g.kind = GeoKind::minkowski;
      g.model = "hyperbolic-quadric";
      break;
  }

  // geometry points: the quadratic set without the cone vertex
  std::vector<int> pg_pts;
  for (int p : qs.points)
    if (p != qs.vertex) pg_pts.push_back(p);
  std::vector<int> to_id(s.num_points(), -1);
  for (int i = 0; i < (int)pg_pts.size(); ++i) to_id[pg_pts[i]] = i;
  for (int p : pg_pts) {
    g.pg_coords.push_back(s.point(p));
    g.point_labels.push_back(coords_label(s.point(p)));
  }

  if (qs.kind == QuadKind::cone) {
    const Field& f = s.field();
    std::vector<int> conic{s.point_index({1, 0, 0, 0})};
    for (int t = 0; t < g.q; ++t)
      conic.push_back(s.point_index({(uint16_t)f.mul(t, t), (uint16_t)t, 1, 0}));
    std::sort(conic.begin(), conic.end());
    g.model = (conic == qs.base_oval) ? "quadric-cone" : "oval-cone";
  }

  // Even-order cones: every oval section of the cone has its nucleus on
  // the nucleus line, so a section's nucleus id is the rank of that
  // intersection point among the non-vertex points of the line.
  std::vector<int> nuc_rank(s.num_points(), -1);
  std::vector<int> nuc_pts;
  if (qs.kind == QuadKind::cone && !qs.nucleus_line.empty()) {
    for (int p : qs.nucleus_line)
      if (p != qs.vertex) nuc_pts.push_back(p);
    for (int i = 0; i < (int)nuc_pts.size(); ++i) {
      nuc_rank[nuc_pts[i]] = i;
      g.nucleus_labels.push_back(coords_label(s.point(nuc_pts[i])));
    }
  }

  // circles: census of oval plane sections, in plane index order
  for (int pl = 0; pl < s.num_planes(); ++pl) {
    PlaneSection sec = plane_section(qs, pl);
    if (sec.kind != SectionKind::oval) continue;
    std::vector<int> circ;
    circ.reserve(sec.points.size());
    for (int p : sec.points) circ.push_back(to_id[p]);
    std::sort(circ.begin(), circ.end());
    g.circles.push_back(std::move(circ));
    if (!nuc_pts.empty()) {
      int nid = -1;
      for (int p : nuc_pts)
        if (s.incident(p, pl)) {
          nid = nuc_rank[p];
          break;
        }
      if (nid < 0) fail(Errc::internal, "oval section misses the nucleus line");
      g.nucleus_map.push_back(nid);
    }
  }

  if (qs.kind == QuadKind::cone) {
    // one parallel relation, classes are the generators through the vertex
    std::vector<int> rel(pg_pts.size(), -1);
    for (int i = 0; i < (int)qs.base_oval.size(); ++i) {
      PGLine gen = s.line_through(qs.vertex, qs.base_oval[i]);
      for (int p : gen.points)
        if (p != qs.vertex) rel[to_id[p]] = i;
    }
    for (int v : rel)
      if (v < 0) fail(Errc::internal, "generators do not cover the cone");
    g.class_of.push_back(std::move(rel));
  } else if (qs.kind == QuadKind::hyperbolic) {
    // two parallel relations, one per ruling
    for (int k = 0; k < 2; ++k) {
      std::vector<int> rel(pg_pts.size(), -1);
      for (int i = 0; i < (int)qs.rulings[k].size(); ++i)
        for (int p : qs.rulings[k][i]) rel[to_id[p]] = i;
      for (int v : rel)
        if (v < 0) fail(Errc::internal, "ruling does not cover the quadric");
      g.class_of.push_back(std::move(rel));
    }
  }

  finish(g);
  return g;
}

CircleGeometry laguerre_polynomial_model(std::shared_ptr<const Field> f) {
  CircleGeometry g;
  const int q = (int)f->order();
  g.q = q;
  g.kind = GeoKind::laguerre;
  g.model = "polynomial";
  g.field = f;

  // point (x, y) at index x*q + y, the slot x = q holding the far point
  // of each generator
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      g.point_labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  for (int y = 0; y < q; ++y) g.point_labels.push_back("(inf," + std::to_string(y) + ")");

  // circle (a,b,c) at index (a*q + b)*q + c: the graph of a x^2 + b x + c
  // extended by the value a at infinity
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::vector<int> circ;
        circ.reserve(q + 1);
        for (int x = 0; x < q; ++x) {
          int y = f->add(f->mul(a, f->mul(x, x)), f->add(f->mul(b, x), c));
          circ.push_back(x * q + y);
        }
        circ.push_back(q * q + a);
        std::sort(circ.begin(), circ.end());
        g.circles.push_back(std::move(circ));
        // two circles of even order meet exactly once iff they share the
        // linear coefficient, so b names the nucleus
        if (q % 2 == 0) g.nucleus_map.push_back(b);
      }

  std::vector<int> rel(g.point_labels.size());
  for (int x = 0; x <= q; ++x)
    for (int y = 0; y < q; ++y) rel[x * q + y] = x;
  g.class_of.push_back(std::move(rel));

  if (q % 2 == 0)
    for (int b = 0; b < q; ++b) g.nucleus_labels.push_back("N" + std::to_string(b));

  finish(g);
  return g;
}

CircleGeometry minkowski_pgl_model(std::shared_ptr<const Field> f) {
  CircleGeometry g;
  const int q = (int)f->order();
  g.q = q;
  g.kind = GeoKind::minkowski;
  g.model = "pgl";
  g.field = f;

  // point (u, v) at index u*(q+1) + v, slot q meaning the far point of
  // the projective line in either coordinate
  auto slot_name = [&](int u) { return u == q ? std::string("inf") : std::to_string(u); };
  for (int u = 0; u <= q; ++u)
    for (int v = 0; v <= q; ++v)
      g.point_labels.push_back("(" + slot_name(u) + "," + slot_name(v) + ")");

  // circles are graphs of invertible fractional linear maps, one matrix
  // per map by normalizing the first nonzero entry to 1
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        for (int d = 0; d < q; ++d) {
          int det = f->sub(f->mul(a, d), f->mul(b, c));
          if (det == 0) continue;
          int lead = a ? a : b ? b : c ? c : d;
          if (lead != 1) continue;
          std::vector<int> circ;
          circ.reserve(q + 1);
          for (int x = 0; x < q; ++x) {
            int den = f->add(f->mul(c, x), d);
            int v = den == 0 ? q : f->div(f->add(f->mul(a, x), b), den);
            circ.push_back(x * (q + 1) + v);
          }
          circ.push_back(q * (q + 1) + (c == 0 ? q : f->div(a, c)));
          std::sort(circ.begin(), circ.end());
          g.circles.push_back(std::move(circ));
        }

  for (int k = 0; k < 2; ++k) {
    std::vector<int> rel(g.point_labels.size());
    for (int u = 0; u <= q; ++u)
      for (int v = 0; v <= q; ++v) rel[u * (q + 1) + v] = k == 0 ? u : v;
    g.class_of.push_back(std::move(rel));
  }

  finish(g);
  return g;
}

CircleGeometry laguerre_plus(const CircleGeometry& g) {
  if (g.q % 2 != 0) fail(Errc::wrong_parity, "nucleus extension needs even order");
  if (g.kind != GeoKind::laguerre || (int)g.nucleus_map.size() != g.num_circles())
    fail(Errc::bad_arguments, "nucleus extension needs a Laguerre geometry with nuclei");

  CircleGeometry h;
  h.q = g.q;
  h.kind = GeoKind::laguerre_plus;
  h.model = g.model + "+nuclei";
  h.field = g.field;
  h.point_labels = g.point_labels;
  const int n0 = g.num_points();
  for (const auto& lab : g.nucleus_labels) h.point_labels.push_back(lab);

  h.circles = g.circles;
  for (int c = 0; c < g.num_circles(); ++c)
    h.circles[c].push_back(n0 + g.nucleus_map[c]);  // largest index, stays sorted

  // the q nuclei form one further parallel class
  std::vector<int> rel = g.class_of[0];
  int k = (int)g.classes[0].size();
  for (int i = 0; i < g.q; ++i) rel.push_back(k);
  h.class_of.push_back(std::move(rel));

  h.nucleus_map = g.nucleus_map;
  h.nucleus_labels = g.nucleus_labels;
  finish(h);
  return h;
}

std::vector<int> build_isomorphism(const CircleGeometry& cone_model,
                                   const CircleGeometry& poly_model) {
  if (cone_model.kind != GeoKind::laguerre || poly_model.kind != GeoKind::laguerre ||
      poly_model.model != "polynomial" || cone_model.pg_coords.empty() ||
      cone_model.q != poly_model.q)
    fail(Errc::bad_arguments, "need a cone model and a polynomial model of the same order");

  const Field& f = *cone_model.field;
  const int q = cone_model.q;

  // (s^2, s, 1, a) -> (s, a) and (1, 0, 0, a) -> (inf, a); ratios survive
  // the normalization of homogeneous coordinates
  std::vector<int> map(cone_model.num_points(), -1);
  std::vector<char> hit(poly_model.num_points(), 0);
  for (int i = 0; i < cone_model.num_points(); ++i) {
    const Coords& c = cone_model.pg_coords[i];
    int slot, y;
    if (c[2] != 0) {
      slot = f.div(c[1], c[2]);
      y = f.div(c[3], c[2]);
    } else if (c[0] != 0) {
      slot = q;
      y = f.div(c[3], c[0]);
    } else {
      fail(Errc::not_isomorphic,
           "point " + coords_label(c) + " has no image under the canonical map");
    }
    int j = slot * q + y;
    if (j < 0 || j >= poly_model.num_points() || hit[j])
      fail(Errc::not_isomorphic, "canonical map is not a bijection");
    hit[j] = 1;
    map[i] = j;
  }
  if (cone_model.num_points() != poly_model.num_points())
    fail(Errc::not_isomorphic, "point counts differ");

  std::set<std::vector<int>> target(poly_model.circles.begin(), poly_model.circles.end());
  for (const auto& circ : cone_model.circles) {
    std::vector<int> img;
    img.reserve(circ.size());
    for (int p : circ) img.push_back(map[p]);
    std::sort(img.begin(), img.end());
    if (!target.count(img))
      fail(Errc::not_isomorphic, "the canonical map sends a circle to a non-circle");
  }
  if (cone_model.num_circles() != poly_model.num_circles())
    fail(Errc::not_isomorphic, "circle counts differ");
  return map;
}

AxiomReport validate(const CircleGeometry& g) {
  AxiomReport rep;
  const int n = g.num_points(), m = g.num_circles(), q = g.q;

  auto note = [&](bool AxiomReport::* flag, const std::string& w) {
    rep.*flag = false;
    if (rep.witness.empty()) rep.witness = w;
  };

  // unique circle through three pairwise non-parallel points
  for (int a = 0; a < n && rep.three_point_unique; ++a)
    for (int b = a + 1; b < n && rep.three_point_unique; ++b) {
      if (g.parallel(a, b)) continue;
      Bitrow ab = g.point_bits[a] & g.point_bits[b];
      for (int c = b + 1; c < n; ++c) {
        if (g.parallel(a, c) || g.parallel(b, c)) continue;
        int k = ab.and_count(g.point_bits[c]);
        if (k != 1) {
          note(&AxiomReport::three_point_unique,
               "points " + std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(c) + " lie on " + std::to_string(k) + " common circles");
          break;
        }
      }
    }

  // unique circle through an outside point touching a circle at a given point
  for (int c = 0; c < m && rep.tangency; ++c)
    for (int p : g.circles[c]) {
      for (int x = 0; x < n; ++x) {
        if (x == p || g.circle_bits[c].test(x) || g.parallel(p, x)) continue;
        int cnt = 0;
        Bitrow px = g.point_bits[p] & g.point_bits[x];
        px.for_each([&](int d) {
          if (g.circle_bits[d].and_count(g.circle_bits[c]) == 1) ++cnt;
        });
        if (cnt != 1) {
          note(&AxiomReport::tangency,
               "found " + std::to_string(cnt) + " circles through points " +
                   std::to_string(p) + "," + std::to_string(x) + " tangent to circle " +
                   std::to_string(c));
          break;
        }
      }
      if (!rep.tangency) break;
    }

  // every circle meets every parallel class exactly once
  for (int r = 0; r < g.r() && rep.transversality; ++r) {
    const auto& rel = g.class_of[r];
    const int k = (int)g.classes[r].size();
    for (int c = 0; c < m; ++c) {
      if ((int)g.circles[c].size() != k) {
        note(&AxiomReport::transversality,
             "circle " + std::to_string(c) + " cannot meet all " + std::to_string(k) +
                 " classes of relation " + std::to_string(r));
        break;
      }
      std::vector<char> seen(k, 0);
      for (int p : g.circles[c])
        if (seen[rel[p]]++) {
          note(&AxiomReport::transversality,
               "circle " + std::to_string(c) + " meets class " + std::to_string(rel[p]) +
                   " of relation " + std::to_string(r) + " twice");
          break;
        }
      if (!rep.transversality) break;
    }
  }

  // the residue at each point is an affine plane of order q: q^2 points,
  // q^2+q lines of q points, each point pair on exactly one line
  for (int P = 0; P < n && rep.residues_affine; ++P) {
    std::vector<int> rp;
    std::vector<int> ridx(n, -1);
    for (int x = 0; x < n; ++x) {
      if (x == P || g.parallel(P, x)) continue;
      ridx[x] = (int)rp.size();
      rp.push_back(x);
    }
    if ((int)rp.size() != q * q) {
      note(&AxiomReport::residues_affine,
           "residue at point " + std::to_string(P) + " has " + std::to_string(rp.size()) +
               " points, not q^2");
      break;
    }
    std::vector<Bitrow> lines;
    g.point_bits[P].for_each([&](int d) {
      Bitrow l((int)rp.size());
      for (int x : g.circles[d])
        if (ridx[x] >= 0) l.set(ridx[x]);
      lines.push_back(std::move(l));
    });
    for (int r = 0; r < g.r(); ++r)
      for (int k = 0; k < (int)g.classes[r].size(); ++k) {
        if (k == g.class_of[r][P]) continue;
        Bitrow l((int)rp.size());
        for (int x : g.classes[r][k])
          if (ridx[x] >= 0) l.set(ridx[x]);
        lines.push_back(std::move(l));
      }
    bool ok = (int)lines.size() == q * q + q;
    for (const auto& l : lines)
      if (l.count() != q) ok = false;
    if (ok) {
      std::vector<Bitrow> on(rp.size(), Bitrow((int)lines.size()));
      for (int li = 0; li < (int)lines.size(); ++li)
        lines[li].for_each([&](int u) { on[u].set(li); });
      for (int u = 0; u < (int)rp.size() && ok; ++u)
        for (int v = u + 1; v < (int)rp.size(); ++v)
          if (on[u].and_count(on[v]) != 1) {
            ok = false;
            break;
          }
    }
    if (!ok) {
      note(&AxiomReport::residues_affine,
           "residue at point " + std::to_string(P) + " is not an affine plane of order q");
      break;
    }
  }

  // extended circles of even order meet in 0 or 2 points
  if (g.kind == GeoKind::laguerre_plus)
    for (int c1 = 0; c1 < m && rep.pairwise_02; ++c1)
      for (int c2 = c1 + 1; c2 < m; ++c2) {
        int k = g.circle_bits[c1].and_count(g.circle_bits[c2]);
        if (k != 0 && k != 2) {
          note(&AxiomReport::pairwise_02,
               "circles " + std::to_string(c1) + "," + std::to_string(c2) + " meet in " +
                   std::to_string(k) + " points");
          break;
        }
      }

  return rep;
}

}  // namespace benz
