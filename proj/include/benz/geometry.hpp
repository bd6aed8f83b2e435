// Circle geometries: points, circles, parallel relations.
//
// A geometry of order q with r parallel relations has circles of size
// q+1, every circle meeting every parallel class exactly once.  Mobius
// r=0, Laguerre r=1, Minkowski r=2.  laguerre_plus is the even-order
// extension where each circle gains its nucleus point: circles have q+2
// points and pairwise intersections sizes 0 or 2; it is not itself a
// circle geometry and validate() reports which axioms survive.
#pragma once

#include <optional>
#include <string>

#include "benz/quadset.hpp"

namespace benz {

enum class GeoKind { mobius, laguerre, minkowski, laguerre_plus };

std::string kind_name(GeoKind k);

struct CircleGeometry {
  int q = 0;
  GeoKind kind = GeoKind::mobius;
  std::string model;  // which construction produced it

  std::vector<std::string> point_labels;
  std::vector<Coords> pg_coords;  // per point; empty for algebraic models

  std::vector<std::vector<int>> circles;  // each sorted ascending
  std::vector<Bitrow> circle_bits;        // circle -> points
  std::vector<Bitrow> point_bits;         // point -> circles through it

  // per relation: class id of each point / point lists per class
  std::vector<std::vector<int>> class_of;
  std::vector<std::vector<std::vector<int>>> classes;

  // even-q Laguerre: nucleus id per circle (ids 0..q-1), labels per id.
  // In laguerre_plus the nucleus with id i is the point n_points0 + i.
  std::vector<int> nucleus_map;
  std::vector<std::string> nucleus_labels;

  std::shared_ptr<const Field> field;

  int num_points() const { return (int)point_labels.size(); }
  int num_circles() const { return (int)circles.size(); }
  int r() const { return (int)classes.size(); }
  bool parallel(int a, int b) const {
    for (const auto& rel : class_of)
      if (rel[a] == rel[b]) return true;
    return false;
  }
};

// Points = non-singular points of the quadratic set, circles = oval plane
// sections, parallel classes from generators (cone) or rulings
// (hyperbolic).  Elliptic/Suzuki-Tits -> mobius, cone -> laguerre,
// hyperbolic -> minkowski.
CircleGeometry from_quadratic_set(const QuadraticSet& qs);

// Points (F_q ∪ {inf}) × F_q, circles = graphs of degree-<=2 polynomials
// with f(inf) = leading coefficient.  Even q: nucleus id = linear
// coefficient.
CircleGeometry laguerre_polynomial_model(std::shared_ptr<const Field> f);

// Points PG(1,q) × PG(1,q), circles = graphs of fractional-linear maps.
CircleGeometry minkowski_pgl_model(std::shared_ptr<const Field> f);

// Adjoin the q nucleus points to an even-order Laguerre plane.
// Throws Errc::wrong_parity for odd q.
CircleGeometry laguerre_plus(const CircleGeometry& g);

// Point bijection cone -> polynomial model via (s^2,s,1,a) -> (s,a),
// (1,0,0,a) -> (inf,a); verifies circles map onto circles and throws
// Errc::not_isomorphic otherwise.  Returns the point map.
std::vector<int> build_isomorphism(const CircleGeometry& cone_model,
                                   const CircleGeometry& poly_model);

struct AxiomReport {
  bool three_point_unique = true;  // unique circle through 3 pairwise non-parallel points
  bool tangency = true;            // unique tangent circle through P on c and Q off c
  bool transversality = true;      // each circle meets each parallel class once
  bool residues_affine = true;     // point residues are affine planes of order q
  bool pairwise_02 = true;         // laguerre_plus: circle intersections in {0,2}
  std::string witness;             // first failure found

  bool benz_plane() const {
    return three_point_unique && tangency && transversality && residues_affine;
  }
  // the properties laguerre_plus actually has
  bool plus_valid() const { return three_point_unique && transversality && pairwise_02; }
};

// Checks every axiom exhaustively and reports rather than throws.  For
// laguerre_plus, tangency and residues_affine genuinely fail (no two
// circles meet in one point; residues are not affine) and are reported
// as such; judge that kind by plus_valid().
AxiomReport validate(const CircleGeometry& g);

}  // namespace benz
