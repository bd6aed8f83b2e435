// Quadratic sets in PG(3,q): the point sets whose plane sections produce
// circle geometries.  Every constructor validates its combinatorial
// axioms after building the point set; nothing is trusted from the
// defining equations alone.  Plane sections are classified by census
// (size plus collinearity pattern), never by evaluating forms.
#pragma once

#include "benz/pg.hpp"

namespace benz {

enum class QuadKind { elliptic, suzuki_tits, cone, hyperbolic };

struct QuadraticSet {
  QuadKind kind;
  std::shared_ptr<const Space> space;
  std::vector<int> points;  // sorted, includes the vertex for cones
  Bitrow member;            // over space points
  int vertex = -1;          // cones only
  // cones: base oval and its plane
  std::vector<int> base_oval;
  int base_plane = -1;
  // even-q cones: the nucleus line through the vertex, sorted points
  std::vector<int> nucleus_line;
  // hyperbolic: the two rulings, each a list of lines (sorted point lists)
  std::array<std::vector<std::vector<int>>, 2> rulings;
};

enum class SectionKind { tangent_point, oval, line_pair_or_lines, other };

struct PlaneSection {
  SectionKind kind;
  std::vector<int> points;  // sorted
};

// Solution set of g(X0,X1) + X2X3 = 0 with g the canonical irreducible
// binary quadratic: X0^2 - n X1^2 (n the smallest nonsquare) for odd q,
// X0^2 + X0X1 + c X1^2 (c the smallest trace-1 element) for even q.
QuadraticSet elliptic_quadric(std::shared_ptr<const Space> s);

// X0X2 = X1^2: vertex (0,0,0,1), base conic in the plane X3 = 0.
QuadraticSet quadric_cone(std::shared_ptr<const Space> s);

// Cone over an arbitrary oval; the vertex is the smallest-index point
// off the oval's plane.  Throws Errc::not_an_oval when the base is not
// q+1 coplanar points with no 3 collinear.
QuadraticSet oval_cone(std::shared_ptr<const Space> s, const std::vector<int>& base);

// X0X1 + X2X3 = 0.
QuadraticSet hyperbolic_quadric(std::shared_ptr<const Space> s);

// {(xy + x^(s+2) + y^s, 1, x, y)} with s = 2^(e+1), q = 2^(2e+1), plus
// (1,0,0,0).  Throws Errc::unsupported_order unless q = 2^h, h > 1 odd;
// the ovoid axioms are then checked and Errc::construction_invalid is
// raised on failure, so the coordinates are validated rather than trusted.
QuadraticSet suzuki_tits(std::shared_ptr<const Space> s);

PlaneSection plane_section(const QuadraticSet& qs, int plane);

// Census nucleus of an oval section in its plane for even q: the unique
// point off the section that lies on all q+1 tangents.  Returns -1 for
// odd q or when no such point exists.
int oval_nucleus(const Space& s, int plane, const std::vector<int>& oval);

// Dimension of the space of quadratic forms in 4 variables vanishing on
// every given point (rank computation over GF(q)).  Nonzero for quadric
// point sets, zero for the Suzuki-Tits ovoid.
int vanishing_form_dim(const Space& s, const std::vector<int>& pts);

// q even: the base oval (conic ∪ nucleus) \ {smallest conic point} in the
// plane X3 = 0.  As a point set this differs from the canonical conic.
std::vector<int> hyperoval_minus_point_oval(const Space& s);

// no 3 of the given points collinear
bool no_three_collinear(const Space& s, const std::vector<int>& pts);

}  // namespace benz
