// PG(3,q): points and planes materialized up front, lines on demand.
//
// Homogeneous 4-vectors are normalized so the first nonzero coordinate
// is 1; points and planes are enumerated in lexicographic order on the
// normalized coordinates (element index order per coordinate), so index
// i means the same subspace in every run.  Downstream modules refer to
// points and planes by these integer indices.
#pragma once

#include <array>
#include <memory>
#include <vector>

#include "benz/bitrow.hpp"
#include "benz/gf.hpp"

namespace benz {

using Coords = std::array<uint16_t, 4>;

struct PGLine {
  std::vector<int> points;  // sorted indices, q+1 of them
  // canonical identity of the line
  std::pair<int, int> key() const { return {points[0], points[1]}; }
};

class Space {
 public:
  explicit Space(std::shared_ptr<const Field> field);

  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  long long q() const { return field_->order(); }

  int num_points() const { return (int)points_.size(); }
  int num_planes() const { return (int)planes_.size(); }
  const Coords& point(int i) const { return points_[i]; }
  const Coords& plane(int i) const { return planes_[i]; }

  Coords normalize(Coords v) const;
  int point_index(Coords v) const;  // accepts unnormalized input
  int plane_index(Coords v) const;

  bool incident(int point, int plane) const;

  // The q+1 points of the line through two distinct points.
  // Throws Errc::identical_points when p == r.
  PGLine line_through(int p, int r) const;

  std::vector<int> planes_through(const PGLine& l) const;

  // |l  ∩ S| for a point set S given as membership bits.
  static int line_class(const PGLine& l, const Bitrow& member);

 private:
  std::shared_ptr<const Field> field_;
  std::vector<Coords> points_, planes_;
  std::vector<int> lookup_;  // packed normalized coords -> index (same for both)
  long long pack(const Coords& v) const;
};

}  // namespace benz
