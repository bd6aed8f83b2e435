#include "benz/pg.hpp"

#include <algorithm>

namespace benz {

Space::Space(std::shared_ptr<const Field> field) : field_(std::move(field)) {
  long long q = field_->order();
  if (q > 64) fail(Errc::unsupported_order, "PG(3,q) materialization capped at q = 64");

  // canonical representatives in lexicographic order on (x0,x1,x2,x3)
  points_.reserve(q * q * q + q * q + q + 1);
  points_.push_back({0, 0, 0, 1});
  for (int c = 0; c < q; ++c) points_.push_back({0, 0, 1, (uint16_t)c});
  for (int b = 0; b < q; ++b)
    for (int c = 0; c < q; ++c) points_.push_back({0, 1, (uint16_t)b, (uint16_t)c});
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c)
        points_.push_back({1, (uint16_t)a, (uint16_t)b, (uint16_t)c});
  std::sort(points_.begin(), points_.end());
  planes_ = points_;  // dual coordinates, same canonical list

  lookup_.assign(q * q * q * q, -1);
  for (int i = 0; i < (int)points_.size(); ++i) lookup_[pack(points_[i])] = i;
}

long long Space::pack(const Coords& v) const {
  long long q = field_->order();
  return ((v[0] * q + v[1]) * q + v[2]) * q + v[3];
}

Coords Space::normalize(Coords v) const {
  for (int i = 0; i < 4; ++i) {
    if (v[i] != 0) {
      if (v[i] != 1) {
        int s = field_->inv(v[i]);
        for (int j = i; j < 4; ++j) v[j] = (uint16_t)field_->mul(v[j], s);
      }
      return v;
    }
  }
  fail(Errc::bad_arguments, "zero vector has no projective class");
}

int Space::point_index(Coords v) const {
  int i = lookup_[pack(normalize(v))];
  if (i < 0) fail(Errc::internal, "normalized coords missing from lookup");
  return i;
}

int Space::plane_index(Coords v) const { return point_index(v); }

bool Space::incident(int point, int plane) const {
  const Coords& x = points_[point];
  const Coords& a = planes_[plane];
  int acc = 0;
  for (int i = 0; i < 4; ++i) acc = field_->add(acc, field_->mul(x[i], a[i]));
  return acc == 0;
}

PGLine Space::line_through(int p, int r) const {
  if (p == r) fail(Errc::identical_points, "line through a repeated point");
  const Coords& P = points_[p];
  const Coords& R = points_[r];
  PGLine l;
  l.points.reserve(field_->order() + 1);
  l.points.push_back(r);  // (0,1) combination
  for (int t = 0; t < field_->order(); ++t) {
    Coords v;
    for (int i = 0; i < 4; ++i) v[i] = (uint16_t)field_->add(P[i], field_->mul(t, R[i]));
    l.points.push_back(point_index(v));
  }
  std::sort(l.points.begin(), l.points.end());
  return l;
}

std::vector<int> Space::planes_through(const PGLine& l) const {
  std::vector<int> out;
  for (int pl = 0; pl < num_planes(); ++pl)
    if (incident(l.points[0], pl) && incident(l.points[1], pl)) out.push_back(pl);
  return out;
}

int Space::line_class(const PGLine& l, const Bitrow& member) {
  int c = 0;
  for (int p : l.points) c += member.test(p);
  return c;
}

}  // namespace benz
