#include "benz/polyfam.hpp"

#include <algorithm>

#include "benz/errors.hpp"

namespace benz {

namespace {

int horner(const Field& f, long long idx, int k, long long q, int x) {
  // digits of idx, leading coefficient at the top
  int v = 0;
  long long top = 1;
  for (int j = 0; j < k; ++j) top *= q;
  for (long long w = top; w >= 1; w /= q) {
    int c = (int)((idx / w) % q);
    v = f.add(f.mul(v, x), c);
  }
  return v;
}

// index of f + g, coefficients added digit by digit
int add_idx(const Field& f, int a, int b, int k, long long q) {
  long long out = 0, w = 1;
  for (int j = 0; j <= k; ++j) {
    out += (long long)f.add((int)((a / w) % q), (int)((b / w) % q)) * w;
    w *= q;
  }
  return (int)out;
}

std::vector<int> members_with_values(const PolySpace& s, const std::vector<std::pair<int, int>>& fix) {
  std::vector<int> out;
  for (int f = 0; f < s.n; ++f) {
    bool ok = true;
    for (auto [x, y] : fix)
      if (s.eval(f, x) != y) {
        ok = false;
        break;
      }
    if (ok) out.push_back(f);
  }
  return out;
}

FamilyWitness clique_with_seed(const BitGraph& g, std::vector<int> seed, const SearchBudget& b) {
  SearchBudget b2 = b;
  b2.initial_lower = std::max(b.initial_lower, (int)seed.size());
  auto w = max_clique(g, b2, true);
  if (w.circles.empty() && w.size == (int)seed.size()) w.circles = std::move(seed);
  return w;
}

void check_laguerre_args(const Field& f, int y) {
  if (f.order() % 2 == 0) fail(Errc::bad_arguments, "the root counting lemmas need odd order");
  if (y <= 0 || y >= f.order()) fail(Errc::bad_arguments, "prescribed value must be nonzero");
}

}  // namespace

PolySpace PolySpace::create(std::shared_ptr<const Field> f, int k) {
  if (!f) fail(Errc::bad_arguments, "polynomial space needs a field");
  if (k < 1) fail(Errc::bad_arguments, "degree bound must be at least 1");
  const long long q = f->order();
  long long n = 1;
  for (int j = 0; j <= k; ++j) {
    n *= q;
    if (n > 20000000) fail(Errc::bad_arguments, "polynomial space too large");
  }
  PolySpace s;
  s.field = std::move(f);
  s.k = k;
  s.n = (int)n;
  if (n * q <= 10000000) {
    s.values.assign((size_t)s.n, std::vector<int>((size_t)q));
    for (int idx = 0; idx < s.n; ++idx)
      for (int x = 0; x < q; ++x) s.values[idx][x] = horner(*s.field, idx, k, q, x);
  }
  return s;
}

int PolySpace::coeff(int f, int j) const {
  long long w = 1;
  for (int i = 0; i < j; ++i) w *= q();
  return (int)((f / w) % q());
}

int PolySpace::eval(int f, int x) const {
  if (!values.empty()) return values[f][x];
  return horner(*field, f, k, q(), x);
}

int agreement(const PolySpace& s, int f, int g) {
  int c = 0;
  for (int x = 0; x < s.q(); ++x) c += s.eval(f, x) == s.eval(g, x);
  return c;
}

BitGraph poly_agreement_graph(const PolySpace& s, int t) {
  if (t < 1) fail(Errc::bad_arguments, "agreement threshold must be at least 1");
  // f and g agree at x exactly when f - g vanishes there, so the graph
  // is a Cayley graph for the differences with enough zeros
  std::vector<int> conn;
  for (int d = 1; d < s.n; ++d) {
    int zeros = 0;
    for (int x = 0; x < s.q(); ++x) zeros += s.eval(d, x) == 0;
    if (zeros >= t) conn.push_back(d);
  }
  BitGraph g(s.n);
  for (int f = 0; f < s.n; ++f)
    for (int d : conn) {
      int h = add_idx(*s.field, f, d, s.k, s.q());
      if (h > f) g.add_edge(f, h);
    }
  return g;
}

PolyMax max_t_intersecting_polys(const PolySpace& s, int t, const SearchBudget& b) {
  if (t < 1 || t > s.k || s.k >= s.q())
    fail(Errc::bad_arguments, "need 1 <= t <= k < q");

  PolyMax out;

  // vanishing at the first t elements
  std::vector<std::pair<int, int>> fix;
  for (int x = 0; x < t; ++x) fix.push_back({x, 0});
  auto graph = poly_agreement_graph(s, t);
  out.t_intersecting = clique_with_seed(graph, members_with_values(s, fix), b);

  // degree below t, the indices under q^t
  long long qt = 1;
  for (int j = 0; j < t; ++j) qt *= s.q();
  std::vector<int> low((size_t)qt);
  for (long long f = 0; f < qt; ++f) low[(size_t)f] = (int)f;
  out.non_t_intersecting = clique_with_seed(graph.complement(), std::move(low), b);

  return out;
}

PolyEkr strong_ekr_polys(const PolySpace& s, const SearchBudget& b) {
  if (s.k < 2 || s.k >= s.q()) fail(Errc::bad_arguments, "need 2 <= k < q");

  long long size = 1;
  for (int j = 0; j < s.k; ++j) size *= s.q();

  PolyEkr out;
  out.enumeration = cliques_of_size(poly_agreement_graph(s, 1), (int)size, b);
  out.all_stabilizers = out.enumeration.complete;
  for (const auto& fam : out.enumeration.families) {
    std::pair<int, int> label{-1, -1};
    for (int x = 0; x < s.q() && label.first < 0; ++x) {
      int y = s.eval(fam.circles.front(), x);
      bool all = true;
      for (int f : fam.circles)
        if (s.eval(f, x) != y) {
          all = false;
          break;
        }
      // a family of full size fits inside at most one value stabilizer
      if (all) label = {x, y};
    }
    if (label.first < 0) out.all_stabilizers = false;
    out.labels.push_back(label);
  }
  return out;
}

MiCounts mi_counts(const std::shared_ptr<const Field>& f, int x1, int y1, int x2, int y2) {
  const int q = (int)f->order();
  check_laguerre_args(*f, y1);
  check_laguerre_args(*f, y2);
  if (x1 == x2 || x1 < 0 || x2 < 0 || x1 > q || x2 > q)
    fail(Errc::bad_arguments, "need two distinct places in the extended line");

  auto value = [&](int a, int b, int c, int x) {
    if (x == q) return a;
    return f->add(f->mul(a, f->mul(x, x)), f->add(f->mul(b, x), c));
  };

  MiCounts m;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (value(a, b, c, x1) != y1 || value(a, b, c, x2) != y2) continue;
        int roots = a == 0;  // the far value is the leading coefficient
        for (int x = 0; x < q; ++x) roots += value(a, b, c, x) == 0;
        if (roots == 0)
          ++m.m0;
        else if (roots == 1)
          ++m.m1;
        else
          ++m.m2;
      }
  return m;
}

long long rootless_count(const std::shared_ptr<const Field>& f, int x, int y) {
  const int q = (int)f->order();
  check_laguerre_args(*f, y);
  if (x < 0 || x > q) fail(Errc::bad_arguments, "place out of range");

  long long count = 0;
  // a vanishing leading coefficient is a root at the far place, so only
  // genuine quadratics qualify
  for (int a = 1; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        int at = x == q ? a : f->add(f->mul(a, f->mul(x, x)), f->add(f->mul(b, x), c));
        if (at != y) continue;
        bool rootless = true;
        for (int t = 0; t < q && rootless; ++t)
          rootless = f->add(f->mul(a, f->mul(t, t)), f->add(f->mul(b, t), c)) != 0;
        count += rootless;
      }
  return count;
}

int square_separator(const std::shared_ptr<const Field>& f, int a, int b) {
  const int q = (int)f->order();
  if (q % 2 == 0) fail(Errc::bad_arguments, "quadratic types need odd order");
  if (a == b || a < 0 || b < 0 || a >= q || b >= q)
    fail(Errc::bad_arguments, "need two distinct field elements");

  for (int c = 0; c < q; ++c) {
    if (c == a || c == b) continue;
    QChar ca = f->quadratic_character(f->sub(c, a));
    QChar cb = f->quadratic_character(f->sub(c, b));
    if (ca == cb) continue;
    // confirm through the power criterion, independent of the log tables
    bool sa = f->pow(f->sub(c, a), (q - 1) / 2) == 1;
    bool sb = f->pow(f->sub(c, b), (q - 1) / 2) == 1;
    if (sa == sb) fail(Errc::internal, "quadratic type disagreement");
    return c;
  }
  fail(Errc::internal, "no separating element found");
}

}  // namespace benz
