#include "benz/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "benz/errors.hpp"
#include "benz/scheme.hpp"

namespace benz {

namespace {

using Clock = std::chrono::steady_clock;

// State shared between worker threads.  best is a monotone lower bound;
// stop flips once (budget exhaustion) and is never cleared.
struct Shared {
  const BitGraph& g;
  long long node_limit;
  Clock::time_point deadline;
  int target = 0;  // 0 = maximise, otherwise collect cliques of this size
  std::atomic<long long> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<int> best{0};
  std::mutex mu;
  std::vector<int> best_set;  // fallback witness for budget-bounded runs

  Shared(const BitGraph& g, const SearchBudget& b)
      : g(g),
        node_limit(b.node_limit),
        deadline(Clock::now() + std::chrono::milliseconds(b.wall_ms)) {}

  void offer(const std::vector<int>& r) {
    int sz = (int)r.size();
    int cur = best.load(std::memory_order_relaxed);
    while (cur < sz) {
      if (best.compare_exchange_weak(cur, sz)) {
        std::lock_guard<std::mutex> lock(mu);
        if (sz > (int)best_set.size()) {
          best_set = r;
          std::sort(best_set.begin(), best_set.end());
        }
        return;
      }
    }
  }
};

struct Worker {
  Shared& s;
  std::vector<int> R;
  long long local_nodes = 0;
  std::vector<std::vector<int>>* sink = nullptr;

  explicit Worker(Shared& s) : s(s) {}

  ~Worker() { s.nodes.fetch_add(local_nodes & 63, std::memory_order_relaxed); }

  bool tick() {
    if ((++local_nodes & 63) == 0) {
      long long total = s.nodes.fetch_add(64, std::memory_order_relaxed) + 64;
      if (total > s.node_limit || Clock::now() > s.deadline)
        s.stop.store(true, std::memory_order_relaxed);
    }
    return !s.stop.load(std::memory_order_relaxed);
  }

  // Greedy colouring of the candidate set.  order holds the vertices
  // grouped class by class, bound[i] the 1-based colour of order[i]; a
  // clique inside P uses at most bound.back() vertices.
  void colour(const Bitrow& P, std::vector<int>& order, std::vector<int>& bound) {
    order.clear();
    bound.clear();
    Bitrow un = P;
    int c = 0;
    while (un.any()) {
      ++c;
      Bitrow cand = un;
      for (int v = cand.first(); v >= 0; v = cand.first()) {
        cand.reset(v);
        un.reset(v);
        cand.and_not(s.g.adj[v]);
        order.push_back(v);
        bound.push_back(c);
      }
    }
  }

  void expand_max(Bitrow P) {
    if (!tick()) return;
    if (P.none()) {
      s.offer(R);
      return;
    }
    std::vector<int> order, bound;
    colour(P, order, bound);
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      if ((int)R.size() + bound[i] <= s.best.load(std::memory_order_relaxed)) return;
      int v = order[i];
      R.push_back(v);
      expand_max(P & s.g.adj[v]);
      R.pop_back();
      if (s.stop.load(std::memory_order_relaxed)) return;
      P.reset(v);
    }
  }

  void expand_exact(Bitrow P) {
    if ((int)R.size() == s.target) {
      std::vector<int> fam = R;
      std::sort(fam.begin(), fam.end());
      sink->push_back(std::move(fam));
      return;
    }
    if (!tick()) return;
    std::vector<int> order, bound;
    colour(P, order, bound);
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      if ((int)R.size() + bound[i] < s.target) return;
      int v = order[i];
      R.push_back(v);
      expand_exact(P & s.g.adj[v]);
      R.pop_back();
      if (s.stop.load(std::memory_order_relaxed)) return;
      P.reset(v);
    }
  }

  // Depth-first with ascending branching: the first clique of the target
  // size found is the lexicographically smallest one.
  bool lex_first(Bitrow P, std::vector<int>& out) {
    if ((int)R.size() == s.target) {
      out = R;
      return true;
    }
    if (!tick()) return false;
    std::vector<int> order, bound;
    colour(P, order, bound);
    if ((int)R.size() + (bound.empty() ? 0 : bound.back()) < s.target) return false;
    for (int v = P.first(); v >= 0; v = P.first()) {
      R.push_back(v);
      if (lex_first(P & s.g.adj[v], out)) return true;
      R.pop_back();
      P.reset(v);
      if (s.stop.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }
};

// Explore {R0, P0}.  In exact mode (s.target > 0) returns every clique
// of the target size; in max mode only s.best and s.best_set move.  With
// several threads the top level is split along the root colour order
// into independent subproblems.
std::vector<std::vector<int>> run(Shared& s, const std::vector<int>& R0, const Bitrow& P0,
                                  int threads) {
  bool exact = s.target > 0;
  std::vector<std::vector<int>> found;
  if (threads <= 1) {
    Worker w(s);
    w.R = R0;
    if (exact) {
      w.sink = &found;
      w.expand_exact(P0);
    } else {
      w.expand_max(P0);
    }
    return found;
  }

  struct RootJob {
    int v;
    Bitrow P;
    int bound;
  };
  std::vector<RootJob> jobs;
  {
    Worker probe(s);
    std::vector<int> order, bound;
    probe.colour(P0, order, bound);
    Bitrow P = P0;
    for (int i = (int)order.size() - 1; i >= 0; --i) {
      jobs.push_back({order[i], P & s.g.adj[order[i]], bound[i]});
      P.reset(order[i]);
    }
  }
  std::vector<std::vector<std::vector<int>>> slots(jobs.size());
  std::atomic<int> next{0};
  auto body = [&]() {
    Worker w(s);
    while (!s.stop.load(std::memory_order_relaxed)) {
      int j = next.fetch_add(1);
      if (j >= (int)jobs.size()) break;
      if (exact) {
        if ((int)R0.size() + jobs[j].bound < s.target) continue;
      } else {
        if ((int)R0.size() + jobs[j].bound <= s.best.load(std::memory_order_relaxed)) continue;
      }
      w.R = R0;
      w.R.push_back(jobs[j].v);
      if (exact) {
        w.sink = &slots[j];
        w.expand_exact(jobs[j].P);
      } else {
        w.expand_max(jobs[j].P);
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  for (auto& slot : slots)
    for (auto& fam : slot) found.push_back(std::move(fam));
  return found;
}

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

Bitrow full_row(int n) {
  Bitrow r(n);
  for (int v = 0; v < n; ++v) r.set(v);
  return r;
}

}  // namespace

BitGraph BitGraph::complement() const {
  BitGraph c(n);
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (!adj[v].test(u)) c.add_edge(v, u);
  return c;
}

BitGraph agreement_graph(const CircleGeometry& g, int t) {
  if (t < 1) fail(Errc::bad_arguments, "agreement threshold must be at least 1");
  int n = g.num_circles();
  BitGraph b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.circle_bits[i].and_count(g.circle_bits[j]) >= t) b.add_edge(i, j);
  return b;
}

std::string label_name(const Classification& c) {
  switch (c.label) {
    case FamilyLabel::pencil: return "pencil(" + std::to_string(c.id) + ")";
    case FamilyLabel::nucleus: return "nucleus(" + std::to_string(c.id) + ")";
    default: return "other";
  }
}

Classification classify_family(const CircleGeometry& g, const std::vector<int>& circles) {
  if (circles.empty()) return {};
  Bitrow common = g.circle_bits[circles[0]];
  for (size_t i = 1; i < circles.size(); ++i) common &= g.circle_bits[circles[i]];
  int m = (int)circles.size();
  Classification cls;
  common.for_each([&](int p) {
    if (cls.label == FamilyLabel::other && g.point_bits[p].count() == m)
      cls = {FamilyLabel::pencil, p};
  });
  if (cls.label == FamilyLabel::pencil) return cls;
  if (g.kind == GeoKind::laguerre && g.q % 2 == 0 && !g.nucleus_map.empty()) {
    int nucleus = g.nucleus_map[circles[0]];
    bool same = true;
    for (int c : circles) same = same && g.nucleus_map[c] == nucleus;
    if (same && (long long)m == (long long)g.q * g.q) return {FamilyLabel::nucleus, nucleus};
  }
  return {};
}

FamilyWitness max_clique(const BitGraph& g, const SearchBudget& b, bool rooted) {
  auto t0 = Clock::now();
  FamilyWitness w;
  if (g.n == 0) {
    w.optimal = true;
    return w;
  }
  Shared s(g, b);
  s.best.store(std::max(0, b.initial_lower));
  std::vector<int> R0;
  Bitrow P0(g.n);
  if (rooted) {
    R0 = {0};
    P0 = g.adj[0];
  } else {
    P0 = full_row(g.n);
  }
  run(s, R0, P0, b.threads);
  bool stopped = s.stop.load();
  w.size = s.best.load();
  w.optimal = !stopped;
  w.nodes = s.nodes.load();
  if (w.size > 0) {
    if (!stopped) {
      // deterministic witness: the lexicographically first optimum
      Shared s2(g, b);
      s2.target = w.size;
      Worker lw(s2);
      lw.R = R0;
      std::vector<int> out;
      Bitrow P2 = P0;
      if (lw.lex_first(P2, out))
        w.circles = out;
      else
        w.circles = s.best_set;
      w.nodes += s2.nodes.load();
    } else {
      w.circles = s.best_set;
    }
  }
  w.elapsed_ms = ms_since(t0);
  return w;
}

EnumerationResult cliques_of_size(const BitGraph& g, int size, const SearchBudget& b) {
  if (size < 1) fail(Errc::bad_arguments, "clique size must be positive");
  auto t0 = Clock::now();
  EnumerationResult res;
  Shared s(g, b);
  s.target = size;
  auto found = run(s, {}, full_row(g.n), b.threads);
  std::sort(found.begin(), found.end());
  res.complete = !s.stop.load();
  res.nodes = s.nodes.load();
  res.elapsed_ms = ms_since(t0);
  for (auto& fam : found) {
    FamilyWitness w;
    w.size = (int)fam.size();
    w.circles = std::move(fam);
    w.optimal = res.complete;
    res.families.push_back(std::move(w));
  }
  return res;
}

FamilyWitness max_t_intersecting(const CircleGeometry& g, int t, const SearchBudget& b) {
  if (t != 1 && t != 2) fail(Errc::bad_arguments, "t must be 1 or 2");
  auto graph = agreement_graph(g, t);
  // pencils are guaranteed cliques and seed the incumbent
  std::vector<int> seed;
  if (t == 1) {
    for (int p = 0; p < g.num_points(); ++p)
      if (g.point_bits[p].count() > (int)seed.size()) seed = g.point_bits[p].to_vector();
  } else {
    for (int p = 0; p < g.num_points(); ++p)
      for (int r = p + 1; r < g.num_points(); ++r) {
        Bitrow both = g.point_bits[p] & g.point_bits[r];
        if (both.count() > (int)seed.size()) seed = both.to_vector();
      }
  }
  SearchBudget b2 = b;
  b2.initial_lower = std::max(b.initial_lower, (int)seed.size());
  // every geometry built here is circle transitive, so root the search
  FamilyWitness w = max_clique(graph, b2, true);
  if (w.circles.empty() && w.size == (int)seed.size()) w.circles = seed;
  w.cls = classify_family(g, w.circles);
  return w;
}

ProvenMax proven_max_intersecting(const CircleGeometry& g, const SearchBudget& b) {
  int pencil = 0;
  for (int p = 0; p < g.num_points(); ++p)
    pencil = std::max(pencil, g.point_bits[p].count());
  // the ratio bound certifies the maximum whenever a scheme is present
  // and a pencil meets the bound exactly
  auto via_scheme = [&](const CircleGeometry& host, const char* how) -> ProvenMax {
    auto r = relations(host);
    auto s = check_scheme(r);
    if (!s.is_scheme) return {};
    for (long long v : r.valencies)
      if (v == 0) return {};
    auto e = eigendata(r, s);
    std::vector<Rational> w(r.d + 1, Rational(0));
    w.back() = Rational(1);  // disjointness is the last relation class
    if (hoffman_bound(e, w) == Rational(pencil)) return {pencil, true, how};
    return {};
  };
  try {
    auto direct = via_scheme(g, "ratio bound met by a pencil");
    if (direct.certified) return direct;
  } catch (const Error&) {
  }
  if (g.kind == GeoKind::laguerre && g.q % 2 == 0) {
    // circles are disjoint exactly when their nucleus extensions are, so
    // the extension's ratio bound applies to the original plane
    try {
      auto lifted = via_scheme(laguerre_plus(g), "ratio bound on the nucleus extension");
      if (lifted.certified) return lifted;
    } catch (const Error&) {
    }
  }
  auto w = max_t_intersecting(g, 1, b);
  if (w.optimal) return {w.size, true, "exhaustive search"};
  return {w.size, false, "search lower bound, budget exhausted"};
}

EnumerationResult enumerate_maximum_intersecting(const CircleGeometry& g, int known_size,
                                                 const SearchBudget& b) {
  auto res = cliques_of_size(agreement_graph(g, 1), known_size, b);
  for (auto& f : res.families) f.cls = classify_family(g, f.circles);
  return res;
}

}  // namespace benz
