#include "benz/serialize.hpp"

#include <cstdint>

namespace benz {

std::string rational_str(const Rational& r) { return r.str(); }

std::string geometry_hash(const CircleGeometry& g) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix((uint64_t)g.q);
  mix((uint64_t)g.kind);
  mix((uint64_t)g.num_points());
  for (const auto& c : g.circles) {
    mix((uint64_t)c.size());
    for (int p : c) mix((uint64_t)p);
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return buf;
}

Json geometry_json(const CircleGeometry& g) {
  Json j;
  j["order"] = g.q;
  j["kind"] = kind_name(g.kind);
  j["model"] = g.model;
  j["hash"] = geometry_hash(g);
  Json pts = Json::array();
  for (int p = 0; p < g.num_points(); ++p) pts.push_back({{"id", p}, {"label", g.point_labels[p]}});
  j["points"] = std::move(pts);
  j["circles"] = g.circles;
  j["parallel"] = g.classes;
  if (!g.nucleus_map.empty()) j["nucleus_map"] = g.nucleus_map;
  return j;
}

Json scheme_json(const RelationSet& r, const SchemeCheck& s) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["valencies"] = r.valencies;
  j["is_scheme"] = s.is_scheme;
  if (s.is_scheme) {
    Json tensor = Json::array();
    for (int k = 0; k <= s.d; ++k) {
      Json mk = Json::array();
      for (int i = 0; i <= s.d; ++i) {
        Json row = Json::array();
        for (int jj = 0; jj <= s.d; ++jj) row.push_back(s.pk(k, i, jj));
        mk.push_back(std::move(row));
      }
      tensor.push_back(std::move(mk));
    }
    j["p_tensor"] = std::move(tensor);
  } else {
    j["witness"] = s.witness;
  }
  return j;
}

Json eigen_json(const EigenData& e) {
  Json j;
  j["n"] = e.n;
  Json p = Json::array();
  for (const auto& row : e.P) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(x.to_integer());
    p.push_back(std::move(r));
  }
  j["P"] = std::move(p);
  Json q = Json::array();
  for (const auto& row : e.Q) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rational_str(x));
    q.push_back(std::move(r));
  }
  j["Q"] = std::move(q);
  j["multiplicities"] = e.mult;
  return j;
}

Json witness_json(const FamilyWitness& w, bool with_timings) {
  Json j;
  j["size"] = w.size;
  j["optimal"] = w.optimal;
  j["circles"] = w.circles;
  j["label"] = label_name(w.cls);
  j["nodes"] = w.nodes;
  j["runtime_ms"] = with_timings ? w.elapsed_ms : 0;
  return j;
}

Json enumeration_json(const EnumerationResult& res, bool with_timings) {
  Json j;
  j["count"] = res.families.size();
  j["complete"] = res.complete;
  Json fams = Json::array();
  for (const auto& f : res.families)
    fams.push_back({{"circles", f.circles}, {"label", label_name(f.cls)}});
  j["witnesses"] = std::move(fams);
  j["nodes"] = res.nodes;
  j["runtime_ms"] = with_timings ? res.elapsed_ms : 0;
  return j;
}

std::string csv(const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out;
}

}  // namespace benz
