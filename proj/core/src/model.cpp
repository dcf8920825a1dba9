#include "linkpres/model.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace linkpres {

CrossingId LinkPresentation::add_crossing(std::string name, Kind kind,
                                          CrossingId id) {
  if (id < 0) id = next_crossing;
  next_crossing = std::max(next_crossing, id + 1);
  Crossing c;
  c.name = std::move(name);
  c.kind = kind;
  crossings[id] = std::move(c);
  return id;
}

EdgeId LinkPresentation::add_edge(EndRef a, EndRef b, EdgeId id) {
  if (id < 0) id = next_edge;
  next_edge = std::max(next_edge, id + 1);
  edges[id] = Edge{{a, b}};
  return id;
}

Dart sigma(const LinkPresentation& p, Dart d) {
  const auto& rot = p.crossings.at(p.end_of(d).c).rot;
  auto it = std::find(rot.begin(), rot.end(), d);
  auto i = static_cast<size_t>(it - rot.begin());
  return rot[(i + 1) % rot.size()];
}

Dart sigma_inv(const LinkPresentation& p, Dart d) {
  const auto& rot = p.crossings.at(p.end_of(d).c).rot;
  auto it = std::find(rot.begin(), rot.end(), d);
  auto i = static_cast<size_t>(it - rot.begin());
  return rot[(i + rot.size() - 1) % rot.size()];
}

Dart face_next(const LinkPresentation& p, Dart d) {
  return sigma_inv(p, LinkPresentation::other(d));
}

std::vector<Face> trace_faces(const LinkPresentation& p) {
  std::vector<Dart> darts;
  darts.reserve(p.edges.size() * 2);
  for (const auto& [e, _] : p.edges) {
    darts.push_back({e, 0});
    darts.push_back({e, 1});
  }
  std::set<Dart> seen;
  std::vector<Face> faces;
  for (Dart d0 : darts) {
    if (seen.count(d0)) continue;
    Face orbit;
    Dart d = d0;
    do {
      orbit.push_back(d);
      seen.insert(d);
      d = face_next(p, d);
    } while (d != d0);
    faces.push_back(std::move(orbit));
  }
  return faces;
}

ValidationReport validate(const LinkPresentation& p, bool check_euler) {
  auto fail = [](const char* what, const std::string& where) {
    return ValidationReport{false, what, where};
  };
  std::set<Dart> seen;
  for (const auto& [c, info] : p.crossings) {
    const auto& rot = info.rot;
    std::string at = info.name.empty() ? std::to_string(c) : info.name;
    if (rot.size() != 4) return fail("degree", at);
    std::vector<int> poles;
    for (Dart d : rot) {
      if (d.side < 0 || d.side > 1) return fail("degree", at);
      auto it = p.edges.find(d.e);
      if (it == p.edges.end()) return fail("dangling-edge", at);
      EndRef r = it->second.ends[d.side];
      if (r.c != c) return fail("dart-misattached", at);
      if (!seen.insert(d).second) return fail("dart-duplicated", at);
      poles.push_back(r.pole);
    }
    int plus = 0;
    for (int q : poles) plus += (q == plus_pole);
    if (plus != 2) return fail("pole-count", at);
    for (int i = 0; i < 4; ++i)
      if (poles[i] == poles[(i + 1) % 4]) return fail("alternation", at);
  }
  for (const auto& [e, ed] : p.edges) {
    for (const EndRef& r : ed.ends)
      if (!p.crossings.count(r.c))
        return fail("dangling-crossing", std::to_string(e));
    if (!seen.count({e, 0}) || !seen.count({e, 1}))
      return fail("dart-unused", std::to_string(e));
  }
  if (check_euler) {
    auto comps = components(p);
    auto faces = trace_faces(p);
    for (const auto& comp : comps) {
      std::set<CrossingId> cs(comp.begin(), comp.end());
      int V = static_cast<int>(comp.size());
      int E = 0;
      for (const auto& [e, ed] : p.edges) E += cs.count(ed.ends[0].c) ? 1 : 0;
      int F = 0;
      for (const auto& f : faces) F += cs.count(p.end_of(f[0]).c) ? 1 : 0;
      if (V - E + F != 2) return fail("euler", std::to_string(comp[0]));
    }
  }
  return {};
}

std::vector<std::vector<CrossingId>> components(const LinkPresentation& p) {
  std::set<CrossingId> seen;
  std::vector<std::vector<CrossingId>> out;
  for (const auto& [start, _] : p.crossings) {
    if (seen.count(start)) continue;
    std::set<CrossingId> comp{start};
    std::deque<CrossingId> q{start};
    seen.insert(start);
    while (!q.empty()) {
      CrossingId c = q.front();
      q.pop_front();
      for (Dart d : p.crossings.at(c).rot) {
        CrossingId c2 = p.end_of(LinkPresentation::other(d)).c;
        if (seen.insert(c2).second) {
          comp.insert(c2);
          q.push_back(c2);
        }
      }
    }
    out.emplace_back(comp.begin(), comp.end());
  }
  return out;
}

// Enter `ref` via `via`; leave by the other dart at the same pole.
std::pair<EndRef, Dart> strand_next(const LinkPresentation& p, EndRef ref,
                                    Dart via) {
  const auto& rot = p.crossings.at(ref.c).rot;
  std::vector<Dart> outs;
  for (Dart d : rot)
    if (p.end_of(d) == ref && d != via) outs.push_back(d);
  if (outs.size() != 1) {
    // degenerate (x^r, x^r) edge: both of its darts sit at the same pole
    outs.clear();
    for (Dart d : rot)
      if (p.end_of(d) == ref) outs.push_back(d);
    outs.erase(std::find(outs.begin(), outs.end(), via));
  }
  Dart far = LinkPresentation::other(outs[0]);
  return {p.end_of(far), far};
}

std::vector<Strand> trace_strands(const LinkPresentation& p) {
  std::vector<EndRef> all_refs;
  for (const auto& [c, _] : p.crossings) {
    all_refs.push_back({c, plus_pole});
    all_refs.push_back({c, minus_pole});
  }
  std::sort(all_refs.begin(), all_refs.end(), ref_less);
  std::set<std::pair<int, int>> placed;
  std::vector<Strand> strands;
  for (EndRef start : all_refs) {
    if (placed.count(ref_key(start))) continue;
    const auto& rot = p.crossings.at(start.c).rot;
    std::vector<Dart> at;
    for (Dart d : rot)
      if (p.end_of(d) == start) at.push_back(d);
    std::sort(at.begin(), at.end());
    // walk in the direction whose next ref is smallest
    std::vector<std::pair<std::pair<int, int>, Dart>> cand;
    for (Dart v : at)
      cand.push_back({ref_key(strand_next(p, start, v).first), v});
    std::sort(cand.begin(), cand.end());
    Dart via = cand[0].second;
    Strand seq;
    EndRef cur = start;
    Dart vd = via;
    do {
      seq.push_back(cur);
      placed.insert(ref_key(cur));
      auto [nxt, vd2] = strand_next(p, cur, vd);
      cur = nxt;
      vd = vd2;
    } while (!(cur == start));
    strands.push_back(std::move(seq));
  }
  return strands;
}

EndRef successor(const LinkPresentation& p, EndRef ref, int l) {
  for (const auto& st : trace_strands(p)) {
    auto it = std::find(st.begin(), st.end(), ref);
    if (it != st.end()) {
      size_t i = static_cast<size_t>(it - st.begin());
      return st[(i + static_cast<size_t>(l)) % st.size()];
    }
  }
  throw std::out_of_range("no strand contains the given end");
}

LinkPresentation relabel(const LinkPresentation& p,
                         const std::map<CrossingId, CrossingId>& cmap,
                         const std::map<EdgeId, EdgeId>& emap,
                         const std::map<CrossingId, int>* rot_shift) {
  LinkPresentation q;
  for (const auto& [c, info] : p.crossings) {
    Crossing nc;
    nc.name = info.name;
    nc.kind = info.kind;
    for (Dart d : info.rot) nc.rot.push_back({emap.at(d.e), d.side});
    if (rot_shift) {
      int k = rot_shift->count(c) ? rot_shift->at(c) : 0;
      k = ((k % 4) + 4) % 4;
      std::rotate(nc.rot.begin(), nc.rot.begin() + k, nc.rot.end());
    }
    q.crossings[cmap.at(c)] = std::move(nc);
  }
  for (const auto& [e, ed] : p.edges) {
    Edge ne = ed;
    for (EndRef& r : ne.ends) r.c = cmap.at(r.c);
    q.edges[emap.at(e)] = ne;
  }
  for (const auto& [c, _] : q.crossings)
    q.next_crossing = std::max(q.next_crossing, c + 1);
  for (const auto& [e, _] : q.edges) q.next_edge = std::max(q.next_edge, e + 1);
  return q;
}

CrossingId by_name(const LinkPresentation& p, const std::string& name) {
  for (const auto& [c, info] : p.crossings)
    if (info.name == name) return c;
  throw std::out_of_range("no crossing named " + name);
}

}  // namespace linkpres
