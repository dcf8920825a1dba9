#include "linkpres/pass_engine.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace linkpres {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw MoveError(what);
}

using RefKey = std::pair<CrossingId, int>;

}  // namespace

std::vector<std::vector<std::pair<EndRef, Dart>>> strand_steps(
    const LinkPresentation& p) {
  std::vector<EndRef> all_refs;
  for (const auto& [c, _] : p.crossings) {
    all_refs.push_back({c, plus_pole});
    all_refs.push_back({c, minus_pole});
  }
  std::sort(all_refs.begin(), all_refs.end(), ref_less);
  std::set<std::pair<CrossingId, int>> placed;
  std::vector<std::vector<std::pair<EndRef, Dart>>> strands;
  for (EndRef start : all_refs) {
    if (placed.count({start.c, start.pole})) continue;
    std::vector<Dart> at;
    for (Dart d : p.crossings.at(start.c).rot)
      if (p.end_of(d) == start) at.push_back(d);
    std::sort(at.begin(), at.end());
    std::vector<std::pair<std::pair<RefKey, Dart>, Dart>> cand;
    for (Dart via : at) {
      auto [nxt, _] = strand_next(p, start, via);
      cand.push_back({{ref_key(nxt), via}, via});
    }
    std::sort(cand.begin(), cand.end());
    Dart via = cand[0].second;
    std::vector<std::pair<EndRef, Dart>> seq;
    EndRef cur = start;
    Dart vd = via;
    while (true) {
      auto [nxt, vd2] = strand_next(p, cur, vd);
      seq.push_back({cur, LinkPresentation::other(vd2)});
      placed.insert({cur.c, cur.pole});
      cur = nxt;
      vd = vd2;
      if (cur == start) break;
    }
    strands.push_back(std::move(seq));
  }
  return strands;
}

std::vector<Pass> find_maximal_passes(const LinkPresentation& p, int min_k,
                                      bool virtual_mode) {
  constexpr int kVirtGroup = 2;  // distinct from both poles
  std::vector<Pass> out;
  for (const auto& steps : strand_steps(p)) {
    int n = static_cast<int>(steps.size());
    std::vector<EndRef> refs;
    for (const auto& s : steps) refs.push_back(s.first);

    std::vector<int> gs(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) {
      EndRef r = refs[static_cast<size_t>(t)];
      gs[static_cast<size_t>(t)] =
          (virtual_mode && p.crossings.at(r.c).kind == Kind::virtual_cross)
              ? kVirtGroup
              : r.pole;
    }
    bool uniform = std::all_of(gs.begin(), gs.end(),
                               [&](int g) { return g == gs[0]; });
    if (uniform) continue;
    int i0 = 0;
    for (int t = 0; t < n; ++t)
      if (gs[static_cast<size_t>(t)] !=
          gs[static_cast<size_t>((t - 1 + n) % n)]) {
        i0 = t;
        break;
      }
    std::vector<std::array<int, 3>> runs;
    int t = 0;
    while (t < n) {
      int g = gs[static_cast<size_t>((i0 + t) % n)];
      int u = t;
      while (u + 1 < n && gs[static_cast<size_t>((i0 + u + 1) % n)] == g)
        ++u;
      runs.push_back({i0 + t, i0 + u, g});
      t = u + 1;
    }
    for (auto [i, j, g] : runs) {
      int k = j - i + 1;
      std::vector<EndRef> interior;
      for (int w = i; w <= j; ++w)
        interior.push_back(refs[static_cast<size_t>(w % n)]);
      Kind kind = Kind::classical;
      if (virtual_mode) {
        if (g == kVirtGroup) {
          kind = Kind::virtual_cross;
        } else {
          bool mixed = std::any_of(
              interior.begin(), interior.end(), [&](EndRef r) {
                return p.crossings.at(r.c).kind == Kind::virtual_cross;
              });
          if (mixed) continue;
        }
      } else if (g != plus_pole && g != minus_pole) {
        continue;
      }
      EndRef x = refs[static_cast<size_t>(((i - 1) % n + n) % n)];
      EndRef y = refs[static_cast<size_t>((j + 1) % n)];
      int eps = 0;
      if (kind == Kind::classical) {
        if (x.pole != -g || y.pole != -g) continue;
        eps = g;
      } else {
        if (p.crossings.at(x.c).kind != Kind::classical ||
            p.crossings.at(y.c).kind != Kind::classical)
          continue;
      }
      if (x.c == y.c) continue;
      std::set<CrossingId> inset;
      for (EndRef r : interior) inset.insert(r.c);
      if (inset.count(x.c) || inset.count(y.c)) continue;
      if (k < min_k) continue;
      Dart dart_x = steps[static_cast<size_t>(((i - 1) % n + n) % n)].second;
      Dart dart_y =
          LinkPresentation::other(steps[static_cast<size_t>(j % n)].second);
      if (ref_less(y, x)) {
        std::swap(x, y);
        std::reverse(interior.begin(), interior.end());
        std::swap(dart_x, dart_y);
      }
      out.push_back({x, y, std::move(interior), eps, kind, dart_x, dart_y, k});
    }
  }
  std::sort(out.begin(), out.end(), [](const Pass& a, const Pass& b) {
    return std::tuple(-a.k, ref_key(a.x), ref_key(a.y)) <
           std::tuple(-b.k, ref_key(b.x), ref_key(b.y));
  });
  return out;
}

StripResult strip_pass(const LinkPresentation& p, const Pass& ps) {
  if (!ps.interior.empty()) {
    std::set<CrossingId> dead;
    for (EndRef r : ps.interior) dead.insert(r.c);
    auto rem = remove_crossings(p, dead, {ps.dart_x, ps.dart_y});
    return {std::move(rem.p), rem.spawned, std::move(rem.healed)};
  }
  LinkPresentation q = p;
  EdgeId e = ps.dart_x.e;
  require(ps.dart_y.e == e, "zero-length pass darts must share an edge");
  replace_slot(q, ps.dart_x, hole_dart(ps.x));
  replace_slot(q, ps.dart_y, hole_dart(ps.y));
  q.edges.erase(e);
  return {std::move(q), 0, {}};
}

int hole_slot(const LinkPresentation& q, EndRef ref) {
  const auto& rot = q.crossings.at(ref.c).rot;
  auto it = std::find(rot.begin(), rot.end(), hole_dart(ref));
  require(it != rot.end(), "no hole at this ref");
  return static_cast<int>(it - rot.begin());
}

std::map<Dart, int> face_lookup(const std::vector<Face>& faces) {
  std::map<Dart, int> where;
  for (size_t fi = 0; fi < faces.size(); ++fi)
    for (Dart d : faces[fi]) where[d] = static_cast<int>(fi);
  return where;
}

int hole_face(const LinkPresentation& q, EndRef ref,
              const std::vector<Face>& faces,
              const std::map<Dart, int>& where) {
  const auto& rot = q.crossings.at(ref.c).rot;
  int j = hole_slot(q, ref);
  for (int k = 1; k < 4; ++k) {
    Dart d = rot[static_cast<size_t>((j - k + 8) % 4)];
    if (!is_hole(d)) return where.at(d);
  }
  throw MoveError("isolated endpoint");
}

namespace {

std::vector<EndRef> end_set(EndRef a, EndRef b) {
  if (a == b) return {a};
  if (!ref_less(a, b)) std::swap(a, b);
  return {a, b};
}

}  // namespace

std::vector<Dart> resolve_route(const LinkPresentation& q, const Pass& ps,
                                const std::vector<std::string>& crossed) {
  auto faces = trace_faces_skip(q);
  auto where = face_lookup(faces);
  std::map<std::string, CrossingId> byname;
  for (const auto& [c, info] : q.crossings) byname[info.name] = c;

  auto parse_end = [&](const std::string& t) -> EndRef {
    int pole = plus_pole;
    std::string name = t;
    if (!t.empty() && (t.back() == '+' || t.back() == '-')) {
      pole = t.back() == '-' ? minus_pole : plus_pole;
      name = t.substr(0, t.size() - 1);
    }
    auto it = byname.find(name);
    require(it != byname.end(), "unknown crossing name in route");
    return {it->second, pole};
  };

  int F = hole_face(q, ps.x, faces, where);
  std::vector<Dart> darts;
  for (const std::string& s : crossed) {
    std::istringstream in(s);
    std::string ta, tb;
    in >> ta >> tb;
    require(!ta.empty() && !tb.empty(), "route step needs two endpoints");
    auto want = end_set(parse_end(ta), parse_end(tb));
    std::vector<Dart> cands;
    for (const auto& [e, ed] : q.edges) {
      if (end_set(ed.ends[0], ed.ends[1]) != want) continue;
      for (int side = 0; side < 2; ++side) {
        Dart d{e, static_cast<std::int8_t>(side)};
        if (where.at(d) == F) cands.push_back(d);
      }
    }
    require(cands.size() == 1, "route step is ambiguous or off the face");
    darts.push_back(cands[0]);
    F = where.at(LinkPresentation::other(cands[0]));
  }
  require(F == hole_face(q, ps.y, faces, where), "route does not end at y");
  return darts;
}

EdgeId route_hit(LinkPresentation& q, Dart d, CrossingId c, int delta) {
  EndRef u_ref = q.end_of(d);
  EndRef w_ref = q.end_of(LinkPresentation::other(d));
  EdgeId h_u = q.add_edge(u_ref, {c, -delta});
  EdgeId h_w = q.add_edge({c, -delta}, w_ref);
  replace_slot(q, d, {h_u, 0});
  replace_slot(q, LinkPresentation::other(d), {h_w, 1});
  q.edges.erase(d.e);
  q.crossings.at(c).rot = {{h_u, 1}, route_out_mark, {h_w, 0}, route_in_mark};
  return h_w;
}

void fill_route_edges(LinkPresentation& q, const Pass& ps,
                      const std::vector<CrossingId>& ys, int delta) {
  int m = static_cast<int>(ys.size());
  EndRef prev_ref = ps.x;
  Dart prev_slot = hole_dart(ps.x);
  for (int j = 0; j <= m; ++j) {
    EndRef nxt_ref;
    Dart nxt_slot;
    if (j < m) {
      nxt_ref = {ys[static_cast<size_t>(j)], delta};
      nxt_slot = route_in_mark;
    } else {
      nxt_ref = ps.y;
      nxt_slot = hole_dart(ps.y);
    }
    EdgeId r = q.add_edge(prev_ref, nxt_ref);
    auto& rot_p = q.crossings.at(prev_ref.c).rot;
    auto itp = std::find(rot_p.begin(), rot_p.end(), prev_slot);
    require(itp != rot_p.end(), "route fill lost its slot");
    *itp = {r, 0};
    auto& rot_n = q.crossings.at(nxt_ref.c).rot;
    auto itn = std::find(rot_n.begin(), rot_n.end(), nxt_slot);
    require(itn != rot_n.end(), "route fill lost its slot");
    *itn = {r, 1};
    if (j < m) {
      prev_ref = {ys[static_cast<size_t>(j)], delta};
      prev_slot = route_out_mark;
    }
  }
  auto rep = validate(q);
  require(rep.ok, "pass replacement produced an invalid presentation");
}

std::vector<CrossingId> apply_routed(LinkPresentation& q, const Pass& ps,
                                     const std::vector<Dart>& route_darts,
                                     Kind kind, int delta,
                                     const std::vector<std::string>* names) {
  if (delta == 0) delta = kind == Kind::classical ? ps.eps : plus_pole;
  require(delta == plus_pole || delta == minus_pole, "bad route pole");
  std::map<EdgeId, EdgeId> chain;  // original edge -> remainder toward w
  std::vector<CrossingId> ys;
  for (size_t j = 0; j < route_darts.size(); ++j) {
    Dart d = route_darts[j];
    EdgeId orig = d.e;
    CrossingId c =
        fresh_crossing(q, names ? (*names)[j] : std::string());
    q.crossings.at(c).kind = kind;
    auto it = chain.find(orig);
    if (it != chain.end()) {
      // a repeated edge is hit again on the remainder piece between the
      // previous route crossing and w
      d = {it->second, 0};
    }
    chain[orig] = route_hit(q, d, c, delta);
    ys.push_back(c);
  }
  fill_route_edges(q, ps, ys, delta);
  return ys;
}

ReplacementResult apply_pass_replacement(const LinkPresentation& p,
                                         const Pass& ps,
                                         const std::vector<Dart>& route_darts,
                                         Kind kind, int delta,
                                         const std::vector<std::string>* names) {
  auto sr = strip_pass(p, ps);
  ReplacementResult out;
  out.spawned = sr.spawned;
  out.healed = std::move(sr.healed);
  out.m = static_cast<int>(route_darts.size());
  out.ys = apply_routed(sr.p, ps, route_darts, kind, delta, names);
  out.p = std::move(sr.p);
  return out;
}

ReplacementResult apply_pass_replacement(const LinkPresentation& p,
                                         const Pass& ps,
                                         const std::vector<std::string>& crossed,
                                         Kind kind, int delta,
                                         const std::vector<std::string>* names) {
  auto sr = strip_pass(p, ps);
  auto route_darts = resolve_route(sr.p, ps, crossed);
  ReplacementResult out;
  out.spawned = sr.spawned;
  out.healed = std::move(sr.healed);
  out.m = static_cast<int>(route_darts.size());
  out.ys = apply_routed(sr.p, ps, route_darts, kind, delta, names);
  out.p = std::move(sr.p);
  return out;
}

AdjacentGraph build_adjacent_graph(const LinkPresentation& p, const Pass& ps) {
  auto sr = strip_pass(p, ps);
  AdjacentGraph g;
  g.stripped = std::move(sr.p);
  g.spawned = sr.spawned;
  g.healed = std::move(sr.healed);
  g.faces = trace_faces_skip(g.stripped);
  g.where = face_lookup(g.faces);
  g.adj.assign(g.faces.size(), {});
  for (const auto& [e, _] : g.stripped.edges) {
    int fa = g.where.at({e, 0});
    int fb = g.where.at({e, 1});
    if (fa == fb) continue;
    g.adj[static_cast<size_t>(fa)].push_back({fb, {e, 0}});
    g.adj[static_cast<size_t>(fb)].push_back({fa, {e, 1}});
  }
  for (auto& row : g.adj) std::sort(row.begin(), row.end());
  g.f_x = hole_face(g.stripped, ps.x, g.faces, g.where);
  g.f_y = hole_face(g.stripped, ps.y, g.faces, g.where);
  return g;
}

std::optional<std::vector<Dart>> shortest_route(const AdjacentGraph& g) {
  if (g.f_x == g.f_y) return std::vector<Dart>{};
  std::map<int, int> dist;
  dist[g.f_y] = 0;
  std::deque<int> dq{g.f_y};
  while (!dq.empty()) {
    int f = dq.front();
    dq.pop_front();
    for (auto [h, _] : g.adj[static_cast<size_t>(f)])
      if (!dist.count(h)) {
        dist[h] = dist[f] + 1;
        dq.push_back(h);
      }
  }
  if (!dist.count(g.f_x)) return std::nullopt;
  std::vector<Dart> darts;
  int cur = g.f_x;
  while (cur != g.f_y) {
    std::optional<std::pair<int, Dart>> best;
    for (auto [h, d] : g.adj[static_cast<size_t>(cur)]) {
      auto it = dist.find(h);
      if (it == dist.end() || it->second != dist.at(cur) - 1) continue;
      if (!best || std::pair(h, d) < *best) best = {h, d};
    }
    require(best.has_value(), "breadth-first tree lost its parent");
    darts.push_back(best->second);
    cur = best->first;
  }
  return darts;
}

ReplacementClass classify_replacement(int k, int m) {
  if (m <= k - 1) return ReplacementClass::short_route;
  if (m == k) return ReplacementClass::equal_route;
  return ReplacementClass::long_route;
}

LinkPresentation replace_edge_surrounding(const LinkPresentation& p, EdgeId e,
                                          CrossingId z, int eps, Kind kind) {
  const auto& ed = p.edges.at(e);
  require(ed.ends[0].c != z && ed.ends[1].c != z,
          "surrounded crossing lies on the edge itself");
  if (kind == Kind::classical)
    require(p.crossings.at(z).kind == Kind::classical,
            "classical surround of a virtual crossing");
  Pass ps;
  ps.x = p.end_of({e, 0});
  ps.y = p.end_of({e, 1});
  ps.eps = eps;
  ps.kind = kind;
  ps.dart_x = {e, 0};
  ps.dart_y = {e, 1};
  ps.k = 0;
  auto sr = strip_pass(p, ps);
  LinkPresentation q = std::move(sr.p);
  // The wrap direction around z decides which flank of z's corner the two
  // closing arcs attach to; the wrong choice makes them cross. Walking the
  // stripped face from the x hole: meeting a corner of z first means the
  // first crossed spoke is the one the boundary arrived along (rot[j*+1],
  // anticlockwise wrap); meeting the y hole first flips both.
  auto faces = trace_faces_skip(q);
  auto where = face_lookup(faces);
  const Face& f = faces[static_cast<size_t>(hole_face(q, ps.x, faces, where))];

  auto hole_anchor = [&](EndRef ref) -> Dart {
    const auto& rot = q.crossings.at(ref.c).rot;
    int j = hole_slot(q, ref);
    for (int k2 = 1; k2 < 4; ++k2) {
      Dart d = rot[static_cast<size_t>((j - k2 + 8) % 4)];
      if (!is_hole(d)) return d;
    }
    throw MoveError("isolated endpoint");
  };

  Dart d_x = hole_anchor(ps.x), d_y = hole_anchor(ps.y);
  require(d_x != d_y, "degenerate surround");
  auto& rot_z = q.crossings.at(z).rot;
  auto it0 = std::find(f.begin(), f.end(), d_x);
  require(it0 != f.end(), "x anchor not on its own face");
  int i0 = static_cast<int>(it0 - f.begin());
  int n = static_cast<int>(f.size());
  int j1 = -1;
  bool seen_y = false;
  for (int t = 1; t <= n; ++t) {
    Dart d = f[static_cast<size_t>((i0 + t) % n)];
    if (q.end_of(d).c == z) {
      auto jt = std::find(rot_z.begin(), rot_z.end(), d);
      j1 = static_cast<int>(jt - rot_z.begin());
      break;
    }
    if (d == d_y) seen_y = true;
  }
  require(j1 >= 0, "z is not on a face of e");
  std::vector<int> slots;
  for (int t = 0; t < 4; ++t)
    slots.push_back(seen_y ? (j1 - t + 8) % 4 : (j1 + 1 + t) % 4);
  // Hits go slot by slot so a loop's second hit lands on whichever piece
  // currently occupies that slot; a clockwise wrap approaches each spoke
  // from its z-side dart, an anticlockwise wrap from the far dart.
  std::vector<CrossingId> ys;
  for (int sl : slots) {
    Dart dz = q.crossings.at(z).rot[static_cast<size_t>(sl)];
    Dart d = seen_y ? dz : LinkPresentation::other(dz);
    CrossingId c = fresh_crossing(q);
    q.crossings.at(c).kind = kind;
    route_hit(q, d, c, eps);
    ys.push_back(c);
  }
  fill_route_edges(q, ps, ys, eps);
  return q;
}

}  // namespace linkpres
