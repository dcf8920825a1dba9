#include "linkpres/virtual_ext.hpp"

#include <algorithm>
#include <deque>

namespace linkpres {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw MoveError(what);
}

int index_of(const std::vector<Dart>& rot, Dart d) {
  auto it = std::find(rot.begin(), rot.end(), d);
  require(it != rot.end(), "dart not in rotation");
  return static_cast<int>(it - rot.begin());
}

}  // namespace

std::optional<Overlay> curve_overlay(const LinkPresentation& p, const Pass& ps,
                                     const std::vector<Dart>& route_darts) {
  auto pre_where = face_lookup(trace_faces(p));
  int m = static_cast<int>(route_darts.size());
  std::vector<int> chord_face;
  for (int j = 0; j <= m; ++j) {
    if (j == 0 && m > 0) {
      chord_face.push_back(pre_where.at(route_darts[0]));
      continue;
    }
    if (j > 0) {
      Dart dj = route_darts[static_cast<size_t>(j - 1)];
      int back = pre_where.at(LinkPresentation::other(dj));
      if (j < m && pre_where.at(route_darts[static_cast<size_t>(j)]) != back)
        return std::nullopt;
      chord_face.push_back(back);
    }
  }
  const auto& rx = p.crossings.at(ps.x.c).rot;
  const auto& ry = p.crossings.at(ps.y.c).rot;
  int jx = index_of(rx, ps.dart_x);
  int jy = index_of(ry, ps.dart_y);
  // insertion slot jx puts the chord in the corner before dart_x (swept by
  // the orbit of rot[jx-1]); jx+1 puts it after (orbit of dart_x itself)
  std::pair<int, int> x_opts[2] = {
      {jx, pre_where.at(rx[static_cast<size_t>((jx - 1 + 4) % 4)])},
      {jx + 1, pre_where.at(ps.dart_x)}};
  std::pair<int, int> y_opts[2] = {
      {jy, pre_where.at(ry[static_cast<size_t>((jy - 1 + 4) % 4)])},
      {jy + 1, pre_where.at(ps.dart_y)}};
  int x_at = -1, y_at = -1;
  bool found = false;
  for (const auto& [xa, fx] : x_opts) {
    if (found) break;
    if (m > 0 && fx != chord_face.front()) continue;
    for (const auto& [ya, fy] : y_opts) {
      if (m > 0 ? fy == chord_face.back() : fy == fx) {
        x_at = xa;
        y_at = ya;
        found = true;
        break;
      }
    }
  }
  if (!found) return std::nullopt;

  LinkPresentation mu = p;
  std::vector<EdgeId> pass_edges{ps.dart_x.e};
  Dart d = ps.dart_x;
  for (EndRef r : ps.interior) {
    Dart arrive = LinkPresentation::other(d);
    const auto& rot = mu.crossings.at(r.c).rot;
    d = rot[static_cast<size_t>((index_of(rot, arrive) + 2) % 4)];
    pass_edges.push_back(d.e);
  }
  require(mu.end_of(LinkPresentation::other(d)) == ps.y,
          "pass walk went astray");
  std::map<EdgeId, EdgeId> chain;
  std::vector<CrossingId> vs;
  for (Dart rd : route_darts) {
    EdgeId orig = rd.e;
    CrossingId c = fresh_crossing(mu);
    auto it = chain.find(orig);
    if (it != chain.end()) rd = {it->second, 0};
    chain[orig] = route_hit(mu, rd, c, plus_pole);
    vs.push_back(c);
  }
  std::vector<EdgeId> chords;
  EndRef prev_ref = ps.x;
  std::optional<Dart> prev_slot;  // nullopt: insert at x_at
  for (size_t j = 0; j <= vs.size(); ++j) {
    EndRef nxt_ref;
    std::optional<Dart> nxt_slot;
    if (j < vs.size()) {
      nxt_ref = {vs[j], plus_pole};
      nxt_slot = route_in_mark;
    } else {
      nxt_ref = ps.y;
    }
    EdgeId r = mu.add_edge(prev_ref, nxt_ref);
    chords.push_back(r);
    auto& rot_p = mu.crossings.at(prev_ref.c).rot;
    if (prev_slot) {
      rot_p[static_cast<size_t>(index_of(rot_p, *prev_slot))] = {r, 0};
    } else {
      rot_p.insert(rot_p.begin() + x_at, Dart{r, 0});
    }
    auto& rot_n = mu.crossings.at(nxt_ref.c).rot;
    if (nxt_slot) {
      rot_n[static_cast<size_t>(index_of(rot_n, *nxt_slot))] = {r, 1};
    } else {
      rot_n.insert(rot_n.begin() + y_at, Dart{r, 1});
    }
    if (j < vs.size()) {
      prev_ref = {vs[j], plus_pole};
      prev_slot = route_out_mark;
    }
  }
  Overlay out;
  out.curve.insert(pass_edges.begin(), pass_edges.end());
  out.curve.insert(chords.begin(), chords.end());
  out.on_curve.insert(ps.x.c);
  out.on_curve.insert(ps.y.c);
  for (EndRef r : ps.interior) out.on_curve.insert(r.c);
  out.on_curve.insert(vs.begin(), vs.end());
  out.p = std::move(mu);
  return out;
}

bool virtual_reroute_allowed(
    const LinkPresentation& p, const Pass& ps,
    const std::vector<Dart>& route_darts,
    const std::vector<std::pair<EdgeId, int>>& healed) {
  std::set<EdgeId> heal_edges;
  for (const auto& [e, _] : healed) heal_edges.insert(e);
  for (Dart d : route_darts)
    if (heal_edges.count(d.e)) return false;
  auto got = curve_overlay(p, ps, route_darts);
  if (!got) return false;
  const LinkPresentation& mu = got->p;
  auto faces = trace_faces(mu);
  auto where = face_lookup(faces);
  // 2-color the dual, flipping parity exactly across curve edges; seed in
  // the curve's own component (crossings in other components can be drawn
  // on either side and never constrain the gate)
  int seed = where.at(Dart{*got->curve.begin(), 0});
  std::map<int, int> par{{seed, 0}};
  std::deque<int> dq{seed};
  while (!dq.empty()) {
    int f = dq.front();
    dq.pop_front();
    std::set<EdgeId> es;
    for (Dart d : faces[static_cast<size_t>(f)]) es.insert(d.e);
    for (EdgeId e : es) {
      int g = where.at({e, 1}) == f ? where.at({e, 0}) : where.at({e, 1});
      int npr = par[f] ^ (got->curve.count(e) ? 1 : 0);
      auto it = par.find(g);
      if (it == par.end()) {
        par[g] = npr;
        dq.push_back(g);
      } else if (it->second != npr) {
        return false;
      }
    }
  }
  std::set<CrossingId> inner[2];
  for (const auto& [c, info] : mu.crossings) {
    if (got->on_curve.count(c)) continue;
    auto it = par.find(where.at(info.rot[0]));
    if (it == par.end()) continue;
    inner[it->second].insert(c);
  }
  auto all_classical = [&](const std::set<CrossingId>& cs) {
    for (CrossingId c : cs)
      if (mu.crossings.at(c).kind != Kind::classical) return false;
    return true;
  };
  return all_classical(inner[0]) || all_classical(inner[1]);
}

namespace {

std::vector<Kind> triangle_kinds(const LinkPresentation& p,
                                 const TriangleSite& site) {
  std::vector<Kind> ks;
  for (Dart d : site.darts) ks.push_back(p.crossings.at(p.end_of(d).c).kind);
  return ks;
}

bool triangle_member(const LinkPresentation& p, const TriangleSite& site,
                     bool virtual_mode) {
  auto key = [](std::array<Dart, 3> a) {
    std::sort(a.begin(), a.end());
    return a;
  };
  for (const auto& s : find_triangle_sites(p, virtual_mode))
    if (key(s.darts) == key(site.darts)) return true;
  return false;
}

}  // namespace

bool kind_constraint(const LinkPresentation& p, UMove move, const USite& site,
                     std::array<Kind, 2> kinds) {
  switch (move) {
    case UMove::U0:
      return kinds[0] == kinds[1];
    case UMove::U1: {
      const auto& s = std::get<Omega1Site>(site);
      if (!p.crossings.count(s.x) || !p.crossings.count(s.y)) return false;
      Kind kx = p.crossings.at(s.x).kind, ky = p.crossings.at(s.y).kind;
      if (kx != ky) return false;
      if (kx == Kind::classical) {
        auto it = p.edges.find(s.e_plus);
        if (it == p.edges.end()) return false;
        return it->second.ends[0].pole == plus_pole &&
               it->second.ends[1].pole == plus_pole;
      }
      return true;
    }
    case UMove::U2:
      return true;  // curls carry no kind condition
    case UMove::U3: {
      const auto& s = std::get<TriangleSite>(site);
      auto ks = triangle_kinds(p, s);
      bool all_c = std::all_of(ks.begin(), ks.end(),
                               [](Kind k) { return k == Kind::classical; });
      bool all_v = std::all_of(ks.begin(), ks.end(), [](Kind k) {
        return k == Kind::virtual_cross;
      });
      if (all_v) return true;
      if (!all_c) return false;
      // classical triangles additionally need an equal-signed edge
      for (Dart d : s.darts)
        if (p.end_of(d).pole == p.end_of(LinkPresentation::other(d)).pole)
          return true;
      return false;
    }
    case UMove::U4: {
      const auto& s = std::get<TriangleSite>(site);
      auto ks = triangle_kinds(p, s);
      int nv = static_cast<int>(std::count(ks.begin(), ks.end(),
                                           Kind::virtual_cross));
      if (nv != 2) return false;
      // the face must depart the classical crossing at its plus pole
      for (size_t i = 0; i < 3; ++i)
        if (ks[i] == Kind::classical)
          return p.end_of(s.darts[i]).pole == plus_pole;
      return false;
    }
  }
  return false;
}

LinkPresentation apply_u_move(const LinkPresentation& p, UMove move,
                              const USite& site, std::array<Kind, 2> kinds) {
  if (!kind_constraint(p, move, site, kinds))
    throw KindError("kind constraint violated");
  switch (move) {
    case UMove::U0:
      return apply_omega0(p, std::get<Omega0Site>(site), kinds).p;
    case UMove::U1:
      return apply_omega1(p, std::get<Omega1Site>(site)).p;
    case UMove::U2:
      return apply_omega2(p, std::get<Omega2Site>(site));
    case UMove::U3:
    case UMove::U4: {
      const auto& s = std::get<TriangleSite>(site);
      require(triangle_member(p, s, true), "triangle site not legal here");
      return detail::triangle_slide(p, s.darts);
    }
  }
  throw MoveError("unknown move");
}

ReplacementResult apply_virtual_pass_replacement(
    const LinkPresentation& p, const Pass& ps,
    const std::vector<Dart>& route_darts, Kind new_kind) {
  if (new_kind == Kind::virtual_cross) {
    if (ps.kind != Kind::virtual_cross)
      throw KindError("virtual detour needs an all-virtual pass interior");
    return apply_pass_replacement(p, ps, route_darts, Kind::virtual_cross);
  }
  if (ps.kind != Kind::classical)
    throw KindError("classical reroute of a virtual-interior pass");
  bool any_virtual = std::any_of(
      p.crossings.begin(), p.crossings.end(),
      [](const auto& kv) { return kv.second.kind == Kind::virtual_cross; });
  if (any_virtual) {
    auto sr = strip_pass(p, ps);
    if (!virtual_reroute_allowed(p, ps, route_darts, sr.healed))
      throw KindError("rerouting region contains a virtual crossing");
  }
  return apply_pass_replacement(p, ps, route_darts, Kind::classical);
}

LinkPresentation pole_swap(const LinkPresentation& p, CrossingId c) {
  LinkPresentation q = p;
  for (auto& [e, ed] : q.edges)
    for (auto& end : ed.ends)
      if (end.c == c) end.pole = -end.pole;
  return q;
}

}  // namespace linkpres
