#include "linkpres/moves.hpp"

#include <algorithm>

namespace linkpres {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw MoveError(what);
}

int find_index(const std::vector<Dart>& rot, Dart d) {
  auto it = std::find(rot.begin(), rot.end(), d);
  require(it != rot.end(), "rotation slot not found (stale site)");
  return static_cast<int>(it - rot.begin());
}

bool has_curl(const LinkPresentation& p, CrossingId x) {
  for (const auto& [e, ed] : p.edges)
    if (ed.ends[0].c == x && ed.ends[1].c == x &&
        ed.ends[0].pole != ed.ends[1].pole)
      return true;
  return false;
}

}  // namespace

void replace_slot(LinkPresentation& p, Dart old_d, Dart new_d) {
  auto& rot = p.crossings.at(p.end_of(old_d).c).rot;
  rot[find_index(rot, old_d)] = new_d;
}

CrossingId fresh_crossing(LinkPresentation& p, const std::string& name) {
  CrossingId id = p.next_crossing;
  return p.add_crossing(name.empty() ? "z" + std::to_string(id) : name,
                        Kind::classical, id);
}

Dart sigma_skip(const LinkPresentation& p, Dart d) {
  const auto& rot = p.crossings.at(p.end_of(d).c).rot;
  int i = find_index(rot, d);
  for (int k = 1; k <= 4; ++k) {
    Dart cand = rot[(i + k) % 4];
    if (!is_hole(cand)) return cand;
  }
  throw MoveError("all-hole crossing");
}

Dart sigma_skip_inv(const LinkPresentation& p, Dart d) {
  const auto& rot = p.crossings.at(p.end_of(d).c).rot;
  int i = find_index(rot, d);
  for (int k = 1; k <= 4; ++k) {
    Dart cand = rot[(i - k + 8) % 4];
    if (!is_hole(cand)) return cand;
  }
  throw MoveError("all-hole crossing");
}

std::vector<Face> trace_faces_skip(const LinkPresentation& p) {
  std::vector<Dart> darts;
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
      d = sigma_skip_inv(p, LinkPresentation::other(d));
    } while (d != d0);
    faces.push_back(std::move(orbit));
  }
  return faces;
}

// ---- omega 0 ----

Omega0Result apply_omega0(const LinkPresentation& p0, const Omega0Site& site,
                          std::array<Kind, 2> kinds,
                          const std::array<std::string, 2>* names) {
  require(site.s == plus_pole || site.s == minus_pole, "bad sign");
  const Face& face = site.shared_face;
  require(!face.empty(), "empty face");
  // the face must be a genuine orbit of the current presentation
  for (size_t i = 0; i < face.size(); ++i)
    require(face_next(p0, face[i]) == face[(i + 1) % face.size()],
            "shared_face is not a face of this presentation");
  if (names)
    for (const auto& nm : *names)
      for (const auto& [c, info] : p0.crossings)
        require(info.name != nm, "crossing name already in use");

  LinkPresentation p = p0;
  int s = site.s;
  auto named = [&](int i) {
    return fresh_crossing(p, names ? (*names)[static_cast<size_t>(i)]
                                   : std::string());
  };
  auto first_dart_of = [&](EdgeId e) {
    auto it = std::find_if(face.begin(), face.end(),
                           [&](Dart d) { return d.e == e; });
    require(it != face.end(), "edge not on shared_face");
    return *it;
  };

  if (site.e_x != site.e_y) {
    Dart dx = first_dart_of(site.e_x);
    Dart dy = first_dart_of(site.e_y);
    EndRef x1 = p.end_of(dx), y1 = p.end_of(LinkPresentation::other(dx));
    EndRef x2 = p.end_of(dy), y2 = p.end_of(LinkPresentation::other(dy));
    CrossingId X = named(0), Y = named(1);
    p.crossings[X].kind = kinds[0];
    p.crossings[Y].kind = kinds[1];
    EdgeId g1 = p.add_edge(x1, {X, s});
    EdgeId g2 = p.add_edge({X, s}, {Y, s});
    EdgeId g3 = p.add_edge({Y, s}, y1);
    EdgeId h1 = p.add_edge(y2, {X, -s});
    EdgeId h2 = p.add_edge({X, -s}, {Y, -s});
    EdgeId h3 = p.add_edge({Y, -s}, x2);
    replace_slot(p, dx, {g1, 0});
    replace_slot(p, LinkPresentation::other(dx), {g3, 1});
    replace_slot(p, dy, {h3, 1});
    replace_slot(p, LinkPresentation::other(dy), {h1, 0});
    p.crossings[X].rot = {{g1, 1}, {h2, 0}, {g2, 0}, {h1, 1}};
    p.crossings[Y].rot = {{g2, 1}, {h2, 1}, {g3, 0}, {h3, 0}};
    p.edges.erase(site.e_x);
    p.edges.erase(site.e_y);
    return {std::move(p), X, Y};
  }

  // nested clause: both crossings sit on the one edge
  Dart dx = first_dart_of(site.e_x);
  EndRef x1 = p.end_of(dx), y1 = p.end_of(LinkPresentation::other(dx));
  CrossingId X = named(0), Y = named(1);
  p.crossings[X].kind = kinds[0];
  p.crossings[Y].kind = kinds[1];
  EdgeId g1 = p.add_edge(x1, {X, s});
  EdgeId g2 = p.add_edge({X, s}, {Y, s});
  EdgeId g3 = p.add_edge({Y, s}, {Y, -s});
  EdgeId g4 = p.add_edge({Y, -s}, {X, -s});
  EdgeId g5 = p.add_edge({X, -s}, y1);
  replace_slot(p, dx, {g1, 0});
  replace_slot(p, LinkPresentation::other(dx), {g5, 1});
  p.crossings[X].rot = {{g1, 1}, {g4, 1}, {g2, 0}, {g5, 0}};
  p.crossings[Y].rot = {{g2, 1}, {g4, 0}, {g3, 0}, {g3, 1}};
  p.edges.erase(site.e_x);
  return {std::move(p), X, Y};
}

// ---- crossing removal with strand healing ----

namespace {

// dart at refs[i] on the edge leading to refs[i + direction] along the strand
Dart dart_toward(const LinkPresentation& p, const Strand& refs, int i,
                 int direction) {
  int n = static_cast<int>(refs.size());
  EndRef a = refs[static_cast<size_t>(i)];
  EndRef b = refs[static_cast<size_t>(((i + direction) % n + n) % n)];
  EndRef back = refs[static_cast<size_t>(((i - direction) % n + n) % n)];
  std::vector<Dart> cands;
  for (Dart d : p.crossings.at(a.c).rot)
    if (!is_hole(d) && p.end_of(d) == a) cands.push_back(d);
  for (Dart d : cands) {
    if (!(p.end_of(LinkPresentation::other(d)) == b)) continue;
    std::vector<Dart> rest;
    for (Dart x : cands)
      if (x != d) rest.push_back(x);
    if (rest.empty()) return d;
    if (p.end_of(LinkPresentation::other(rest[0])) == back) return d;
  }
  for (Dart d : cands)
    if (p.end_of(LinkPresentation::other(d)) == b) return d;
  throw MoveError("strand walk inconsistent");
}

}  // namespace

RemovalResult remove_crossings(const LinkPresentation& p0,
                               const std::set<CrossingId>& dead,
                               const std::set<Dart>& keep_darts) {
  LinkPresentation p = p0;
  auto strands = trace_strands(p);
  RemovalResult out;
  std::set<EdgeId> dead_edges;
  for (const auto& [e, ed] : p.edges)
    if (dead.count(ed.ends[0].c) || dead.count(ed.ends[1].c))
      dead_edges.insert(e);

  for (const auto& refs : strands) {
    int n = static_cast<int>(refs.size());
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (!dead.count(refs[static_cast<size_t>(i)].c)) idx.push_back(i);
    if (idx.empty()) {
      if (n > 0) ++out.spawned;
      continue;
    }
    if (static_cast<int>(idx.size()) == n) continue;
    for (size_t t = 0; t < idx.size(); ++t) {
      int i = idx[t];
      int j = idx[(t + 1) % idx.size()];
      if ((i + 1) % n == j && idx.size() > 1) continue;  // no gap here
      EndRef a = refs[static_cast<size_t>(i)];
      EndRef b = refs[static_cast<size_t>(j)];
      Dart da, db;
      if (idx.size() == 1) {
        // single survivor: both of its darts point into the one gap, so the
        // heal is a loop edge (a, a)
        std::vector<Dart> ds;
        for (Dart d : p.crossings.at(a.c).rot)
          if (!is_hole(d) && p.end_of(d) == a) ds.push_back(d);
        require(ds.size() == 2, "strand walk inconsistent");
        da = ds[0];
        db = ds[1];
      } else {
        da = dart_toward(p, refs, i, +1);
        db = dart_toward(p, refs, j, -1);
      }
      if (keep_darts.count(da) || keep_darts.count(db)) {
        require(keep_darts.count(da) && keep_darts.count(db),
                "kept gap must be flanked by kept darts on both sides");
        replace_slot(p, da, hole_dart(a));
        replace_slot(p, db, hole_dart(b));
        continue;
      }
      EdgeId ne = p.add_edge(a, b);
      out.healed.push_back({ne, ((j - i - 1) % n + n) % n});
      replace_slot(p, da, {ne, 0});
      replace_slot(p, db, {ne, 1});
    }
  }
  for (int s = 0; s < out.spawned; ++s) {
    CrossingId o = fresh_crossing(p, "o" + std::to_string(p.next_crossing));
    EdgeId e1 = p.add_edge({o, plus_pole}, {o, minus_pole});
    EdgeId e2 = p.add_edge({o, plus_pole}, {o, minus_pole});
    p.crossings[o].rot = {{e1, 0}, {e1, 1}, {e2, 0}, {e2, 1}};
  }
  for (EdgeId e : dead_edges) p.edges.erase(e);
  for (CrossingId c : dead) p.crossings.erase(c);
  out.p = std::move(p);
  return out;
}

// ---- omega 1 / omega 2 ----

std::vector<Omega1Site> find_omega1_sites(const LinkPresentation& p,
                                          bool virtual_mode) {
  std::vector<Omega1Site> sites;
  std::set<std::pair<CrossingId, CrossingId>> taken;
  for (const auto& [e, ed] : p.edges) {
    EndRef a = ed.ends[0], b = ed.ends[1];
    if (a.c == b.c) continue;
    if (a.c > b.c) std::swap(a, b);
    if (taken.count({a.c, b.c})) continue;
    Kind ka = p.crossings.at(a.c).kind, kb = p.crossings.at(b.c).kind;
    if (ka != kb) continue;
    if (ka == Kind::classical &&
        !(a.pole == plus_pole && b.pole == plus_pole))
      continue;
    if (ka == Kind::virtual_cross && !virtual_mode) continue;
    EdgeId partner = -1;
    EndRef wa{a.c, -a.pole}, wb{b.c, -b.pole};
    for (const auto& [e2, ed2] : p.edges) {
      if (e2 == e) continue;
      if ((ed2.ends[0] == wa && ed2.ends[1] == wb) ||
          (ed2.ends[0] == wb && ed2.ends[1] == wa)) {
        partner = e2;
        break;
      }
    }
    if (partner < 0) continue;
    if (has_curl(p, a.c) || has_curl(p, b.c)) continue;
    taken.insert({a.c, b.c});
    sites.push_back({a.c, b.c, e, partner});
  }
  return sites;
}

Omega1Result apply_omega1(const LinkPresentation& p, const Omega1Site& site) {
  bool live = false;
  for (const auto& s : find_omega1_sites(p, true))
    if (s.x == site.x && s.y == site.y && s.e_plus == site.e_plus &&
        s.e_minus == site.e_minus)
      live = true;
  require(live, "stale clasp site");
  auto rem = remove_crossings(p, {site.x, site.y});
  return {std::move(rem.p), rem.spawned};
}

std::vector<Omega2Site> find_omega2_sites(const LinkPresentation& p,
                                          bool virtual_mode) {
  std::vector<Omega2Site> sites;
  for (const auto& [e, ed] : p.edges) {
    EndRef a = ed.ends[0], b = ed.ends[1];
    if (!(a.c == b.c && a.pole == -b.pole)) continue;
    CrossingId x = a.c;
    if (p.crossings.at(x).kind == Kind::virtual_cross && !virtual_mode)
      continue;
    std::vector<Dart> plus_darts;
    for (Dart d : p.crossings.at(x).rot)
      if (d.e != e && p.end_of(d) == EndRef{x, plus_pole})
        plus_darts.push_back(d);
    if (plus_darts.empty()) continue;  // P_O form
    EndRef far = p.end_of(LinkPresentation::other(plus_darts[0]));
    if (far == EndRef{x, minus_pole}) continue;  // whole-component loop
    sites.push_back({x, e});
  }
  return sites;
}

LinkPresentation apply_omega2(const LinkPresentation& p,
                              const Omega2Site& site) {
  auto it = p.edges.find(site.e);
  require(it != p.edges.end(), "stale curl site");
  bool live = false;
  for (const auto& s : find_omega2_sites(p, true))
    if (s.x == site.x && s.e == site.e) live = true;
  require(live, "whole-component loop (the curl is already trivial)");
  return remove_crossings(p, {site.x}).p;
}

// ---- omega 3 ----

std::vector<TriangleSite> find_triangle_sites(const LinkPresentation& p,
                                              bool virtual_mode) {
  std::vector<TriangleSite> sites;
  for (const auto& f : trace_faces(p)) {
    if (f.size() != 3) continue;
    std::vector<CrossingId> cs;
    for (Dart d : f) cs.push_back(p.end_of(d).c);
    if (std::set<CrossingId>(cs.begin(), cs.end()).size() != 3) continue;
    bool transversal = true;
    for (int i = 0; i < 3 && transversal; ++i) {
      EndRef in = p.end_of(LinkPresentation::other(f[static_cast<size_t>(i)]));
      EndRef outr = p.end_of(f[static_cast<size_t>((i + 1) % 3)]);
      if (!(in.c == outr.c && in.pole == -outr.pole)) transversal = false;
    }
    if (!transversal) continue;
    std::vector<Kind> kinds;
    for (CrossingId c : cs) kinds.push_back(p.crossings.at(c).kind);
    int nvirt = 0;
    for (Kind k : kinds) nvirt += (k == Kind::virtual_cross);
    TriangleSite site{{f[0], f[1], f[2]}};
    if (nvirt == 0) {
      // classical slide needs an equal-signed edge on the triangle
      // (otherwise all three corners depart the same pole and the printed
      // pole pattern cannot match)
      bool eq = false;
      for (Dart d : f)
        if (p.end_of(d).pole == p.end_of(LinkPresentation::other(d)).pole)
          eq = true;
      if (!eq) continue;
      sites.push_back(site);
    } else if (virtual_mode && nvirt == 3) {
      sites.push_back(site);
    } else if (virtual_mode && nvirt == 2) {
      // mixed triangle: the face must depart the classical crossing at its
      // plus pole (the printed chirality of the mixed slide)
      for (int i = 0; i < 3; ++i)
        if (kinds[static_cast<size_t>(i)] == Kind::classical) {
          if (p.end_of(f[static_cast<size_t>(i)]).pole == plus_pole)
            sites.push_back(site);
          break;
        }
    }
  }
  return sites;
}

namespace detail {

LinkPresentation triangle_slide(const LinkPresentation& p0,
                                const std::array<Dart, 3>& face) {
  LinkPresentation p = p0;
  auto outer_dart = [&](EndRef r, EdgeId tri_edge) {
    std::vector<Dart> cands;
    for (Dart d : p.crossings.at(r.c).rot)
      if (p.end_of(d) == r && d.e != tri_edge) cands.push_back(d);
    require(cands.size() == 1, "degenerate triangle corner");
    return cands[0];
  };
  for (Dart d : face) {
    EdgeId e = d.e;
    EndRef a = p.edges.at(e).ends[0];
    EndRef b = p.edges.at(e).ends[1];
    Dart da_out = outer_dart(a, e);
    Dart db_out = outer_dart(b, e);
    Dart mark{e, mark_side};
    replace_slot(p, da_out, mark);
    replace_slot(p, db_out, da_out);
    p.edges.at(da_out.e).ends[da_out.side] = b;
    p.edges.at(db_out.e).ends[db_out.side] = a;
    auto& rot = p.crossings.at(a.c).rot;
    rot[static_cast<size_t>(find_index(rot, mark))] = db_out;
  }
  return p;
}

}  // namespace detail

LinkPresentation apply_omega3(const LinkPresentation& p,
                              const TriangleSite& site) {
  auto key = [](const std::array<Dart, 3>& a) {
    auto s = a;
    std::sort(s.begin(), s.end());
    return s;
  };
  bool live = false;
  for (const auto& s : find_triangle_sites(p, false))
    if (key(s.darts) == key(site.darts)) live = true;
  require(live, "triangle site not legal here");
  return detail::triangle_slide(p, site.darts);
}

SiteLists enumerate_sites(const LinkPresentation& p) {
  return {find_omega1_sites(p, false), find_omega2_sites(p, false),
          find_triangle_sites(p, false)};
}

}  // namespace linkpres
