#include "linkpres/reduction.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "linkpres/canonical.hpp"
#include "linkpres/virtual_ext.hpp"

namespace linkpres {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw MoveError(what);
}

}  // namespace

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::unlink:
      return "unlink";
    case Outcome::alternating:
      return "alternating";
    case Outcome::splitting:
      return "splitting";
    case Outcome::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

std::vector<CrossingId> cut_crossings(const LinkPresentation& p) {
  std::map<CrossingId, std::vector<std::pair<EdgeId, CrossingId>>> adj;
  for (const auto& [e, ed] : p.edges) {
    CrossingId a = ed.ends[0].c, b = ed.ends[1].c;
    if (a == b) continue;
    adj[a].push_back({e, b});
    adj[b].push_back({e, a});
  }
  std::set<CrossingId> cuts, seen;
  for (const auto& [root, _] : adj) {
    if (seen.count(root)) continue;
    std::map<CrossingId, int> disc, low;
    struct Frame {
      CrossingId v;
      EdgeId via;
      size_t idx;
    };
    std::vector<Frame> stack{{root, -1, 0}};
    disc[root] = low[root] = static_cast<int>(seen.size());
    int order = static_cast<int>(seen.size()) + 1;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& fr = stack.back();
      CrossingId v = fr.v;
      bool advanced = false;
      const auto& row = adj.at(v);
      while (fr.idx < row.size()) {
        auto [e, w] = row[fr.idx++];
        if (e == fr.via) continue;
        if (!disc.count(w)) {
          disc[w] = low[w] = order++;
          if (v == root) ++root_children;
          stack.push_back({w, e, 0});
          advanced = true;
          break;
        }
        low[v] = std::min(low[v], disc[w]);
      }
      if (!advanced) {
        stack.pop_back();
        if (!stack.empty()) {
          CrossingId u = stack.back().v;
          low[u] = std::min(low[u], low[v]);
          if (u != root && low[v] >= disc[u]) cuts.insert(u);
        }
      }
    }
    if (root_children > 1) cuts.insert(root);
    for (const auto& [c, _d] : disc) seen.insert(c);
  }
  return {cuts.begin(), cuts.end()};
}

LinkPresentation apply_factor(const LinkPresentation& p, CrossingId x) {
  LinkPresentation q = p;
  std::vector<Dart> rot = q.crossings.at(x).rot;
  for (Dart d : rot)
    require(q.end_of(LinkPresentation::other(d)).c != x,
            "cut crossing carries a loop");
  // group the four darts by the component their far endpoint lands in once
  // x is removed
  std::map<Dart, CrossingId> other_of;
  std::map<CrossingId, CrossingId> reach;
  for (Dart d : rot) {
    CrossingId far = q.end_of(LinkPresentation::other(d)).c;
    other_of[d] = far;
    if (reach.count(far)) continue;
    std::set<CrossingId> comp{far};
    std::vector<CrossingId> frontier{far};
    while (!frontier.empty()) {
      CrossingId c = frontier.back();
      frontier.pop_back();
      for (const auto& [e, ed] : q.edges) {
        CrossingId cs[2] = {ed.ends[0].c, ed.ends[1].c};
        for (int s = 0; s < 2; ++s) {
          CrossingId u = cs[s], v = cs[1 - s];
          if (u == c && v != x && !comp.count(v)) {
            comp.insert(v);
            frontier.push_back(v);
          }
        }
      }
    }
    for (CrossingId c : comp)
      if (!reach.count(c)) reach[c] = far;
  }
  std::vector<std::pair<CrossingId, std::vector<Dart>>> groups;
  for (Dart d : rot) {
    CrossingId rep = reach.at(other_of.at(d));
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == rep; });
    if (it == groups.end()) {
      groups.push_back({rep, {d}});
    } else {
      it->second.push_back(d);
    }
  }
  require(groups.size() == 2 && groups[0].second.size() == 2 &&
              groups[1].second.size() == 2,
          "crossing does not separate into two blocks");
  std::set<EdgeId> dead;
  for (const auto& [_, g] : groups) {
    Dart d1 = g[0], d2 = g[1];
    EndRef u = q.end_of(LinkPresentation::other(d1));
    EndRef v = q.end_of(LinkPresentation::other(d2));
    EdgeId e = q.add_edge(u, v);
    replace_slot(q, LinkPresentation::other(d1), {e, 0});
    replace_slot(q, LinkPresentation::other(d2), {e, 1});
    dead.insert(d1.e);
    dead.insert(d2.e);
  }
  for (EdgeId e : dead) q.edges.erase(e);
  q.crossings.erase(x);
  return q;
}

namespace {

bool is_O_component(const LinkPresentation& p, CrossingId c) {
  std::vector<EdgeId> es;
  for (const auto& [e, ed] : p.edges)
    if (ed.ends[0].c == c || ed.ends[1].c == c) es.push_back(e);
  if (es.size() != 2) return false;
  for (EdgeId e : es) {
    const auto& ed = p.edges.at(e);
    auto match = [&](EndRef a, EndRef b) {
      return a == EndRef{c, plus_pole} && b == EndRef{c, minus_pole};
    };
    if (!match(ed.ends[0], ed.ends[1]) && !match(ed.ends[1], ed.ends[0]))
      return false;
  }
  return true;
}

bool alternates(const Strand& st) {
  size_t n = st.size();
  if (n < 2) return false;
  for (size_t i = 0; i < n; ++i)
    if (st[i].pole != -st[(i + 1) % n].pole) return false;
  return true;
}

}  // namespace

std::optional<Outcome> classify_state(const LinkPresentation& p) {
  if (p.n_crossings() == 0) return Outcome::unlink;
  bool all_O = true;
  for (const auto& [c, _] : p.crossings)
    if (!is_O_component(p, c)) {
      all_O = false;
      break;
    }
  if (all_O) return Outcome::unlink;
  auto strands = trace_strands(p);
  if (std::all_of(strands.begin(), strands.end(), alternates))
    return Outcome::alternating;
  if (components(p).size() > 1) return Outcome::splitting;
  return std::nullopt;
}

namespace {

std::string pole_token(int pole) { return pole == plus_pole ? "+" : "-"; }

std::string dart_token(Dart d) {
  return std::to_string(d.e) + ":" + std::to_string(d.side);
}

MoveRecord make_record(std::string op, std::vector<std::string> params,
                       const LinkPresentation& after) {
  MoveRecord r;
  r.op = std::move(op);
  r.params = std::move(params);
  r.n_after = after.n_crossings();
  r.code8 = code8(canonical_code(after));
  return r;
}

std::vector<std::string> pass_params(const LinkPresentation& before,
                                     const Pass& ps,
                                     const std::vector<Dart>& route) {
  std::vector<std::string> t{before.crossings.at(ps.x.c).name,
                             pole_token(ps.x.pole),
                             dart_token(ps.dart_x),
                             std::to_string(ps.k),
                             ps.eps == 0 ? "0" : pole_token(ps.eps),
                             ps.kind == Kind::virtual_cross ? "v" : "c"};
  for (Dart d : route) t.push_back(dart_token(d));
  return t;
}

}  // namespace

ReductionReport reduce(const LinkPresentation& p, const ReduceConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  LinkPresentation work = p;
  long long n0 = work.n_crossings();
  long long N0 = cfg.budget >= 0 ? cfg.budget : 10 * n0 * n0;
  long long N = 0;
  bool vm = cfg.virtual_mode;
  std::mt19937 rng(cfg.seed);
  ReductionReport rep;
  rep.stats = {{"omega2", 0}, {"omega1", 0}, {"short", 0}, {"equal", 0}};
  std::set<std::string> visited{canonical_code(work)};

  auto finish = [&](Outcome o) {
    rep.outcome = o;
    rep.final_p = std::move(work);
    rep.explored = N;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
  };

  auto order_passes = [&](std::vector<Pass>& passes) {
    switch (cfg.pass_order) {
      case PassOrder::longest_first:
        break;  // find_maximal_passes already sorts longest first
      case PassOrder::shortest_first:
        std::stable_sort(passes.begin(), passes.end(),
                         [](const Pass& a, const Pass& b) {
                           return std::tuple(a.k, ref_key(a.x), ref_key(a.y)) <
                                  std::tuple(b.k, ref_key(b.x), ref_key(b.y));
                         });
        break;
      case PassOrder::shuffled:
        std::shuffle(passes.begin(), passes.end(), rng);
        break;
    }
  };

  while (true) {
    {
      auto sites = find_omega2_sites(work, vm);
      if (!sites.empty()) {
        const auto& s = sites[0];
        std::vector<std::string> params{work.crossings.at(s.x).name,
                                        std::to_string(s.e)};
        work = apply_omega2(work, s);
        rep.trace.push_back(make_record("omega2", std::move(params), work));
        ++rep.stats["omega2"];
        continue;
      }
    }
    {
      auto sites = find_omega1_sites(work, vm);
      if (!sites.empty()) {
        const auto& s = sites[0];
        std::vector<std::string> params{
            work.crossings.at(s.x).name, work.crossings.at(s.y).name,
            std::to_string(s.e_plus), std::to_string(s.e_minus)};
        work = apply_omega1(work, s).p;
        rep.trace.push_back(make_record("omega1", std::move(params), work));
        ++rep.stats["omega1"];
        continue;
      }
    }
    {
      auto cuts = cut_crossings(work);
      if (!cuts.empty()) {
        // connected sum: split at the cut crossing and reduce the blocks
        // independently (they no longer interact)
        CrossingId x = cuts[0];
        std::vector<std::string> params{work.crossings.at(x).name};
        work = apply_factor(work, x);
        visited.insert(canonical_code(work));
        rep.trace.push_back(make_record("factor", std::move(params), work));
        ++rep.stats["factor"];
        continue;
      }
    }

    auto passes = find_maximal_passes(work, 1, vm);
    order_passes(passes);

    bool committed = false;
    for (const Pass& ps : passes) {
      auto g = build_adjacent_graph(work, ps);
      auto route = shortest_route(g);
      if (!route) continue;
      if (static_cast<int>(route->size()) > ps.k - 1) continue;
      if (vm && ps.kind == Kind::classical &&
          !virtual_reroute_allowed(work, ps, *route, g.healed))
        continue;
      auto params = pass_params(work, ps, *route);
      LinkPresentation q = std::move(g.stripped);
      apply_routed(q, ps, *route, ps.kind);
      work = std::move(q);
      visited.insert(canonical_code(work));
      rep.trace.push_back(make_record("pass", std::move(params), work));
      ++rep.stats["short"];
      committed = true;
      break;
    }
    if (committed) continue;

    bool applied_equal = false;
    for (const Pass& ps : passes) {
      auto g = build_adjacent_graph(work, ps);
      auto route = shortest_route(g);
      if (!route || static_cast<int>(route->size()) != ps.k) continue;
      if (vm && ps.kind == Kind::classical &&
          !virtual_reroute_allowed(work, ps, *route, g.healed))
        continue;
      LinkPresentation cand = std::move(g.stripped);
      apply_routed(cand, ps, *route, ps.kind);
      std::string code = canonical_code(cand);
      if (visited.count(code)) continue;
      ++N;
      if (N > N0) return finish(Outcome::budget_exhausted);
      auto params = pass_params(work, ps, *route);
      work = std::move(cand);
      visited.insert(code);
      rep.trace.push_back(make_record("pass", std::move(params), work));
      ++rep.stats["equal"];
      applied_equal = true;
      break;
    }
    if (applied_equal) continue;

    auto cls = classify_state(work);
    return finish(cls.value_or(Outcome::budget_exhausted));
  }
}

}  // namespace linkpres
