#include "linkpres/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "linkpres/virtual_ext.hpp"

// Transcription notes (all verified by alternation + heal derivations):
//   - K_T: printed e15 = (a5-, a11) forces three '+' ends at a11;
//     alternation at a11 in both K_T and the P1 state forces (a5-, a11-).
//   - 11-crossing instance: printed e_b0 = (a5, a6-), e_b0- = (a5-, a6)
//     breaks alternation at a5 and a6; the pair is swapped. (Confirmed by
//     the family formula: e_b1 = (a5-, b1) occupies the same slot.)
//   - P1 state of the 11-crossing instance: printed e28 = (a8-, a11) gives
//     three '-' ends at a8; the heal of the strand through a1- joins
//     (a11+, a8+), so e28 = (a8, a11).
//   - same state: e27 = (a3, a9-) and e29 = (a9-, a3) are one edge printed
//     under two names (no free rotation slots for two parallel copies);
//     merged under 'e27'.

namespace linkpres {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw MoveError(what);
}

}  // namespace

std::pair<std::string, int> parse_end_token(const std::string& s) {
  require(!s.empty(), "empty end token");
  char last = s.back();
  if (last == '+' || last == '-')
    return {s.substr(0, s.size() - 1),
            last == '-' ? minus_pole : plus_pole};
  return {s, plus_pole};
}

BuiltPresentation build(const EdgeTable& edges, const RotTable& rots,
                        const std::map<std::string, Kind>& kinds) {
  BuiltPresentation out;
  LinkPresentation& p = out.p;
  for (const auto& [name, _] : rots) {
    Kind k = Kind::classical;
    auto it = kinds.find(name);
    if (it != kinds.end()) k = it->second;
    out.cmap[name] = p.add_crossing(name, k);
  }
  for (const auto& [label, ends] : edges) {
    auto sp = ends.find(' ');
    require(sp != std::string::npos, "edge table row needs two ends");
    auto [an, ap] = parse_end_token(ends.substr(0, sp));
    auto [bn, bp] = parse_end_token(ends.substr(sp + 1));
    require(out.cmap.count(an) && out.cmap.count(bn),
            "edge table names unknown crossing " + label);
    out.emap[label] = p.add_edge({out.cmap.at(an), ap}, {out.cmap.at(bn), bp});
  }

  std::set<Dart> used;
  for (const auto& [name, labels] : rots) {
    CrossingId c = out.cmap.at(name);
    std::vector<std::vector<Dart>> cands;
    for (const auto& lab : labels) {
      require(out.emap.count(lab), "rotation names unknown edge " + lab);
      EdgeId e = out.emap.at(lab);
      std::vector<Dart> ds;
      for (int s = 0; s < 2; ++s)
        if (p.edges.at(e).ends[s].c == c)
          ds.push_back({e, static_cast<std::int8_t>(s)});
      require(!ds.empty(), "edge " + lab + " not at " + name);
      cands.push_back(std::move(ds));
    }
    std::vector<Dart> picked;
    std::function<bool(int)> place = [&](int i) -> bool {
      if (i == 4) {
        for (int j = 0; j < 4; ++j) {
          int pj = p.end_of(picked[static_cast<size_t>(j)]).pole;
          int pn = p.end_of(picked[static_cast<size_t>((j + 1) % 4)]).pole;
          if (pj == pn) return false;
        }
        return true;
      }
      for (Dart d : cands[static_cast<size_t>(i)]) {
        if (used.count(d) ||
            std::find(picked.begin(), picked.end(), d) != picked.end())
          continue;
        picked.push_back(d);
        if (place(i + 1)) return true;
        picked.pop_back();
      }
      return false;
    };
    require(place(0), "no consistent rotation at " + name);
    used.insert(picked.begin(), picked.end());
    p.crossings.at(c).rot = picked;
  }
  auto rep = validate(p);
  require(rep.ok, "fixture does not validate: " + rep.violation);
  return out;
}

LinkPresentation make_O(const std::string& name) {
  LinkPresentation p;
  CrossingId o = p.add_crossing(name, Kind::classical);
  EdgeId e1 = p.add_edge({o, plus_pole}, {o, minus_pole});
  EdgeId e2 = p.add_edge({o, plus_pole}, {o, minus_pole});
  p.crossings.at(o).rot = {{e1, 0}, {e1, 1}, {e2, 0}, {e2, 1}};
  return p;
}

LinkPresentation make_trivial(int components) {
  LinkPresentation p;
  for (int i = 1; i <= components; ++i) {
    CrossingId o = p.add_crossing("o" + std::to_string(i), Kind::classical);
    EdgeId e1 = p.add_edge({o, plus_pole}, {o, minus_pole});
    EdgeId e2 = p.add_edge({o, plus_pole}, {o, minus_pole});
    p.crossings.at(o).rot = {{e1, 0}, {e1, 1}, {e2, 0}, {e2, 1}};
  }
  return p;
}

namespace {

const EdgeTable kEx31Edges = {
    {"e1", "a1- a2"},  {"e2", "a1 a2-"},  {"e3", "a1 a3-"},
    {"e4", "a1- a6"},  {"e5", "a2- a3"},  {"e6", "a2 a3-"},
    {"e7", "a3 a4-"},  {"e8", "a4 a5-"},  {"e9", "a4- a5"},
    {"e10", "a4 a6-"}, {"e11", "a5- a6"}, {"e12", "a5 a6-"},
};

const RotTable kL1Rots = {
    {"a1", {"e3", "e4", "e2", "e1"}},   {"a2", {"e1", "e2", "e6", "e5"}},
    {"a3", {"e5", "e6", "e7", "e3"}},   {"a4", {"e8", "e9", "e10", "e7"}},
    {"a5", {"e9", "e8", "e12", "e11"}}, {"a6", {"e11", "e12", "e4", "e10"}},
};

const RotTable kL2Rots = {
    {"a1", {"e3", "e4", "e2", "e1"}},   {"a2", {"e1", "e2", "e6", "e5"}},
    {"a3", {"e5", "e6", "e7", "e3"}},   {"a4", {"e8", "e7", "e10", "e9"}},
    {"a5", {"e9", "e11", "e12", "e8"}}, {"a6", {"e11", "e10", "e4", "e12"}},
};

const EdgeTable kTrefoilEdges = {
    {"e1", "t1 t2-"}, {"e2", "t2- t3"}, {"e3", "t3 t1-"},
    {"e4", "t1- t2"}, {"e5", "t2 t3-"}, {"e6", "t3- t1"},
};

const RotTable kTrefoilRots = {
    {"t1", {"e6", "e3", "e1", "e4"}},
    {"t2", {"e4", "e1", "e5", "e2"}},
    {"t3", {"e2", "e5", "e3", "e6"}},
};

const EdgeTable kKtEdges = {
    {"e1", "a1 a2"},     {"e2", "a1- a6"},    {"e3", "a1- a12"},
    {"e4", "a1 a12-"},   {"e5", "a2 a3-"},    {"e6", "a2- a9"},
    {"e7", "a2- a15"},   {"e8", "a3- a4"},    {"e9", "a3 a14"},
    {"e10", "a3 a15-"},  {"e11", "a4 a5"},    {"e12", "a4- a14-"},
    {"e13", "a4- a15"},  {"e14", "a5 a6-"},   {"e15", "a5- a11-"},
    {"e16", "a5- a12"},  {"e17", "a6- a7-"},  {"e18", "a6 a13"},
    {"e19", "a7 a8-"},   {"e20", "a7- a8"},   {"e21", "a7 a13-"},
    {"e22", "a9 a8-"},   {"e23", "a9- a8"},   {"e24", "a9- a10"},
    {"e25", "a10 a11-"}, {"e26", "a10- a13"}, {"e27", "a10- a14-"},
    {"e28", "a11 a13-"}, {"e29", "a11 a14"},  {"e30", "a15- a12-"},
};

const RotTable kKtRots = {
    {"a1", {"e1", "e2", "e4", "e3"}},     {"a2", {"e1", "e7", "e5", "e6"}},
    {"a3", {"e9", "e5", "e10", "e8"}},    {"a4", {"e11", "e12", "e8", "e13"}},
    {"a5", {"e11", "e16", "e14", "e15"}}, {"a6", {"e18", "e14", "e2", "e17"}},
    {"a7", {"e19", "e20", "e21", "e17"}}, {"a8", {"e20", "e19", "e23", "e22"}},
    {"a9", {"e22", "e23", "e6", "e24"}},  {"a10", {"e24", "e27", "e25", "e26"}},
    {"a11", {"e29", "e15", "e28", "e25"}}, {"a12", {"e3", "e4", "e16", "e30"}},
    {"a13", {"e18", "e21", "e26", "e28"}}, {"a14", {"e9", "e12", "e29", "e27"}},
    {"a15", {"e7", "e30", "e13", "e10"}},
};

const EdgeTable kKtP1Edges = {
    {"e1", "a1 a2"},      {"e2", "a1- a6"},     {"e3", "a1- a12"},
    {"e4", "a1 a12-"},    {"e5", "a2 a3-"},     {"e6", "a2- a9"},
    {"e7", "a2- a15"},    {"e10", "a3 a15-"},   {"e15", "a5- a11-"},
    {"e17", "a6- a7-"},   {"e18", "a6 a13"},    {"e19", "a7 a8-"},
    {"e20", "a7- a8"},    {"e21", "a7 a13-"},   {"e22", "a9 a8-"},
    {"e23", "a9- a8"},    {"e30", "a15- a12-"}, {"e31", "a16 a11"},
    {"e32", "a16- a13"},  {"e33", "a16 a13-"},  {"e34", "a16- a17-"},
    {"e35", "a5 a17"},    {"e36", "a6- a17"},   {"e37", "a17- a18-"},
    {"e38", "a5- a18"},   {"e39", "a12 a18"},   {"e40", "a15 a18-"},
    {"e41", "a3- a5"},    {"e42", "a3 a11"},    {"e43", "a9- a11-"},
};

const RotTable kKtP1Rots = {
    {"a1", {"e1", "e2", "e4", "e3"}},     {"a2", {"e1", "e7", "e5", "e6"}},
    {"a3", {"e42", "e5", "e10", "e41"}},  {"a5", {"e41", "e38", "e35", "e15"}},
    {"a6", {"e18", "e36", "e2", "e17"}},  {"a7", {"e19", "e20", "e21", "e17"}},
    {"a8", {"e20", "e19", "e23", "e22"}}, {"a9", {"e22", "e23", "e6", "e43"}},
    {"a11", {"e42", "e15", "e31", "e43"}}, {"a12", {"e3", "e4", "e39", "e30"}},
    {"a13", {"e18", "e21", "e32", "e33"}}, {"a15", {"e7", "e30", "e40", "e10"}},
    {"a16", {"e31", "e34", "e33", "e32"}}, {"a17", {"e35", "e37", "e36", "e34"}},
    {"a18", {"e37", "e38", "e40", "e39"}},
};

const EdgeTable kG00Edges = {
    {"e1", "a1 a2"},    {"e2", "a1- a11"},  {"e3", "a1 a11-"},
    {"e4", "a1- a8"},   {"e5", "a2- a3"},   {"e6", "a2 a3-"},
    {"e7", "a2- a9-"},  {"e8", "a3- a4"},   {"e9", "a3 a6-"},
    {"e10", "a4 a5-"},  {"e11", "a4- a5"},  {"e12", "a4- a7-"},
    {"eb0", "a5- a6"},  {"eb0m", "a5 a6-"}, {"e15", "a6 a7"},
    {"e16", "a7 a8-"},  {"e17", "a7- a8"},  {"e18", "a9 a8-"},
    {"e19", "a9- a10"}, {"e20", "a9 a10-"}, {"e21", "a10 a11-"},
    {"e22", "a10- a11"},
};

const RotTable kG00Rots = {
    {"a1", {"e1", "e4", "e3", "e2"}},     {"a2", {"e1", "e7", "e6", "e5"}},
    {"a3", {"e5", "e6", "e9", "e8"}},     {"a4", {"e8", "e11", "e10", "e12"}},
    {"a5", {"e11", "eb0", "eb0m", "e10"}}, {"a6", {"eb0", "e9", "e15", "eb0m"}},
    {"a7", {"e15", "e17", "e16", "e12"}}, {"a8", {"e17", "e18", "e4", "e16"}},
    {"a9", {"e18", "e7", "e20", "e19"}},  {"a10", {"e21", "e22", "e19", "e20"}},
    {"a11", {"e22", "e21", "e2", "e3"}},
};

const EdgeTable kGP1Edges = {
    {"e8", "a3- a4"},   {"e9", "a3 a6-"},   {"e10", "a4 a5-"},
    {"e11", "a4- a5"},  {"e12", "a4- a7-"}, {"eb0", "a5- a6"},
    {"eb0m", "a5 a6-"}, {"e15", "a6 a7"},   {"e16", "a7 a8-"},
    {"e17", "a7- a8"},  {"e19", "a9- a10"}, {"e20", "a9 a10-"},
    {"e21", "a10 a11-"}, {"e22", "a10- a11"}, {"e23", "y1 a3-"},
    {"e24", "y1- a8-"}, {"e25", "y1- a9"},  {"e26", "y1 a11-"},
    {"e27", "a3 a9-"},  {"e28", "a8 a11"},
};

const RotTable kGP1Rots = {
    {"y1", {"e23", "e25", "e26", "e24"}}, {"a3", {"e27", "e23", "e9", "e8"}},
    {"a4", {"e8", "e11", "e10", "e12"}},  {"a5", {"e11", "eb0", "eb0m", "e10"}},
    {"a6", {"eb0", "e9", "e15", "eb0m"}}, {"a7", {"e15", "e17", "e16", "e12"}},
    {"a8", {"e17", "e24", "e28", "e16"}}, {"a9", {"e25", "e27", "e20", "e19"}},
    {"a10", {"e21", "e22", "e19", "e20"}}, {"a11", {"e22", "e21", "e28", "e26"}},
};

const EdgeTable kGP2Edges = {
    {"eb0", "a5- a6"},  {"eb0m", "a5 a6-"}, {"e19", "a9- a10"},
    {"e20", "a9 a10-"}, {"e21", "a10 a11-"}, {"e22", "a10- a11"},
    {"e23", "y1 a3-"},  {"e24", "y1- a8-"}, {"e25", "y1- a9"},
    {"e26", "y1 a11-"}, {"e27", "a3 a9-"},  {"e28", "a8 a11"},
    {"e30", "y2 a3"},   {"e31", "y2- a5"},  {"e32", "y2 a6-"},
    {"e33", "y2- a8"},  {"e34", "a3- a5-"}, {"e35", "a6 a8-"},
};

const RotTable kGP2Rots = {
    {"y2", {"e30", "e33", "e32", "e31"}}, {"y1", {"e23", "e25", "e26", "e24"}},
    {"a3", {"e27", "e23", "e30", "e34"}}, {"a5", {"e31", "eb0", "eb0m", "e34"}},
    {"a6", {"eb0", "e32", "e35", "eb0m"}}, {"a8", {"e33", "e24", "e28", "e35"}},
    {"a9", {"e25", "e27", "e20", "e19"}}, {"a10", {"e21", "e22", "e19", "e20"}},
    {"a11", {"e22", "e21", "e28", "e26"}},
};

const EdgeTable kGP3Edges = {
    {"eb0", "a5- a6"},  {"eb0m", "a5 a6-"}, {"e19", "a9- a10"},
    {"e20", "a9 a10-"}, {"e21", "a10 a11-"}, {"e22", "a10- a11"},
    {"e24", "y1- a8-"}, {"e25", "y1- a9"},  {"e26", "y1 a11-"},
    {"e28", "a8 a11"},  {"e36", "y3 a6-"},  {"e37", "y3- a6"},
    {"e38", "y3- a8-"}, {"e39", "y3 a9-"},  {"e40", "y1 a5-"},
    {"e41", "a5 a8"},
};

const RotTable kGP3Rots = {
    {"y3", {"e39", "e37", "e36", "e38"}}, {"y1", {"e40", "e25", "e26", "e24"}},
    {"a5", {"e41", "eb0", "eb0m", "e40"}}, {"a6", {"eb0", "e36", "e37", "eb0m"}},
    {"a8", {"e41", "e24", "e28", "e38"}}, {"a9", {"e25", "e39", "e20", "e19"}},
    {"a10", {"e21", "e22", "e19", "e20"}}, {"a11", {"e22", "e21", "e28", "e26"}},
};

const EdgeTable kGP4Edges = {
    {"eb0", "a5- a6"},  {"eb0m", "a5 a6-"}, {"e19", "a9- a10"},
    {"e20", "a9 a10-"}, {"e21", "a10 a11-"}, {"e22", "a10- a11"},
    {"e42", "a5 a11"},  {"e43", "a5- a11-"}, {"e44", "a6 a9"},
    {"e45", "a6- a9-"},
};

const RotTable kGP4Rots = {
    {"a5", {"e42", "eb0", "eb0m", "e43"}}, {"a6", {"eb0", "e45", "e44", "eb0m"}},
    {"a9", {"e44", "e45", "e20", "e19"}},  {"a10", {"e21", "e22", "e19", "e20"}},
    {"a11", {"e22", "e21", "e42", "e43"}},
};

void table_set(EdgeTable& t, const std::string& label,
               const std::string& value) {
  for (auto& [lab, v] : t)
    if (lab == label) {
      v = value;
      return;
    }
  t.push_back({label, value});
}

void table_del(EdgeTable& t, const std::string& label) {
  t.erase(std::remove_if(t.begin(), t.end(),
                         [&](const auto& row) { return row.first == label; }),
          t.end());
}

void rot_set(RotTable& t, const std::string& name,
             const std::array<std::string, 4>& rot) {
  for (auto& [n, r] : t)
    if (n == name) {
      r = rot;
      return;
    }
  t.push_back({name, rot});
}

// Each chain is a run of nugatory coils: one arc carries the 2t curl
// crossings (connector edges between consecutive curls plus a loop edge at
// each), the other arc returns directly. Reading the printed tables as two
// parallel rails instead makes the diagram knotted for |k-l| >= 2 (the
// post-clasp remnant is an alternating twist), so the rail reading cannot
// be what the figure shows. 'flip' mirrors the curl side, matching the
// mirrored rotation order of the second chain.
void family_chain(EdgeTable& edges, RotTable& rots, const std::string& prefix,
                  const std::vector<std::string>& nodes,
                  const std::string& end_lo, const std::string& end_hi,
                  bool flip) {
  int t2 = static_cast<int>(nodes.size());
  for (int i = 1; i <= t2 + 1; ++i) {
    std::string a, b;
    if (i == 1) {
      a = end_lo + "-";
      b = nodes[0];
    } else if (i == t2 + 1) {
      a = nodes[static_cast<size_t>(t2 - 1)] + "-";
      b = end_hi;
    } else {
      a = nodes[static_cast<size_t>(i - 2)] + "-";
      b = nodes[static_cast<size_t>(i - 1)];
    }
    table_set(edges, prefix + std::to_string(i), a + " " + b);
  }
  table_set(edges, prefix + "r", end_lo + " " + end_hi + "-");
  for (int i = 1; i <= t2; ++i) {
    const std::string& n = nodes[static_cast<size_t>(i - 1)];
    std::string lo = prefix + std::to_string(i) + "o";
    table_set(edges, lo, n + " " + n + "-");
    std::string in = prefix + std::to_string(i);
    std::string outl = prefix + std::to_string(i + 1);
    if (flip) {
      rot_set(rots, n, {lo, lo, outl, in});
    } else {
      rot_set(rots, n, {in, outl, lo, lo});
    }
  }
}

std::pair<EdgeTable, RotTable> goeritz_tables(int k, int l) {
  EdgeTable edges = kG00Edges;
  RotTable rots = kG00Rots;
  if (k > 0) {
    table_del(edges, "eb0");
    table_del(edges, "eb0m");
    std::vector<std::string> bs;
    for (int i = 1; i <= 2 * k; ++i) bs.push_back("b" + std::to_string(i));
    family_chain(edges, rots, "fb", bs, "a5", "a6", false);
    rot_set(rots, "a5", {"e11", "fb1", "fbr", "e10"});
    rot_set(rots, "a6",
            {"fb" + std::to_string(2 * k + 1), "e9", "e15", "fbr"});
  }
  if (l > 0) {
    table_del(edges, "e21");
    table_del(edges, "e22");
    std::vector<std::string> cs;
    for (int j = 1; j <= 2 * l; ++j) cs.push_back("c" + std::to_string(j));
    family_chain(edges, rots, "fc", cs, "a10", "a11", true);
    rot_set(rots, "a10", {"fcr", "fc1", "e19", "e20"});
    rot_set(rots, "a11",
            {"fc" + std::to_string(2 * l + 1), "fcr", "e2", "e3"});
  }
  return {std::move(edges), std::move(rots)};
}

std::pair<EdgeTable, RotTable> goeritz_k1_tables(int k, int l) {
  EdgeTable edges = {
      {"e19", "a9- a10"}, {"e20", "a9 a10-"}, {"e42", "a5 a11"},
      {"e43", "a5- a11-"}, {"e44", "a6 a9"},  {"e45", "a6- a9-"},
  };
  RotTable rots = {
      {"a9", {"e19", "e44", "e45", "e20"}},
      {"a10", {"e21", "e22", "e19", "e20"}},
  };
  if (k == 0) {
    table_set(edges, "eb0", "a5- a6");
    table_set(edges, "eb0m", "a5 a6-");
    rot_set(rots, "a5", {"e42", "eb0", "eb0m", "e43"});
    rot_set(rots, "a6", {"eb0", "e45", "e44", "eb0m"});
  }
  if (l == 0) {
    table_set(edges, "e21", "a10 a11-");
    table_set(edges, "e22", "a10- a11");
    rot_set(rots, "a11", {"e43", "e22", "e21", "e42"});
  }
  if (k > 0) {
    std::vector<std::string> bs;
    for (int i = 1; i <= 2 * k; ++i) bs.push_back("b" + std::to_string(i));
    family_chain(edges, rots, "fb", bs, "a5", "a6", false);
    rot_set(rots, "a5", {"e42", "fb1", "fbr", "e43"});
    rot_set(rots, "a6",
            {"fb" + std::to_string(2 * k + 1), "e45", "e44", "fbr"});
  }
  if (l > 0) {
    std::vector<std::string> cs;
    for (int j = 1; j <= 2 * l; ++j) cs.push_back("c" + std::to_string(j));
    family_chain(edges, rots, "fc", cs, "a10", "a11", true);
    rot_set(rots, "a10", {"fcr", "fc1", "e19", "e20"});
    rot_set(rots, "a11",
            {"e43", "fc" + std::to_string(2 * l + 1), "fcr", "e42"});
  }
  return {std::move(edges), std::move(rots)};
}

}  // namespace

BuiltPresentation built_l1() { return build(kEx31Edges, kL1Rots); }
BuiltPresentation built_l2() { return build(kEx31Edges, kL2Rots); }

std::pair<LinkPresentation, LinkPresentation> make_example31() {
  return {built_l1().p, built_l2().p};
}

BuiltPresentation built_trefoil() { return build(kTrefoilEdges, kTrefoilRots); }

BuiltPresentation built_thistlethwaite() { return build(kKtEdges, kKtRots); }
LinkPresentation make_thistlethwaite() { return built_thistlethwaite().p; }
BuiltPresentation built_kt_p1() { return build(kKtP1Edges, kKtP1Rots); }

BuiltPresentation built_g00() { return build(kG00Edges, kG00Rots); }
BuiltPresentation built_g_p1() { return build(kGP1Edges, kGP1Rots); }
BuiltPresentation built_g_p2() { return build(kGP2Edges, kGP2Rots); }
BuiltPresentation built_g_p3() { return build(kGP3Edges, kGP3Rots); }
BuiltPresentation built_g_p4() { return build(kGP4Edges, kGP4Rots); }

BuiltPresentation built_goeritz(int k, int l) {
  auto [edges, rots] = goeritz_tables(k, l);
  return build(edges, rots);
}

LinkPresentation make_goeritz(int k, int l) { return built_goeritz(k, l).p; }

BuiltPresentation built_goeritz_k1(int k, int l) {
  auto [edges, rots] = goeritz_k1_tables(k, l);
  return build(edges, rots);
}

const std::vector<ReplayStep>& thistlethwaite_replays() {
  static const std::vector<ReplayStep> steps = {
      {"a13+", "a15+", {"a16", "a17", "a18"},
       {"a11+ a13-", "a5+ a6-", "a5- a12+"}},
      {"a8+", "a18+", {"a19", "a20"}, {"a1- a6+", "a17- a18-"}},
      {"a1-", "a16-", {"a21"}, {"a2- a8-"}},
      // second crossed edge printed as (a16-, a20): impossible while a17
      // lives (a16- is tied to a17- by the first route's edge); the only
      // route consistent with the later (a23, a20) subdivision crosses
      // (a17-, a20) instead
      {"a15+", "a7+", {"a22", "a23"}, {"a3+ a15-", "a17- a20+"}},
      {"a23-", "a15-", {"a24"}, {"a20+ a23+"}},
  };
  return steps;
}

const std::vector<ReplayStep>& goeritz_replays() {
  static const std::vector<ReplayStep> steps = {
      {"a11-", "a3-", {"y1"}, {"a9+ a8-"}},
      {"a8+", "a5+", {"y2"}, {"a3+ a6-"}},
      {"a6-", "a9-", {"y3"}, {"a6+ a8-"}},
      {"a6+", "a9+", {}, {}},
  };
  return steps;
}

Pass locate_pass(const LinkPresentation& p, const std::string& x,
                 const std::string& y, int k) {
  auto [xn, xp] = parse_end_token(x);
  auto [yn, yp] = parse_end_token(y);
  EndRef xref{by_name(p, xn), xp}, yref{by_name(p, yn), yp};
  std::vector<Pass> hits;
  for (const auto& ps : find_maximal_passes(p))
    if (((ps.x == xref && ps.y == yref) || (ps.x == yref && ps.y == xref)) &&
        (k < 0 || ps.k == k))
      hits.push_back(ps);
  require(hits.size() == 1, "pass endpoints do not pick a unique pass");
  Pass ps = hits[0];
  if (!(ps.x == xref)) {
    std::swap(ps.x, ps.y);
    std::swap(ps.dart_x, ps.dart_y);
    std::reverse(ps.interior.begin(), ps.interior.end());
  }
  return ps;
}

LinkPresentation apply_replay_step(const LinkPresentation& p,
                                   const ReplayStep& step) {
  Pass ps = locate_pass(p, step.x, step.y);
  const std::vector<std::string>* names =
      step.names.empty() ? nullptr : &step.names;
  return apply_pass_replacement(p, ps, step.crossed, Kind::classical, 0, names)
      .p;
}

LinkPresentation random_presentation(std::uint64_t seed, int op_count) {
  std::mt19937_64 rng(seed);
  LinkPresentation p = make_O();
  for (int i = 0; i < op_count; ++i) {
    std::uint64_t pick = rng() % 10;
    if (pick < 7) {
      auto faces = trace_faces(p);
      const Face& f = faces[rng() % faces.size()];
      std::set<EdgeId> on_face;
      for (Dart d : f) on_face.insert(d.e);
      std::vector<EdgeId> es(on_face.begin(), on_face.end());
      Omega0Site site;
      site.e_x = es[rng() % es.size()];
      site.e_y = es[rng() % es.size()];
      site.shared_face = f;
      site.s = rng() % 2 == 0 ? plus_pole : minus_pole;
      Kind kk = pick < 5 ? Kind::classical : Kind::virtual_cross;
      p = apply_omega0(p, site, {kk, kk}).p;
    } else {
      auto passes = find_maximal_passes(p, 1, true);
      if (passes.empty()) continue;
      const Pass& ps = passes[rng() % passes.size()];
      auto g = build_adjacent_graph(p, ps);
      auto route = shortest_route(g);
      if (!route) continue;
      if (ps.kind == Kind::classical &&
          !virtual_reroute_allowed(p, ps, *route, g.healed))
        continue;
      LinkPresentation q = std::move(g.stripped);
      apply_routed(q, ps, *route, ps.kind);
      p = std::move(q);
    }
  }
  return p;
}

}  // namespace linkpres
