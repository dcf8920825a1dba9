#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linkpres/moves.hpp"

namespace linkpres {

// Maximal pass: a run of same-pole (or all-virtual) interior crossings
// between two flank refs x, y. Canonically oriented so ref_key(x) <=
// ref_key(y); dart_x leaves x toward the first interior crossing, dart_y
// arrives at y from the last one. For k = 0 instances (edge surround) the
// two darts are the two sides of the shared edge.
struct Pass {
  EndRef x{}, y{};
  std::vector<EndRef> interior;
  int eps = 0;  // shared interior pole; 0 for virtual-kind passes
  Kind kind = Kind::classical;
  Dart dart_x{}, dart_y{};
  int k = 0;
};

// Each strand as a cyclic list of (ref, out_dart); out_dart leaves the ref
// toward the next one. Same starts and direction policy as trace_strands.
std::vector<std::vector<std::pair<EndRef, Dart>>> strand_steps(
    const LinkPresentation& p);

std::vector<Pass> find_maximal_passes(const LinkPresentation& p, int min_k = 1,
                                      bool virtual_mode = false);

struct StripResult {
  LinkPresentation p;
  int spawned = 0;
  std::vector<std::pair<EdgeId, int>> healed;
};

// Remove the pass interior; the endpoint refs keep hole sentinels where the
// pass edges attached.
StripResult strip_pass(const LinkPresentation& p, const Pass& ps);

int hole_slot(const LinkPresentation& q, EndRef ref);
std::map<Dart, int> face_lookup(const std::vector<Face>& faces);
// Face bordering the hole at ref: orbit of the nearest non-hole dart
// clockwise from the hole slot.
int hole_face(const LinkPresentation& q, EndRef ref,
              const std::vector<Face>& faces, const std::map<Dart, int>& where);

// Resolve a route given as end-pair strings "name1[+-] name2[+-]" naming the
// endpoints of each crossed edge, in order from x's hole face. Used by the
// scripted replays.
std::vector<Dart> resolve_route(const LinkPresentation& q, const Pass& ps,
                                const std::vector<std::string>& crossed);

// Subdivide d's edge at new route crossing c, approached from d's side.
// Returns the remainder edge (toward the far end of d).
EdgeId route_hit(LinkPresentation& q, Dart d, CrossingId c, int delta);

// Join x's hole to y's hole through the route crossings ys. Validates.
void fill_route_edges(LinkPresentation& q, const Pass& ps,
                      const std::vector<CrossingId>& ys, int delta);

// Fill a stripped presentation's holes with a route crossing the given
// darts' edges in order. delta = 0 picks eps (classical) or plus (virtual).
std::vector<CrossingId> apply_routed(
    LinkPresentation& q, const Pass& ps, const std::vector<Dart>& route_darts,
    Kind kind = Kind::classical, int delta = 0,
    const std::vector<std::string>* names = nullptr);

struct ReplacementResult {
  LinkPresentation p;
  int m = 0;
  int spawned = 0;
  std::vector<std::pair<EdgeId, int>> healed;
  std::vector<CrossingId> ys;
};

ReplacementResult apply_pass_replacement(
    const LinkPresentation& p, const Pass& ps,
    const std::vector<Dart>& route_darts, Kind kind = Kind::classical,
    int delta = 0, const std::vector<std::string>* names = nullptr);

// Replay form: route given as end-pair strings resolved in the stripped
// presentation.
ReplacementResult apply_pass_replacement(
    const LinkPresentation& p, const Pass& ps,
    const std::vector<std::string>& crossed, Kind kind = Kind::classical,
    int delta = 0, const std::vector<std::string>* names = nullptr);

// Dual of the stripped shadow: one node per skip-face, one arc per edge
// whose two sides lie on distinct faces, plus the two hole faces.
struct AdjacentGraph {
  LinkPresentation stripped;
  int spawned = 0;
  std::vector<std::pair<EdgeId, int>> healed;
  std::vector<Face> faces;
  std::map<Dart, int> where;
  std::vector<std::vector<std::pair<int, Dart>>> adj;
  int f_x = -1, f_y = -1;
};

AdjacentGraph build_adjacent_graph(const LinkPresentation& p, const Pass& ps);

// Breadth-first route between the hole faces; ties broken toward the
// lexicographically smallest (face id, dart) sequence. nullopt when the
// stripped shadow leaves the holes in different components.
std::optional<std::vector<Dart>> shortest_route(const AdjacentGraph& g);

enum class ReplacementClass { short_route, equal_route, long_route };

ReplacementClass classify_replacement(int k, int m);

// Reroute edge e around crossing z, crossing all four of z's edges.
// Equivalent to two parallel-edge insertions and a triangle slide.
LinkPresentation replace_edge_surrounding(const LinkPresentation& p, EdgeId e,
                                          CrossingId z, int eps = plus_pole,
                                          Kind kind = Kind::classical);

}  // namespace linkpres
