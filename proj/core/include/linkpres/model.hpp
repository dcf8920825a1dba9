#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace linkpres {

// A link presentation is a rotation system over the marked 4-regular shadow:
// each crossing carries an anticlockwise cyclic order of the four incident
// edge ends, and each edge end attaches at either the plus (over) or minus
// (under) pole of its crossing. Virtual crossings carry the same structure
// but their two poles are interchangeable.

using CrossingId = int;
using EdgeId = int;

inline constexpr int plus_pole = 1;
inline constexpr int minus_pole = -1;

enum class Kind : std::uint8_t { classical, virtual_cross };

// x^r: a pole of a crossing.
struct EndRef {
  CrossingId c = -1;
  int pole = plus_pole;

  bool operator==(const EndRef&) const = default;
};

// Plus pole sorts before minus at the same crossing.
inline std::pair<int, int> ref_key(EndRef r) {
  return {r.c, r.pole == plus_pole ? 0 : 1};
}

inline bool ref_less(EndRef a, EndRef b) { return ref_key(a) < ref_key(b); }

// One of the two ends of an edge. side 0/1 are the edge's stored endpoints;
// larger side values are rewrite sentinels that never appear in a valid
// presentation (see moves.hpp).
struct Dart {
  EdgeId e = -1;
  std::int8_t side = 0;

  auto operator<=>(const Dart&) const = default;
};

struct Edge {
  EndRef ends[2];
};

struct Crossing {
  std::string name;
  Kind kind = Kind::classical;
  std::vector<Dart> rot;  // anticlockwise; exactly 4 slots when valid
};

using Face = std::vector<Dart>;     // orbit of the face successor
using Strand = std::vector<EndRef>; // cyclic pole walk of one curve

struct LinkPresentation {
  std::map<CrossingId, Crossing> crossings;
  std::map<EdgeId, Edge> edges;
  // Rendering hint only (the unbounded face): never part of equality,
  // isomorphism, or any move's semantics.
  std::optional<std::vector<EdgeId>> infinite_face;

  CrossingId next_crossing = 0;
  EdgeId next_edge = 0;

  // id -1 means take the next fresh id; explicit ids bump the fresh counter
  // past themselves so ids are never recycled.
  CrossingId add_crossing(std::string name, Kind kind = Kind::classical,
                          CrossingId id = -1);
  EdgeId add_edge(EndRef a, EndRef b, EdgeId id = -1);

  EndRef end_of(Dart d) const { return edges.at(d.e).ends[d.side]; }
  static Dart other(Dart d) { return {d.e, static_cast<std::int8_t>(1 - d.side)}; }

  int n_crossings() const { return static_cast<int>(crossings.size()); }
  int n_edges() const { return static_cast<int>(edges.size()); }
};

struct ValidationReport {
  bool ok = true;
  std::string violation; // first violated invariant, empty when ok
  std::string location;  // crossing/edge it was detected at

  explicit operator bool() const { return ok; }
};

// Structural checks in order: degree, attachment, pole counts, alternation,
// edge/crossing references, and per-component Euler formula V - E + F = 2
// (the planarity certificate).
ValidationReport validate(const LinkPresentation& p, bool check_euler = true);

// Next / previous dart anticlockwise around the crossing `d` attaches to.
Dart sigma(const LinkPresentation& p, Dart d);
Dart sigma_inv(const LinkPresentation& p, Dart d);

// Face successor. The orbit direction is calibrated once against the printed
// faces of the two six-crossing examples and frozen: the next departure dart
// of a face is sigma_inv of the reversal.
Dart face_next(const LinkPresentation& p, Dart d);

// Orbits of face_next over all darts, each dart in exactly one face.
// Deterministic: orbits start at their smallest unvisited dart.
std::vector<Face> trace_faces(const LinkPresentation& p);

// Curves of the diagram: enter a pole on one edge, leave on the other edge
// at the same pole. Every EndRef appears in exactly one strand.
// Enter `ref` via `via`; leave by the other dart at the same pole. Returns
// the next ref along the strand and the dart arriving there.
std::pair<EndRef, Dart> strand_next(const LinkPresentation& p, EndRef ref,
                                    Dart via);

std::vector<Strand> trace_strands(const LinkPresentation& p);

// EndRef l steps further along the strand containing `ref` (strands are
// cyclic, so any non-negative l is fine).
EndRef successor(const LinkPresentation& p, EndRef ref, int l);

// Connected components of the shadow, as sorted crossing-id sets.
std::vector<std::vector<CrossingId>> components(const LinkPresentation& p);

// Rename crossing and edge ids (used by isomorphism-invariance tests).
// rot_shift, when given, cyclically rotates each stored rotation list; that
// changes no semantics since rotations are cyclic.
LinkPresentation relabel(const LinkPresentation& p,
                         const std::map<CrossingId, CrossingId>& cmap,
                         const std::map<EdgeId, EdgeId>& emap,
                         const std::map<CrossingId, int>* rot_shift = nullptr);

// Lookup by display name; throws std::out_of_range when absent.
CrossingId by_name(const LinkPresentation& p, const std::string& name);

}  // namespace linkpres
