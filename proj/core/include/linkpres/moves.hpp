#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkpres/model.hpp"

namespace linkpres {

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- rewrite sentinels ----
// Rotation slots may temporarily hold non-edge sentinels while a rewrite is
// in flight (stripped pass endpoints, pending route attachments). They never
// survive into a validated presentation.

inline constexpr std::int8_t hole_side = 2;  // freed endpoint slot, e packs the EndRef
inline constexpr std::int8_t mark_side = 3;  // transient placeholder

inline Dart hole_dart(EndRef r) {
  return {r.c * 2 + (r.pole == plus_pole ? 0 : 1), hole_side};
}
inline bool is_hole(Dart d) { return d.side >= hole_side; }

inline constexpr Dart route_in_mark{-1, mark_side};
inline constexpr Dart route_out_mark{-2, mark_side};

// ---- move sites ----

// Insertion of two crossings across two co-facial edges (or twice into one
// edge when e_x == e_y, the nested clause). s is the pole sign the new
// crossings present to the chosen face.
struct Omega0Site {
  EdgeId e_x = -1;
  EdgeId e_y = -1;
  Face shared_face;
  int s = plus_pole;
};

// A clasp: crossings x, y joined by parallel edges (x,y) and (x-,y-).
struct Omega1Site {
  CrossingId x = -1;
  CrossingId y = -1;
  EdgeId e_plus = -1;   // the (x, y) edge (poles as found; plus/plus when classical)
  EdgeId e_minus = -1;  // the (x-, y-) partner
};

// A curl: loop edge e = (x, x-) whose removal keeps the component alive.
struct Omega2Site {
  CrossingId x = -1;
  EdgeId e = -1;
};

// A triangular face whose three corners are all transversal; stored in face
// orbit order.
struct TriangleSite {
  std::array<Dart, 3> darts{};
};

// ---- applications ----

struct Omega0Result {
  LinkPresentation p;
  CrossingId x = -1;  // the new crossing adjacent to e_x's surviving head
  CrossingId y = -1;
};

// kinds/names control the two inserted crossings (virtual insertion is the
// U0 move; the rewrite is identical). Throws MoveError when the edges are
// not co-facial on the given face or a requested name already exists.
Omega0Result apply_omega0(const LinkPresentation& p, const Omega0Site& site,
                          std::array<Kind, 2> kinds = {Kind::classical,
                                                       Kind::classical},
                          const std::array<std::string, 2>* names = nullptr);

// Deleting the clasp heals the two strands through it; a strand living
// entirely on {x, y} spawns a trivial component. Returns the presentation
// and the number of spawned components. Throws MoveError on a stale site.
struct Omega1Result {
  LinkPresentation p;
  int spawned = 0;
};
Omega1Result apply_omega1(const LinkPresentation& p, const Omega1Site& site);

LinkPresentation apply_omega2(const LinkPresentation& p,
                              const Omega2Site& site);

// Triangle slide: at both ends of each triangle edge the outer dart (the
// non-triangle dart at the same pole) jumps to the opposite end. V, E, F are
// all preserved. Throws MoveError unless the site is currently legal for the
// classical calculus; the kind-aware gates live in virtual_ext.
LinkPresentation apply_omega3(const LinkPresentation& p,
                              const TriangleSite& site);

namespace detail {
// The ungated slide shared by apply_omega3 and the U3/U4 appliers.
LinkPresentation triangle_slide(const LinkPresentation& p,
                                const std::array<Dart, 3>& face);
}  // namespace detail

// ---- site enumeration ----

// virtual_mode widens the gates to the U calculus: U1 accepts all-virtual
// clasps (any poles), U2 accepts curls at virtual crossings, U3 adds
// all-virtual triangles, U4 adds mixed triangles with two virtual crossings
// where the face departs the classical crossing at its plus pole.
std::vector<Omega1Site> find_omega1_sites(const LinkPresentation& p,
                                          bool virtual_mode = false);
std::vector<Omega2Site> find_omega2_sites(const LinkPresentation& p,
                                          bool virtual_mode = false);
std::vector<TriangleSite> find_triangle_sites(const LinkPresentation& p,
                                              bool virtual_mode = false);

struct SiteLists {
  std::vector<Omega1Site> omega1;
  std::vector<Omega2Site> omega2;
  std::vector<TriangleSite> omega3;
};
SiteLists enumerate_sites(const LinkPresentation& p);

// ---- shared internals (also used by the pass engine) ----

void replace_slot(LinkPresentation& p, Dart old_d, Dart new_d);
CrossingId fresh_crossing(LinkPresentation& p, const std::string& name = "");

// Remove the crossings in U and their edges; each maximal dead run along a
// strand is healed by one new edge between the flanking slots, except runs
// flanked by keep_darts, whose slots become hole sentinels (pass stripping).
// healed records (new edge id, number of dead refs the heal spans). Strands
// entirely inside U spawn one trivial component each.
struct RemovalResult {
  LinkPresentation p;
  int spawned = 0;
  std::vector<std::pair<EdgeId, int>> healed;
};
RemovalResult remove_crossings(const LinkPresentation& p,
                               const std::set<CrossingId>& dead,
                               const std::set<Dart>& keep_darts = {});

// Rotation successors that treat hole sentinels as transparent, and the face
// orbits they induce (the faces of a stripped shadow).
Dart sigma_skip(const LinkPresentation& p, Dart d);
Dart sigma_skip_inv(const LinkPresentation& p, Dart d);
std::vector<Face> trace_faces_skip(const LinkPresentation& p);

}  // namespace linkpres
