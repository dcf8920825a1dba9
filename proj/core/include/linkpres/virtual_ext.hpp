#pragma once

#include <optional>
#include <variant>

#include "linkpres/pass_engine.hpp"

namespace linkpres {

// A U-move site violated its kind constraint (wrong mix of classical and
// virtual crossings, or the wrong chirality for the mixed triangle).
class KindError : public MoveError {
 public:
  using MoveError::MoveError;
};

enum class UMove { U0, U1, U2, U3, U4 };

// U0 reuses the parallel-insertion site, U1 the clasp site, U2 the curl
// site, U3/U4 the triangle site.
using USite = std::variant<Omega0Site, Omega1Site, Omega2Site, TriangleSite>;

// Per-move predicate over crossing kinds and pole signs. Structural
// preconditions (site staleness) are not checked here.
bool kind_constraint(const LinkPresentation& p, UMove move, const USite& site,
                     std::array<Kind, 2> kinds = {Kind::classical,
                                                  Kind::classical});

// kinds applies to U0 only (the two inserted crossings; must agree).
LinkPresentation apply_u_move(const LinkPresentation& p, UMove move,
                              const USite& site,
                              std::array<Kind, 2> kinds = {Kind::classical,
                                                           Kind::classical});

struct Overlay {
  LinkPresentation p;
  std::set<EdgeId> curve;       // edge cycle: old pass edges + chords
  std::set<CrossingId> on_curve;
};

// Draw the replacement curve into the unstripped presentation: the route as
// subdivision crossings joined by chord edges, closed through the old pass
// edges. Endpoint rotations grow to five slots; the overlay is only ever
// face-traced. The stripped hole face merges several original corners, so
// each chord must live inside a single original face; when the route
// threads the freed corridor no such drawing exists and nullopt is
// returned.
std::optional<Overlay> curve_overlay(const LinkPresentation& p, const Pass& ps,
                                     const std::vector<Dart>& route_darts);

// Kind gate for rerouting a classical-interior pass in a mixed
// presentation: permitted when every crossing strictly on one side of the
// closed route+pass curve is classical. A route through the healed corridor
// has no overlay drawing and is refused.
bool virtual_reroute_allowed(const LinkPresentation& p, const Pass& ps,
                             const std::vector<Dart>& route_darts,
                             const std::vector<std::pair<EdgeId, int>>& healed);

ReplacementResult apply_virtual_pass_replacement(
    const LinkPresentation& p, const Pass& ps,
    const std::vector<Dart>& route_darts, Kind new_kind);

// Exchange the pole roles at crossing c (rotation kept; only edge-end poles
// flip). For a virtual crossing this is an isomorphism of the diagram.
LinkPresentation pole_swap(const LinkPresentation& p, CrossingId c);

}  // namespace linkpres
