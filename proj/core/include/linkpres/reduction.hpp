#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkpres/pass_engine.hpp"

namespace linkpres {

// One applied simplification step. params are op-specific tokens in the
// trace file format (io module); n_after and code8 pin the resulting state
// so a replay can verify itself line by line.
struct MoveRecord {
  std::string op;  // "omega2" | "omega1" | "factor" | "pass"
  std::vector<std::string> params;
  int n_after = 0;
  std::string code8;
};

enum class PassOrder { longest_first, shortest_first, shuffled };

struct ReduceConfig {
  long long budget = -1;  // equal-replacement cap N0; -1 means 10*n^2
  PassOrder pass_order = PassOrder::longest_first;
  unsigned seed = 0;      // used by PassOrder::shuffled only
  bool virtual_mode = false;
};

enum class Outcome { unlink, alternating, splitting, budget_exhausted };

const char* to_string(Outcome o);

struct ReductionReport {
  Outcome outcome = Outcome::budget_exhausted;
  LinkPresentation final_p;
  std::vector<MoveRecord> trace;
  std::map<std::string, int> stats;  // per-op counts
  long long explored = 0;            // equal replacements tried (N)
  double elapsed_seconds = 0.0;
};

// Articulation crossings of the shadow (loops ignored).
std::vector<CrossingId> cut_crossings(const LinkPresentation& p);

// Split a connected sum at cut crossing x: delete x and splice the two edge
// ends on each side together.
LinkPresentation apply_factor(const LinkPresentation& p, CrossingId x);

// Terminal-state test: unlink (no crossings, or every component is in the
// two-loop normal form), alternating (every strand's poles alternate), or
// splitting (shadow disconnected). nullopt when none of these hold yet.
std::optional<Outcome> classify_state(const LinkPresentation& p);

ReductionReport reduce(const LinkPresentation& p, const ReduceConfig& cfg = {});

}  // namespace linkpres
