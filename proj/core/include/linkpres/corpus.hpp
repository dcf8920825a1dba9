#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "linkpres/pass_engine.hpp"

namespace linkpres {

// Fixtures are transcribed as data tables so a typo stays localizable.
// EdgeTable rows are (label, "name[+-] name[+-]"); a bare name means the
// plus pole. RotTable rows are (crossing, 4 edge labels anticlockwise);
// loop slots are disambiguated by alternation backtracking in build().
using EdgeTable = std::vector<std::pair<std::string, std::string>>;
using RotTable =
    std::vector<std::pair<std::string, std::array<std::string, 4>>>;

struct BuiltPresentation {
  LinkPresentation p;
  std::map<std::string, CrossingId> cmap;  // crossing name -> id
  std::map<std::string, EdgeId> emap;      // edge label -> id
};

BuiltPresentation build(const EdgeTable& edges, const RotTable& rots,
                        const std::map<std::string, Kind>& kinds = {});

// ("a11-") -> (crossing name, pole)
std::pair<std::string, int> parse_end_token(const std::string& s);

LinkPresentation make_O(const std::string& name = "o");
LinkPresentation make_trivial(int components);

std::pair<LinkPresentation, LinkPresentation> make_example31();
BuiltPresentation built_l1();
BuiltPresentation built_l2();

BuiltPresentation built_trefoil();

LinkPresentation make_thistlethwaite();
BuiltPresentation built_thistlethwaite();
BuiltPresentation built_kt_p1();  // printed state after the first replacement

LinkPresentation make_goeritz(int k, int l);
BuiltPresentation built_goeritz(int k, int l);
BuiltPresentation built_g00();
// printed intermediate states of the 11-crossing instance's replay
BuiltPresentation built_g_p1();
BuiltPresentation built_g_p2();
BuiltPresentation built_g_p3();
BuiltPresentation built_g_p4();
// printed end state of the family reduction, before the curl/clasp tail
BuiltPresentation built_goeritz_k1(int k, int l);

// One scripted pass replacement: endpoints by name+pole, new-crossing
// names, and the crossed edges listed by their current end pairs in route
// order.
struct ReplayStep {
  std::string x, y;
  std::vector<std::string> names;
  std::vector<std::string> crossed;
};

const std::vector<ReplayStep>& thistlethwaite_replays();
const std::vector<ReplayStep>& goeritz_replays();

// Find the unique maximal pass with the given named endpoints, oriented so
// the result's x matches the x argument (the engine reports canonical
// orientation but replay scripts walk a fixed way).
Pass locate_pass(const LinkPresentation& p, const std::string& x,
                 const std::string& y, int k = -1);

LinkPresentation apply_replay_step(const LinkPresentation& p,
                                   const ReplayStep& step);

// Random equivalence-preserving edits applied to O: parallel insertions
// (classical or virtual pairs) and occasional rerouted passes. The result
// is always a valid presentation of the unknot; same seed, same output.
LinkPresentation random_presentation(std::uint64_t seed, int op_count);

}  // namespace linkpres
