#pragma once

#include <string>

#include "linkpres/model.hpp"

namespace linkpres {

// Relabeling-invariant identity of a presentation: the lexicographically
// smallest byte string produced by a deterministic rotation-walk traversal
// started from every dart of every component. Virtual crossings contribute a
// pole-blind byte, which realizes the pole-swap freedom virtual crossings
// have (swapping a virtual crossing's poles does not change the code).
// Edge ids, crossing ids, and names never enter the code.
std::string canonical_code(const LinkPresentation& p);

bool is_isomorphic(const LinkPresentation& p, const LinkPresentation& q);

// First 8 bytes of the code, hex-encoded (trace records use this to spot
// replay divergence early).
std::string code8(const std::string& code);

}  // namespace linkpres
