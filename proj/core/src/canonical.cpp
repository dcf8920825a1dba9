#include "linkpres/canonical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace linkpres {

namespace {

void emit(std::string& out, int v) {
  // byte stream alphabet: 1/2/3 crossing-visit codes, 0xFF new-crossing
  // marker, revisit codes from 10 up (0xFA escapes to two bytes)
  if (v < 0xFA) {
    out.push_back(static_cast<char>(v));
  } else {
    out.push_back(static_cast<char>(0xFA));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>(v & 0xFF));
  }
}

std::string traverse(const LinkPresentation& p, Dart d0) {
  // discovery index and entry dart per crossing; revisits are encoded by
  // (index, rotation offset from the entry dart), which is what makes the
  // code independent of stored rotation phase and of all ids
  struct Seen {
    int index;
    Dart entry;
  };
  std::map<CrossingId, Seen> seen;
  std::vector<std::pair<CrossingId, Dart>> order;
  std::string out;

  auto visit = [&](Dart dart) {
    EndRef r = p.end_of(dart);
    const Crossing& info = p.crossings.at(r.c);
    seen[r.c] = {static_cast<int>(seen.size()), dart};
    order.emplace_back(r.c, dart);
    if (info.kind == Kind::classical)
      out.push_back(r.pole == plus_pole ? 1 : 2);
    else
      out.push_back(3);
  };

  visit(d0);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    auto [c, entry] = order[qi];
    const auto& rot = p.crossings.at(c).rot;
    size_t i0 = static_cast<size_t>(
        std::find(rot.begin(), rot.end(), entry) - rot.begin());
    for (size_t k = 0; k < 4; ++k) {
      Dart d = rot[(i0 + k) % 4];
      Dart far = LinkPresentation::other(d);
      CrossingId c2 = p.end_of(far).c;
      auto it = seen.find(c2);
      if (it == seen.end()) {
        visit(far);
        out.push_back(static_cast<char>(0xFF));
      } else {
        const auto& rot2 = p.crossings.at(c2).rot;
        auto pos = [&](Dart x) {
          return static_cast<int>(std::find(rot2.begin(), rot2.end(), x) -
                                  rot2.begin());
        };
        int off = ((pos(far) - pos(it->second.entry)) % 4 + 4) % 4;
        emit(out, it->second.index * 4 + off + 10);
      }
    }
  }
  return out;
}

std::string canon_component(const LinkPresentation& p,
                            const std::vector<CrossingId>& comp) {
  std::set<CrossingId> cs(comp.begin(), comp.end());
  std::string best;
  bool first = true;
  for (const auto& [e, ed] : p.edges) {
    for (std::int8_t side : {0, 1}) {
      Dart d{e, side};
      if (!cs.count(p.end_of(d).c)) continue;
      std::string code = traverse(p, d);
      if (first || code < best) {
        best = std::move(code);
        first = false;
      }
    }
  }
  return best;
}

}  // namespace

std::string canonical_code(const LinkPresentation& p) {
  std::vector<std::string> codes;
  for (const auto& comp : components(p)) codes.push_back(canon_component(p, comp));
  std::sort(codes.begin(), codes.end());
  // length-prefix each component so the concatenation stays injective
  std::string out;
  for (const auto& c : codes) {
    size_t n = c.size();
    for (int s = 24; s >= 0; s -= 8)
      out.push_back(static_cast<char>((n >> s) & 0xFF));
    out += c;
  }
  return out;
}

bool is_isomorphic(const LinkPresentation& p, const LinkPresentation& q) {
  return canonical_code(p) == canonical_code(q);
}

std::string code8(const std::string& code) {
  static const char* hexd = "0123456789abcdef";
  std::string out;
  for (size_t i = 0; i < 8 && i < code.size(); ++i) {
    unsigned char b = static_cast<unsigned char>(code[i]);
    out.push_back(hexd[b >> 4]);
    out.push_back(hexd[b & 0xF]);
  }
  return out;
}

}  // namespace linkpres
