#pragma once

// Color-preserving (optionally color-permuting) isomorphism and canonical codes.
//
// A connected gem is rigid: once the image of one vertex is fixed, a
// color-preserving isomorphism is determined by following equal colors. Both
// routes below exploit this, but independently: the search in are_isomorphic()
// fixes candidate images directly, the canonical code minimizes over
// breadth-first relabelings.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct IsoCertificate {
  std::vector<Vertex> vertex_map;  // vertex of graph 1 -> vertex of graph 2
  std::vector<int> color_map;      // color of graph 1 -> color of graph 2
};

/// True iff applying the certificate to g1 reproduces g2 exactly.
inline bool verify_certificate(const ColoredGraph& g1, const ColoredGraph& g2, const IsoCertificate& cert) {
  if (g1.order() != g2.order() || g1.num_colors() != g2.num_colors()) return false;
  if (cert.vertex_map.size() != g1.order()) return false;
  if (cert.color_map.size() != static_cast<std::size_t>(g1.num_colors())) return false;
  std::vector<bool> seen(g1.order(), false);
  for (Vertex w : cert.vertex_map) {
    if (w >= g1.order() || seen[w]) return false;
    seen[w] = true;
  }
  std::vector<bool> seen_color(static_cast<std::size_t>(g1.num_colors()), false);
  for (int c : cert.color_map) {
    if (c < 0 || c >= g1.num_colors() || seen_color[static_cast<std::size_t>(c)]) return false;
    seen_color[static_cast<std::size_t>(c)] = true;
  }
  for (Color c = 0; c < g1.num_colors(); ++c) {
    const int c2 = cert.color_map[static_cast<std::size_t>(c)];
    for (Vertex v = 0; v < g1.order(); ++v) {
      if (g2.neighbor(c2, cert.vertex_map[v]) != cert.vertex_map[g1.neighbor(c, v)]) return false;
    }
  }
  return true;
}

namespace detail {

inline std::vector<int> identity_colors(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Per-vertex signature: length of the bicolored cycle through the vertex for every pair i<j.
inline std::vector<std::vector<std::uint32_t>> cycle_signatures(const ColoredGraph& g) {
  const auto pairs = color_combinations(g.num_colors(), 2);
  std::vector<std::vector<std::uint32_t>> sig(g.order(), std::vector<std::uint32_t>(pairs.size()));
  std::vector<std::uint32_t> label;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const std::size_t k = label_components(g, pairs[p], label);
    std::vector<std::uint32_t> size(k, 0);
    for (Vertex v = 0; v < g.order(); ++v) ++size[label[v]];
    for (Vertex v = 0; v < g.order(); ++v) sig[v][p] = size[label[v]];
  }
  return sig;
}

class ColorPreservingSearch {
 public:
  ColorPreservingSearch(const ColoredGraph& a, const ColoredGraph& b)
      : a_(a), b_(b), sig_a_(cycle_signatures(a)), sig_b_(cycle_signatures(b)) {
    comps_a_ = residue_components(a, ColorSubset::all(a.num_colors()));
    comps_b_ = residue_components(b, ColorSubset::all(b.num_colors()));
  }

  std::optional<std::vector<Vertex>> run() {
    if (a_.order() != b_.order() || a_.num_colors() != b_.num_colors()) return std::nullopt;
    if (comps_a_.size() != comps_b_.size()) return std::nullopt;
    map_.assign(a_.order(), kUnset);
    inverse_.assign(b_.order(), kUnset);
    used_.assign(comps_b_.size(), false);
    if (!match_component(0)) return std::nullopt;
    return map_;
  }

 private:
  static constexpr Vertex kUnset = ~Vertex{0};

  bool match_component(std::size_t i) {
    if (i == comps_a_.size()) return true;
    const auto& comp = comps_a_[i];
    const Vertex base = comp.front();
    for (std::size_t j = 0; j < comps_b_.size(); ++j) {
      if (used_[j] || comps_b_[j].size() != comp.size()) continue;
      for (Vertex w : comps_b_[j]) {
        if (sig_a_[base] != sig_b_[w]) continue;
        if (!propagate(base, w)) {
          undo(comp);
          continue;
        }
        used_[j] = true;
        if (match_component(i + 1)) return true;
        used_[j] = false;
        undo(comp);
      }
    }
    return false;
  }

  bool propagate(Vertex base, Vertex image) {
    std::vector<Vertex> queue{base};
    map_[base] = image;
    inverse_[image] = base;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Color c = 0; c < a_.num_colors(); ++c) {
        const Vertex va = a_.neighbor(c, v);
        const Vertex vb = b_.neighbor(c, map_[v]);
        if (map_[va] == kUnset) {
          if (inverse_[vb] != kUnset || sig_a_[va] != sig_b_[vb]) return false;
          map_[va] = vb;
          inverse_[vb] = va;
          queue.push_back(va);
        } else if (map_[va] != vb) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(const std::vector<Vertex>& comp) {
    for (Vertex v : comp) {
      if (map_[v] != kUnset) {
        inverse_[map_[v]] = kUnset;
        map_[v] = kUnset;
      }
    }
  }

  const ColoredGraph& a_;
  const ColoredGraph& b_;
  std::vector<std::vector<std::uint32_t>> sig_a_;
  std::vector<std::vector<std::uint32_t>> sig_b_;
  std::vector<std::vector<Vertex>> comps_a_;
  std::vector<std::vector<Vertex>> comps_b_;
  std::vector<Vertex> map_;
  std::vector<Vertex> inverse_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Finds an isomorphism g1 -> g2, color-preserving unless allow_color_permutation is set.
inline std::optional<IsoCertificate> are_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2,
                                                    bool allow_color_permutation = false) {
  if (g1.order() != g2.order() || g1.num_colors() != g2.num_colors()) return std::nullopt;
  auto perm = detail::identity_colors(g1.num_colors());
  std::vector<Vertex> id(g1.order());
  std::iota(id.begin(), id.end(), Vertex{0});
  do {
    const ColoredGraph recolored = relabel(g1, id, perm);
    if (auto vmap = detail::ColorPreservingSearch(recolored, g2).run()) {
      return IsoCertificate{std::move(*vmap), perm};
    }
  } while (allow_color_permutation && std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

/// Canonical representative together with the labeling that produces it:
/// graph == relabel(input, labeling, color_map).
struct CanonicalForm {
  ColoredGraph graph;
  std::vector<Vertex> labeling;
  std::vector<int> color_map;
};

namespace detail {

struct ComponentCode {
  std::vector<Vertex> code;      // row-major: for each new vertex, its new neighbor per color
  std::vector<Vertex> order;     // old vertex at each new position
};

inline ComponentCode bfs_code(const ColoredGraph& g, Vertex start, std::vector<Vertex>& label) {
  constexpr Vertex kUnset = ~Vertex{0};
  ComponentCode out;
  out.order.push_back(start);
  label[start] = 0;
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    const Vertex v = out.order[head];
    for (Color c = 0; c < g.num_colors(); ++c) {
      const Vertex w = g.neighbor(c, v);
      if (label[w] == kUnset) {
        label[w] = static_cast<Vertex>(out.order.size());
        out.order.push_back(w);
      }
    }
  }
  out.code.reserve(out.order.size() * static_cast<std::size_t>(g.num_colors()));
  for (Vertex v : out.order) {
    for (Color c = 0; c < g.num_colors(); ++c) out.code.push_back(label[g.neighbor(c, v)]);
  }
  for (Vertex v : out.order) label[v] = kUnset;
  return out;
}

inline bool code_less(const ComponentCode& x, const ComponentCode& y) {
  if (x.order.size() != y.order.size()) return x.order.size() < y.order.size();
  return x.code < y.code;
}

inline CanonicalForm color_preserving_canonical(const ColoredGraph& g) {
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<Vertex> label(g.order(), kUnset);
  std::vector<ComponentCode> best;
  for (const auto& comp : residue_components(g, ColorSubset::all(g.num_colors()))) {
    std::optional<ComponentCode> comp_best;
    for (Vertex s : comp) {
      ComponentCode cand = bfs_code(g, s, label);
      if (!comp_best || code_less(cand, *comp_best)) comp_best = std::move(cand);
    }
    best.push_back(std::move(*comp_best));
  }
  std::stable_sort(best.begin(), best.end(), code_less);
  std::vector<Vertex> labeling(g.order());
  Vertex offset = 0;
  for (const auto& cc : best) {
    for (std::size_t i = 0; i < cc.order.size(); ++i) labeling[cc.order[i]] = offset + static_cast<Vertex>(i);
    offset += static_cast<Vertex>(cc.order.size());
  }
  auto colors = identity_colors(g.num_colors());
  ColoredGraph canon = relabel(g, labeling, colors);
  return {std::move(canon), std::move(labeling), std::move(colors)};
}

inline bool graph_less(const ColoredGraph& a, const ColoredGraph& b) {
  for (Color c = 0; c < a.num_colors(); ++c) {
    auto x = a.involution(c);
    auto y = b.involution(c);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) {
      return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }
  }
  return false;
}

inline void put_u32(std::string& out, std::uint32_t x) {
  out.push_back(static_cast<char>((x >> 24) & 0xff));
  out.push_back(static_cast<char>((x >> 16) & 0xff));
  out.push_back(static_cast<char>((x >> 8) & 0xff));
  out.push_back(static_cast<char>(x & 0xff));
}

}  // namespace detail

/// Canonical relabeling. Two graphs have equal canonical graphs iff they are
/// isomorphic under the chosen mode.
inline CanonicalForm canonical_form(const ColoredGraph& g, bool allow_color_permutation = false) {
  if (!allow_color_permutation) return detail::color_preserving_canonical(g);
  auto perm = detail::identity_colors(g.num_colors());
  std::vector<Vertex> id(g.order());
  std::iota(id.begin(), id.end(), Vertex{0});
  std::optional<CanonicalForm> best;
  do {
    CanonicalForm cand = detail::color_preserving_canonical(relabel(g, id, perm));
    if (!best || detail::graph_less(cand.graph, best->graph)) {
      cand.color_map = perm;
      best = std::move(cand);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::move(*best);
}

/// Byte encoding of a graph as labeled: color count (1 byte), order (u32 big-endian),
/// then the involution of each color in order, each entry u32 big-endian.
/// Byte-wise comparison orders encodings by color count, then order.
inline std::string encode(const ColoredGraph& g) {
  std::string out;
  out.reserve(5 + 4 * static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(g.num_colors()));
  out.push_back(static_cast<char>(g.num_colors()));
  detail::put_u32(out, g.order());
  for (Color c = 0; c < g.num_colors(); ++c) {
    for (Vertex w : g.involution(c)) detail::put_u32(out, w);
  }
  return out;
}

/// Encoding of the canonical graph; equal iff the graphs are isomorphic under the chosen mode.
inline std::string canonical_code(const ColoredGraph& g, bool allow_color_permutation = false) {
  return encode(canonical_form(g, allow_color_permutation).graph);
}

/// Lowercase hex rendering of a code, for reports.
inline std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char ch : bytes) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 0xf]);
  }
  return out;
}

}  // namespace gemkit
