#pragma once

// Edge-colored regular multigraphs (gems) stored as one perfect matching per color.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gemkit/error.hpp"

namespace gemkit {

using Vertex = std::uint32_t;
using Color = int;

inline constexpr int kMaxColors = 32;

/// Set of colors, stored as a bitmask over 0..kMaxColors-1.
class ColorSubset {
 public:
  constexpr ColorSubset() = default;
  constexpr explicit ColorSubset(std::uint32_t bits) : bits_(bits) {}
  ColorSubset(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  static constexpr ColorSubset all(int num_colors) {
    return ColorSubset(num_colors >= 32 ? ~0u : ((1u << num_colors) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Color c) const { return c >= 0 && c < kMaxColors && ((bits_ >> c) & 1u); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  void insert(Color c) {
    if (c < 0 || c >= kMaxColors) throw GemError(ErrorCode::InvalidColor, "color " + std::to_string(c));
    bits_ |= 1u << c;
  }
  constexpr ColorSubset without(Color c) const { return ColorSubset(bits_ & ~(1u << c)); }

  /// Highest color plus one (0 for the empty set).
  constexpr int span_end() const { return 32 - std::countl_zero(bits_); }

  std::vector<Color> colors() const {
    std::vector<Color> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Colors concatenated as digits ("012"); comma-separated when any color exceeds 9.
  std::string label() const {
    std::string out;
    const auto cs = colors();
    const bool wide = !cs.empty() && cs.back() > 9;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (wide && i > 0) out += ',';
      out += std::to_string(cs[i]);
    }
    return out;
  }

  friend constexpr bool operator==(ColorSubset, ColorSubset) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// All k-subsets of {0..n-1} in lexicographic order of their sorted elements.
inline std::vector<ColorSubset> color_combinations(int n, int k) {
  std::vector<ColorSubset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    ColorSubset s;
    for (int c : idx) s.insert(c);
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

/// Unvalidated graph description: color count, order and one pair list per color.
struct RawGraph {
  long long colors = 0;
  long long order = 0;
  std::vector<std::vector<std::pair<long long, long long>>> matchings;
};

/// A (d+1)-regular properly edge-colored multigraph without loops.
/// Color c is a fixed-point-free involution on the vertices 0..order-1.
/// Instances are immutable and always valid.
class ColoredGraph {
 public:
  /// Builds a graph from involution arrays, one per color.
  static ColoredGraph from_involutions(int num_colors, std::vector<std::vector<Vertex>> involutions) {
    if (num_colors < 2 || num_colors > kMaxColors) {
      throw GemError(ErrorCode::ColorCountMismatch, "need 2.." + std::to_string(kMaxColors) + " colors, got " +
                                                        std::to_string(num_colors));
    }
    if (involutions.size() != static_cast<std::size_t>(num_colors)) {
      throw GemError(ErrorCode::ColorCountMismatch, "declared " + std::to_string(num_colors) + " colors but " +
                                                        std::to_string(involutions.size()) + " matchings given");
    }
    const std::size_t n = involutions.front().size();
    if (n == 0 || n % 2 != 0) throw GemError(ErrorCode::OddOrder, "order " + std::to_string(n));
    for (std::size_t c = 0; c < involutions.size(); ++c) {
      const auto& inv = involutions[c];
      if (inv.size() != n) throw GemError(ErrorCode::NotInvolution, "color " + std::to_string(c) + " has wrong length");
      for (std::size_t v = 0; v < n; ++v) {
        const Vertex w = inv[v];
        if (w >= n) throw GemError(ErrorCode::InvalidVertex, "vertex " + std::to_string(w) + " out of range");
        if (w == v) {
          throw GemError(ErrorCode::LoopEdge,
                         "color " + std::to_string(c) + " fixes vertex " + std::to_string(v));
        }
        if (inv[w] != v) {
          throw GemError(ErrorCode::NotInvolution,
                         "color " + std::to_string(c) + " is not an involution at vertex " + std::to_string(v));
        }
      }
    }
    ColoredGraph g;
    g.num_colors_ = num_colors;
    g.order_ = static_cast<Vertex>(n);
    g.flat_.reserve(n * involutions.size());
    for (const auto& inv : involutions) g.flat_.insert(g.flat_.end(), inv.begin(), inv.end());
    return g;
  }

  int num_colors() const { return num_colors_; }
  /// d, where colors are 0..d.
  int dimension() const { return num_colors_ - 1; }
  Vertex order() const { return order_; }

  Vertex neighbor(Color c, Vertex v) const { return flat_[static_cast<std::size_t>(c) * order_ + v]; }

  std::span<const Vertex> involution(Color c) const {
    return {flat_.data() + static_cast<std::size_t>(c) * order_, order_};
  }

  /// Edges of color c as pairs (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> matching_pairs(Color c) const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(order_ / 2);
    for (Vertex v = 0; v < order_; ++v) {
      const Vertex w = neighbor(c, v);
      if (v < w) out.emplace_back(v, w);
    }
    return out;
  }

  std::vector<std::vector<Vertex>> involutions() const {
    std::vector<std::vector<Vertex>> out;
    for (Color c = 0; c < num_colors_; ++c) {
      auto s = involution(c);
      out.emplace_back(s.begin(), s.end());
    }
    return out;
  }

  void check_color(Color c) const {
    if (c < 0 || c >= num_colors_) throw GemError(ErrorCode::InvalidColor, "color " + std::to_string(c));
  }
  void check_colors(ColorSubset b) const {
    if (b.span_end() > num_colors_) throw GemError(ErrorCode::InvalidColor, "subset {" + b.label() + "}");
  }
  void check_vertex(long long v) const {
    if (v < 0 || v >= static_cast<long long>(order_)) {
      throw GemError(ErrorCode::InvalidVertex, "vertex " + std::to_string(v));
    }
  }

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  ColoredGraph() = default;

  int num_colors_ = 0;
  Vertex order_ = 0;
  std::vector<Vertex> flat_;  // color-major involution arrays
};

/// Validates a pair-list description.
inline ColoredGraph validate(const RawGraph& raw) {
  if (raw.colors < 2 || raw.colors > kMaxColors) {
    throw GemError(ErrorCode::ColorCountMismatch, "color count " + std::to_string(raw.colors));
  }
  if (raw.matchings.size() != static_cast<std::size_t>(raw.colors)) {
    throw GemError(ErrorCode::ColorCountMismatch, "declared " + std::to_string(raw.colors) + " colors but " +
                                                      std::to_string(raw.matchings.size()) + " matchings given");
  }
  if (raw.order < 2 || raw.order % 2 != 0) throw GemError(ErrorCode::OddOrder, "order " + std::to_string(raw.order));
  const auto n = static_cast<std::size_t>(raw.order);
  constexpr Vertex kUnset = ~Vertex{0};
  std::vector<std::vector<Vertex>> inv(raw.matchings.size(), std::vector<Vertex>(n, kUnset));
  for (std::size_t c = 0; c < raw.matchings.size(); ++c) {
    for (auto [u, v] : raw.matchings[c]) {
      if (u < 0 || v < 0 || u >= raw.order || v >= raw.order) {
        throw GemError(ErrorCode::InvalidVertex, "edge " + std::to_string(u) + "-" + std::to_string(v));
      }
      if (u == v) throw GemError(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
      auto& iu = inv[c][static_cast<std::size_t>(u)];
      auto& iv = inv[c][static_cast<std::size_t>(v)];
      if (iu != kUnset || iv != kUnset) {
        throw GemError(ErrorCode::NotInvolution, "color " + std::to_string(c) + " covers a vertex twice");
      }
      iu = static_cast<Vertex>(v);
      iv = static_cast<Vertex>(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (inv[c][v] == kUnset) {
        throw GemError(ErrorCode::NotInvolution,
                       "color " + std::to_string(c) + " leaves vertex " + std::to_string(v) + " unmatched");
      }
    }
  }
  return ColoredGraph::from_involutions(static_cast<int>(raw.colors), std::move(inv));
}

namespace detail {

// Labels each vertex with the index of its B-residue component (components numbered by least vertex).
inline std::size_t label_components(const ColoredGraph& g, ColorSubset b, std::vector<std::uint32_t>& label) {
  const Vertex n = g.order();
  constexpr std::uint32_t kNone = ~std::uint32_t{0};
  label.assign(n, kNone);
  const auto colors = b.colors();
  std::vector<Vertex> stack;
  std::uint32_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kNone) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c : colors) {
        const Vertex w = g.neighbor(c, v);
        if (label[w] == kNone) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

}  // namespace detail

/// Connected components of the residue keeping only colors in b, each sorted,
/// listed by least vertex.
inline std::vector<std::vector<Vertex>> residue_components(const ColoredGraph& g, ColorSubset b) {
  g.check_colors(b);
  std::vector<std::uint32_t> label;
  const std::size_t k = detail::label_components(g, b, label);
  std::vector<std::vector<Vertex>> out(k);
  for (Vertex v = 0; v < g.order(); ++v) out[label[v]].push_back(v);
  return out;
}

/// Number of connected components of the b-residue (g_{ij}, g_{ijk}, ...).
inline long g_count(const ColoredGraph& g, ColorSubset b) {
  g.check_colors(b);
  std::vector<std::uint32_t> label;
  return static_cast<long>(detail::label_components(g, b, label));
}

inline bool is_connected(const ColoredGraph& g) { return g_count(g, ColorSubset::all(g.num_colors())) == 1; }

/// Two-coloring of the vertices (0/1 per vertex) when the underlying multigraph is bipartite.
/// Disconnected graphs are handled component by component; each component's least vertex gets side 0.
inline std::optional<std::vector<std::uint8_t>> bipartition(const ColoredGraph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> side(g.order(), kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != kUnset) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Color c = 0; c < g.num_colors(); ++c) {
        const Vertex w = g.neighbor(c, v);
        if (side[w] == kUnset) {
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

inline bool is_bipartite(const ColoredGraph& g) { return bipartition(g).has_value(); }

/// True iff every residue on all colors but one is connected.
inline bool is_contracted(const ColoredGraph& g) {
  const auto all = ColorSubset::all(g.num_colors());
  for (Color c = 0; c < g.num_colors(); ++c) {
    if (g_count(g, all.without(c)) != 1) return false;
  }
  return true;
}

/// Graph connected sum: removes v1 from g1 and v2 from g2 and welds the hanging
/// edges of equal color. Output vertices: g1's vertices other than v1 in order,
/// then g2's vertices other than v2 in order.
inline ColoredGraph connected_sum(const ColoredGraph& g1, long long v1, const ColoredGraph& g2, long long v2) {
  if (g1.num_colors() != g2.num_colors()) {
    throw GemError(ErrorCode::ColorCountMismatch, "connected sum of graphs with " + std::to_string(g1.num_colors()) +
                                                      " and " + std::to_string(g2.num_colors()) + " colors");
  }
  g1.check_vertex(v1);
  g2.check_vertex(v2);
  const Vertex n1 = g1.order();
  const Vertex n2 = g2.order();
  const auto a = static_cast<Vertex>(v1);
  const auto b = static_cast<Vertex>(v2);
  const Vertex offset = n1 - 1;
  auto map1 = [a](Vertex v) { return v < a ? v : v - 1; };
  auto map2 = [b, offset](Vertex v) { return offset + (v < b ? v : v - 1); };

  std::vector<std::vector<Vertex>> inv(static_cast<std::size_t>(g1.num_colors()),
                                       std::vector<Vertex>(n1 + n2 - 2));
  for (Color c = 0; c < g1.num_colors(); ++c) {
    auto& out = inv[static_cast<std::size_t>(c)];
    const Vertex hang1 = g1.neighbor(c, a);
    const Vertex hang2 = g2.neighbor(c, b);
    for (Vertex v = 0; v < n1; ++v) {
      if (v == a) continue;
      out[map1(v)] = v == hang1 ? map2(hang2) : map1(g1.neighbor(c, v));
    }
    for (Vertex v = 0; v < n2; ++v) {
      if (v == b) continue;
      out[map2(v)] = v == hang2 ? map1(hang1) : map2(g2.neighbor(c, v));
    }
  }
  return ColoredGraph::from_involutions(g1.num_colors(), std::move(inv));
}

/// Disjoint union; g2's vertices are shifted by g1.order().
inline ColoredGraph disjoint_union(const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.num_colors() != g2.num_colors()) throw GemError(ErrorCode::ColorCountMismatch, "disjoint union");
  std::vector<std::vector<Vertex>> inv;
  for (Color c = 0; c < g1.num_colors(); ++c) {
    std::vector<Vertex> row(g1.involution(c).begin(), g1.involution(c).end());
    for (Vertex w : g2.involution(c)) row.push_back(w + g1.order());
    inv.push_back(std::move(row));
  }
  return ColoredGraph::from_involutions(g1.num_colors(), std::move(inv));
}

/// Image of g under a vertex bijection and a color permutation:
/// result.neighbor(color_map[c], vertex_map[v]) == vertex_map[g.neighbor(c, v)].
inline ColoredGraph relabel(const ColoredGraph& g, std::span<const Vertex> vertex_map, std::span<const int> color_map) {
  if (vertex_map.size() != g.order()) throw GemError(ErrorCode::InvalidVertex, "vertex map has wrong size");
  if (color_map.size() != static_cast<std::size_t>(g.num_colors())) {
    throw GemError(ErrorCode::ColorCountMismatch, "color map has wrong size");
  }
  std::vector<std::vector<Vertex>> inv(static_cast<std::size_t>(g.num_colors()), std::vector<Vertex>(g.order()));
  for (Color c = 0; c < g.num_colors(); ++c) {
    const auto target = static_cast<std::size_t>(color_map[static_cast<std::size_t>(c)]);
    if (target >= inv.size()) throw GemError(ErrorCode::InvalidColor, "color map target out of range");
    for (Vertex v = 0; v < g.order(); ++v) inv[target][vertex_map[v]] = vertex_map[g.neighbor(c, v)];
  }
  return ColoredGraph::from_involutions(g.num_colors(), std::move(inv));
}

/// The residue on the colors of b, as a graph with colors renumbered 0..|b|-1 in increasing order.
inline ColoredGraph restrict_colors(const ColoredGraph& g, ColorSubset b) {
  g.check_colors(b);
  std::vector<std::vector<Vertex>> inv;
  for (Color c : b.colors()) {
    auto s = g.involution(c);
    inv.emplace_back(s.begin(), s.end());
  }
  return ColoredGraph::from_involutions(static_cast<int>(inv.size()), std::move(inv));
}

}  // namespace gemkit
