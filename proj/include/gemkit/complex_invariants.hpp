#pragma once

// Face vector and Euler characteristic of the colored triangulation K(G) dual
// to a gem, plus the 4-dimensional identities it must satisfy.

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/io.hpp"

namespace gemkit {

/// f[h] = number of h-simplices of K(G), h = 0..d.
struct FaceVector {
  std::vector<long> f;

  long operator[](std::size_t h) const { return f[h]; }
  std::size_t size() const { return f.size(); }
  friend bool operator==(const FaceVector&, const FaceVector&) = default;
};

inline void require_connected(const ColoredGraph& g) {
  if (!is_connected(g)) throw GemError(ErrorCode::Disconnected, "graph is not connected");
}

inline void require_contracted(const ColoredGraph& g) {
  if (!is_contracted(g)) throw GemError(ErrorCode::NotContracted, "graph is not contracted");
}

inline void require_dimension(const ColoredGraph& g, int d) {
  if (g.dimension() != d) {
    throw GemError(ErrorCode::WrongDimension,
                   "expected " + std::to_string(d + 1) + " colors, got " + std::to_string(g.num_colors()));
  }
}

/// (d-h)-simplices correspond to components of h-colored residues; the d-simplices are the vertices.
inline FaceVector face_vector(const ColoredGraph& g) {
  require_connected(g);
  const int d = g.dimension();
  FaceVector out{std::vector<long>(static_cast<std::size_t>(d) + 1, 0)};
  out.f[static_cast<std::size_t>(d)] = g.order();
  for (int h = 1; h <= d; ++h) {
    long sum = 0;
    for (ColorSubset b : color_combinations(g.num_colors(), h)) sum += g_count(g, b);
    out.f[static_cast<std::size_t>(d - h)] = sum;
  }
  return out;
}

inline long alternating_sum(const FaceVector& f) {
  long chi = 0;
  for (std::size_t h = 0; h < f.size(); ++h) chi += (h % 2 == 0 ? 1 : -1) * f[h];
  return chi;
}

inline long euler_characteristic(const ColoredGraph& g) { return alternating_sum(face_vector(g)); }

/// Defects of the three 4-dimensional Dehn-Sommerville relations against a given chi.
inline std::array<long, 3> dehn_sommerville_residuals(const FaceVector& f, long chi) {
  if (f.size() != 5) {
    throw GemError(ErrorCode::WrongDimension, "Dehn-Sommerville residuals need a 4-dimensional face vector");
  }
  return {f[0] - f[1] + f[2] - f[3] + f[4] - chi, 2 * f[1] - 3 * f[2] + 4 * f[3] - 5 * f[4], 2 * f[3] - 5 * f[4]};
}

inline std::array<long, 3> dehn_sommerville_residuals(const FaceVector& f) {
  if (f.size() != 5) {
    throw GemError(ErrorCode::WrongDimension, "Dehn-Sommerville residuals need a 4-dimensional face vector");
  }
  return dehn_sommerville_residuals(f, alternating_sum(f));
}

/// p - 1 for a graph of order 2p; an upper bound for the gem-complexity of the manifold.
inline long gem_complexity_of_graph(const ColoredGraph& g) {
  require_contracted(g);
  return static_cast<long>(g.order()) / 2 - 1;
}

/// All g_B for |B| = k, in lexicographic order of B.
inline std::vector<long> residue_counts(const ColoredGraph& g, int k) {
  std::vector<long> out;
  for (ColorSubset b : color_combinations(g.num_colors(), k)) out.push_back(g_count(g, b));
  return out;
}

inline std::array<long, 10> pair_counts4(const ColoredGraph& g) {
  require_dimension(g, 4);
  std::array<long, 10> out{};
  const auto v = residue_counts(g, 2);
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

inline std::array<long, 10> triple_counts4(const ColoredGraph& g) {
  require_dimension(g, 4);
  std::array<long, 10> out{};
  const auto v = residue_counts(g, 3);
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

/// min over triples of g_{ijk} - 1, an upper bound for the rank of the fundamental group.
inline long rank_upper_bound(const ColoredGraph& g) {
  require_dimension(g, 4);
  require_contracted(g);
  const auto t = triple_counts4(g);
  return *std::min_element(t.begin(), t.end()) - 1;
}

/// order - (6 chi + 2 f_1 - 30); zero for every crystallization of a closed 4-manifold.
inline long f1_identity_residual(const ColoredGraph& g) {
  require_dimension(g, 4);
  require_contracted(g);
  const FaceVector f = face_vector(g);
  return static_cast<long>(g.order()) - (6 * alternating_sum(f) + 2 * f[1] - 30);
}

/// Invariant report of one connected graph.
struct GemInvariants {
  int colors = 0;
  long order = 0;
  bool bipartite = false;
  bool contracted = false;
  FaceVector f;
  long chi = 0;
  std::map<std::string, long> g2;
  std::map<std::string, long> g3;
  std::optional<long> k_graph;
  std::optional<long> rank_ub;
};

inline GemInvariants compute_invariants(const ColoredGraph& g) {
  GemInvariants inv;
  inv.colors = g.num_colors();
  inv.order = g.order();
  inv.bipartite = is_bipartite(g);
  inv.contracted = is_contracted(g);
  inv.f = face_vector(g);
  inv.chi = alternating_sum(inv.f);
  for (ColorSubset b : color_combinations(g.num_colors(), 2)) inv.g2[b.label()] = g_count(g, b);
  for (ColorSubset b : color_combinations(g.num_colors(), 3)) inv.g3[b.label()] = g_count(g, b);
  if (inv.contracted) {
    inv.k_graph = static_cast<long>(g.order()) / 2 - 1;
    if (g.dimension() == 4) inv.rank_ub = rank_upper_bound(g);
  }
  return inv;
}

inline ordered_json to_json(const GemInvariants& inv) {
  ordered_json j;
  j["f"] = inv.f.f;
  j["chi"] = inv.chi;
  ordered_json g2 = ordered_json::object();
  for (const auto& [k, v] : inv.g2) g2[k] = v;
  ordered_json g3 = ordered_json::object();
  for (const auto& [k, v] : inv.g3) g3[k] = v;
  j["g2"] = std::move(g2);
  j["g3"] = std::move(g3);
  j["k_graph"] = inv.k_graph ? ordered_json(*inv.k_graph) : ordered_json(nullptr);
  j["rank_ub"] = inv.rank_ub ? ordered_json(*inv.rank_ub) : ordered_json(nullptr);
  j["colors"] = inv.colors;
  j["order"] = inv.order;
  j["bipartite"] = inv.bipartite;
  j["contracted"] = inv.contracted;
  return j;
}

}  // namespace gemkit
