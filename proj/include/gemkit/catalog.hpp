#pragma once

// Isomorph-free enumeration of small (d+1)-colored graphs.
//
// Color 0 is fixed to the pairing (0,1),(2,3),...; each further color ranges
// over all perfect matchings, and after every color the partial graphs are
// reduced to one representative per color-preserving isomorphism class. Any
// graph's restriction to its first c colors is isomorphic to a kept
// representative, and transporting the graph along that isomorphism shows it
// is generated from it, so the search is complete.

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "gemkit/bounds.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/complex_invariants.hpp"
#include "gemkit/isomorphism.hpp"
#include "gemkit/regular_genus.hpp"

namespace gemkit {

struct EnumFilter {
  bool bipartite_only = false;
  bool contracted_only = false;
  bool connected_only = false;
  bool require_manifold_conditions = false;
};

/// Default cap on the order for 5 colors; larger orders need an explicit opt-in.
inline constexpr long kDefaultMaxOrder = 8;

struct ManifoldCheck {
  bool passed = true;
  std::vector<std::string> failures;  // "{ijk} component@v: chi=n"
};

/// Every 3-colored residue component must be a 2-sphere gem (its regular surface has chi = 2).
/// Necessary for the graph to represent a closed 4-manifold, not sufficient.
inline ManifoldCheck necessary_manifold_conditions(const ColoredGraph& g) {
  require_dimension(g, 4);
  require_connected(g);
  ManifoldCheck out;
  std::vector<std::uint32_t> label;
  for (ColorSubset triple : color_combinations(5, 3)) {
    const std::size_t k = detail::label_components(g, triple, label);
    std::vector<long> size(k, 0);
    std::vector<long> cycles(k, 0);
    std::vector<Vertex> least(k, g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      ++size[label[v]];
      least[label[v]] = std::min(least[label[v]], v);
    }
    const auto cs = triple.colors();
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        std::vector<std::uint32_t> pair_label;
        const std::size_t pk = detail::label_components(g, ColorSubset{cs[a], cs[b]}, pair_label);
        std::vector<bool> counted(pk, false);
        for (Vertex v = 0; v < g.order(); ++v) {
          if (!counted[pair_label[v]]) {
            counted[pair_label[v]] = true;
            ++cycles[label[v]];
          }
        }
      }
    }
    for (std::size_t c = 0; c < k; ++c) {
      const long chi = cycles[c] - size[c] / 2;
      if (chi != 2) {
        out.passed = false;
        out.failures.push_back("{" + triple.label() + "} component@" + std::to_string(least[c]) +
                               ": chi=" + std::to_string(chi));
      }
    }
  }
  return out;
}

inline bool passes_filter(const ColoredGraph& g, const EnumFilter& f) {
  if (f.bipartite_only && !is_bipartite(g)) return false;
  const bool connected = is_connected(g);
  if ((f.connected_only || f.contracted_only || f.require_manifold_conditions) && !connected) return false;
  if (f.contracted_only && !is_contracted(g)) return false;
  if (f.require_manifold_conditions) {
    if (g.dimension() != 4 || !necessary_manifold_conditions(g).passed) return false;
  }
  return true;
}

/// All perfect matchings on n vertices as involution arrays, in lexicographic order of pair lists.
inline std::vector<std::vector<Vertex>> perfect_matchings(Vertex n) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> inv(n, n);
  std::function<void()> rec = [&] {
    Vertex first = 0;
    while (first < n && inv[first] != n) ++first;
    if (first == n) {
      out.push_back(inv);
      return;
    }
    for (Vertex w = first + 1; w < n; ++w) {
      if (inv[w] != n) continue;
      inv[first] = w;
      inv[w] = first;
      rec();
      inv[first] = n;
      inv[w] = n;
    }
  };
  rec();
  return out;
}

struct EnumOptions {
  unsigned threads = 1;
  std::function<void(long order, int color, std::size_t classes)> progress;
};

namespace detail {

using CodeMap = std::map<std::string, ColoredGraph>;

// Extends every representative by one color, keeping one graph per canonical code.
inline CodeMap extend_level(const std::vector<ColoredGraph>& reps, const std::vector<std::vector<Vertex>>& matchings,
                            unsigned threads) {
  threads = std::max(1u, threads);
  std::vector<CodeMap> partial(threads);
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned t) {
    auto& local = partial[t];
    for (std::size_t i = next++; i < reps.size(); i = next++) {
      auto inv = reps[i].involutions();
      inv.emplace_back();
      for (const auto& m : matchings) {
        inv.back() = m;
        ColoredGraph g = ColoredGraph::from_involutions(static_cast<int>(inv.size()), inv);
        const CanonicalForm form = canonical_form(g);
        std::string code = encode(form.graph);
        local.try_emplace(std::move(code), form.graph);
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  CodeMap merged;
  for (auto& m : partial) merged.merge(m);
  return merged;
}

}  // namespace detail

/// One representative (in canonical labeling) per color-preserving isomorphism class of graphs
/// with `colors` colors and exactly `order` vertices that pass the filter, sorted by canonical code.
inline std::vector<ColoredGraph> enumerate_order(int colors, long order, const EnumFilter& f,
                                                 const EnumOptions& opts = {}) {
  if (colors < 2) throw GemError(ErrorCode::ColorCountMismatch, "need at least 2 colors");
  if (order < 2 || order % 2 != 0) throw GemError(ErrorCode::OddOrder, "order " + std::to_string(order));
  const auto n = static_cast<Vertex>(order);
  std::vector<Vertex> base(n);
  for (Vertex v = 0; v < n; ++v) base[v] = v ^ 1u;
  const auto matchings = perfect_matchings(n);

  // One color is not a valid graph on its own; start from two colors.
  std::vector<ColoredGraph> reps;
  {
    std::map<std::string, ColoredGraph> level;
    for (const auto& m : matchings) {
      const CanonicalForm form = canonical_form(ColoredGraph::from_involutions(2, {base, m}));
      level.try_emplace(encode(form.graph), form.graph);
    }
    for (auto& [code, g] : level) reps.push_back(std::move(g));
    if (opts.progress) opts.progress(order, 1, reps.size());
  }
  for (int c = 2; c < colors; ++c) {
    auto level = detail::extend_level(reps, matchings, opts.threads);
    reps.clear();
    for (auto& [code, g] : level) reps.push_back(std::move(g));
    if (opts.progress) opts.progress(order, c, reps.size());
  }
  std::vector<ColoredGraph> out;
  for (auto& g : reps) {
    if (passes_filter(g, f)) out.push_back(std::move(g));
  }
  return out;
}

/// All orders 2, 4, ..., max_order, sorted by canonical code (hence by order first).
inline std::vector<ColoredGraph> enumerate(int colors, long max_order, const EnumFilter& f,
                                           const EnumOptions& opts = {}) {
  if (max_order < 2 || max_order % 2 != 0) throw GemError(ErrorCode::OddOrder, "max order " + std::to_string(max_order));
  std::vector<ColoredGraph> out;
  for (long order = 2; order <= max_order; order += 2) {
    auto part = enumerate_order(colors, order, f, opts);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

struct SurveyRow {
  long order = 0;
  long chi = 0;
  HalfInteger rho;
  std::optional<long> type;  // semi-simple candidate type; 4-dimensional contracted graphs only
  long count = 0;

  auto key() const { return std::make_tuple(order, chi, rho, type); }
};

/// Groups the connected enumerated graphs by (order, chi, rho, candidate type).
inline std::vector<SurveyRow> survey(int colors, long max_order, EnumFilter f, const EnumOptions& opts = {}) {
  f.connected_only = true;
  std::map<std::tuple<long, long, HalfInteger, std::optional<long>>, long> groups;
  for (const auto& g : enumerate(colors, max_order, f, opts)) {
    std::optional<long> type;
    if (g.dimension() == 4 && is_contracted(g)) type = semisimple_type(g);
    ++groups[{static_cast<long>(g.order()), euler_characteristic(g), regular_genus_of_graph(g), type}];
  }
  std::vector<SurveyRow> rows;
  for (const auto& [key, count] : groups) {
    rows.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), count});
  }
  return rows;
}

}  // namespace gemkit
