#pragma once

// Regular genus of gems: Euler characteristic of the regular surface attached
// to each cyclic color ordering, and the minimum over all orderings.

#include <algorithm>
#include <array>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/complex_invariants.hpp"
#include "gemkit/rational.hpp"

namespace gemkit {

/// A cyclic ordering of the colors 0..d up to rotation and reflection.
/// Stored canonically: starts at color 0, and the second entry is smaller than the last.
class CyclicPermutation {
 public:
  /// Normalizes any ordering of 0..d; throws ColorMismatch if seq is not a permutation.
  explicit CyclicPermutation(std::vector<Color> seq) : seq_(std::move(seq)) {
    std::vector<Color> sorted = seq_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i] != static_cast<Color>(i)) {
        throw GemError(ErrorCode::ColorMismatch, "not a permutation of 0.." + std::to_string(seq_.size() - 1));
      }
    }
    if (seq_.size() < 3) throw GemError(ErrorCode::ColorMismatch, "cyclic permutations need at least 3 colors");
    std::rotate(seq_.begin(), std::find(seq_.begin(), seq_.end(), 0), seq_.end());
    if (seq_[1] > seq_.back()) std::reverse(seq_.begin() + 1, seq_.end());
  }

  const std::vector<Color>& seq() const { return seq_; }
  int size() const { return static_cast<int>(seq_.size()); }
  /// Color at position i, indices taken modulo d+1.
  Color at(int i) const {
    const int n = size();
    return seq_[static_cast<std::size_t>(((i % n) + n) % n)];
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(seq_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
  friend auto operator<=>(const CyclicPermutation& a, const CyclicPermutation& b) { return a.seq_ <=> b.seq_; }

 private:
  std::vector<Color> seq_;
};

/// Canonical representatives of all d!/2 cyclic orderings of 0..d, in lexicographic order.
inline std::vector<CyclicPermutation> cyclic_permutations(int d) {
  if (d < 2) throw GemError(ErrorCode::WrongDimension, "cyclic permutations need d >= 2");
  std::vector<Color> tail(static_cast<std::size_t>(d));
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<CyclicPermutation> out;
  do {
    if (tail.front() < tail.back()) {
      std::vector<Color> seq{0};
      seq.insert(seq.end(), tail.begin(), tail.end());
      out.emplace_back(std::move(seq));
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

namespace detail {

inline void check_ordering(const ColoredGraph& g, std::span<const Color> ordering) {
  std::vector<Color> sorted(ordering.begin(), ordering.end());
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == static_cast<std::size_t>(g.num_colors());
  for (std::size_t i = 0; ok && i < sorted.size(); ++i) ok = sorted[i] == static_cast<Color>(i);
  if (!ok) throw GemError(ErrorCode::ColorMismatch, "ordering is not a permutation of the graph's colors");
}

// Sum of g over consecutive pairs of a cyclic ordering, plus (1 - d) * p, where d+1 is the ordering length.
inline long cyclic_chi(const ColoredGraph& g, std::span<const Color> ordering) {
  const std::size_t n = ordering.size();
  long sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += g_count(g, ColorSubset{ordering[i], ordering[(i + 1) % n]});
  const long d = static_cast<long>(n) - 1;
  return sum + (1 - d) * static_cast<long>(g.order()) / 2;
}

}  // namespace detail

/// Euler characteristic of the regular surface of g under an arbitrary (not necessarily canonical) ordering.
inline long chi_epsilon(const ColoredGraph& g, std::span<const Color> ordering) {
  require_connected(g);
  detail::check_ordering(g, ordering);
  return detail::cyclic_chi(g, ordering);
}

inline long chi_epsilon(const ColoredGraph& g, const CyclicPermutation& e) { return chi_epsilon(g, e.seq()); }

inline HalfInteger rho_from_chi(long chi) { return HalfInteger::from_twice(2 - chi); }

/// 1 - chi_eps / 2.
inline HalfInteger rho_epsilon(const ColoredGraph& g, const CyclicPermutation& e) {
  return rho_from_chi(chi_epsilon(g, e));
}

inline HalfInteger rho_epsilon(const ColoredGraph& g, std::span<const Color> ordering) {
  return rho_from_chi(chi_epsilon(g, ordering));
}

struct GenusReport {
  HalfInteger rho;
  std::vector<CyclicPermutation> argmin;
  std::vector<std::pair<CyclicPermutation, HalfInteger>> by_perm;
};

/// Minimum of rho_eps over every canonical cyclic permutation, with the full spread.
inline GenusReport regular_genus_report(const ColoredGraph& g) {
  require_connected(g);
  GenusReport out;
  for (auto& e : cyclic_permutations(g.dimension())) {
    const HalfInteger r = rho_from_chi(detail::cyclic_chi(g, e.seq()));
    out.by_perm.emplace_back(e, r);
  }
  out.rho = std::min_element(out.by_perm.begin(), out.by_perm.end(),
                             [](const auto& a, const auto& b) { return a.second < b.second; })
                ->second;
  for (const auto& [e, r] : out.by_perm) {
    if (r == out.rho) out.argmin.push_back(e);
  }
  return out;
}

inline HalfInteger regular_genus_of_graph(const ColoredGraph& g) { return regular_genus_report(g).rho; }

/// rho_eps of the 4-colored residue obtained by deleting color i, with eps restricted to the remaining colors.
inline HalfInteger residue_genus(const ColoredGraph& g, Color i, const CyclicPermutation& e) {
  require_dimension(g, 4);
  g.check_color(i);
  detail::check_ordering(g, e.seq());
  if (g_count(g, ColorSubset::all(g.num_colors()).without(i)) != 1) {
    throw GemError(ErrorCode::NotContracted, "residue without color " + std::to_string(i) + " is disconnected");
  }
  std::vector<Color> restricted;
  for (Color c : e.seq()) {
    if (c != i) restricted.push_back(c);
  }
  return rho_from_chi(detail::cyclic_chi(g, restricted));
}

/// Defects (lhs - rhs) of the two families of relations between bicolored and
/// tricolored counts and the genera of the 4-colored residues, one entry per
/// position i in Z_5. Indices are positions in e.
struct GenusRelationResiduals {
  std::array<HalfInteger, 5> pair_relation;
  std::array<HalfInteger, 5> triple_relation;

  bool all_zero() const {
    return std::all_of(pair_relation.begin(), pair_relation.end(), [](HalfInteger h) { return h == HalfInteger{}; }) &&
           std::all_of(triple_relation.begin(), triple_relation.end(),
                       [](HalfInteger h) { return h == HalfInteger{}; });
  }
};

inline GenusRelationResiduals check_genus_relations(const ColoredGraph& g, const CyclicPermutation& e) {
  require_dimension(g, 4);
  require_contracted(g);
  const HalfInteger rho = rho_epsilon(g, e);
  std::array<HalfInteger, 5> rho_hat;
  for (int i = 0; i < 5; ++i) rho_hat[static_cast<std::size_t>(i)] = residue_genus(g, e.at(i), e);
  auto hat = [&](int i) { return rho_hat[static_cast<std::size_t>(((i % 5) + 5) % 5)]; };
  auto whole = [](long v) { return HalfInteger::from_integer(v); };

  GenusRelationResiduals out;
  for (int i = 0; i < 5; ++i) {
    // g_{(i-1)(i+1)} = g_{(i-1) i (i+1)} + rho - rho_hat(i)
    const long lhs1 = g_count(g, ColorSubset{e.at(i - 1), e.at(i + 1)});
    const long tri1 = g_count(g, ColorSubset{e.at(i - 1), e.at(i), e.at(i + 1)});
    out.pair_relation[static_cast<std::size_t>(i)] = whole(lhs1) - (whole(tri1) + rho - hat(i));
    // g_{(i-1)(i+1)(i+2)} = 1 + rho - rho_hat(i) - rho_hat(i+3)
    const long lhs2 = g_count(g, ColorSubset{e.at(i - 1), e.at(i + 1), e.at(i + 2)});
    out.triple_relation[static_cast<std::size_t>(i)] = whole(lhs2) - (whole(1) + rho - hat(i) - hat(i + 3));
  }
  return out;
}

}  // namespace gemkit
