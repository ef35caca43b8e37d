#pragma once

// Lower bounds for gem-complexity and regular genus of closed PL 4-manifolds,
// semi-simple crystallizations, and the exact pair/triple linear system.

#include <array>
#include <optional>
#include <string>

#include "gemkit/colored_graph.hpp"
#include "gemkit/complex_invariants.hpp"
#include "gemkit/rational.hpp"
#include "gemkit/regular_genus.hpp"

namespace gemkit {

/// Externally supplied topological data: chi(M) and the rank m of pi_1(M).
struct ManifoldParams {
  long chi = 0;
  long rank = 0;
  std::optional<std::string> name;
};

struct LowerBounds {
  long k = 0;      // gem-complexity
  long genus = 0;  // regular genus
  friend bool operator==(const LowerBounds&, const LowerBounds&) = default;
};

/// k(M) >= 3 chi + 10 m - 6 and G(M) >= 2 chi + 5 m - 4.
inline LowerBounds theorem1_lower_bounds(const ManifoldParams& p) {
  return {3 * p.chi + 10 * p.rank - 6, 2 * p.chi + 5 * p.rank - 4};
}

/// Order a semi-simple crystallization of type m must have: 6 chi + 20 m - 10.
inline long semisimple_order(const ManifoldParams& p) { return 6 * p.chi + 20 * p.rank - 10; }

/// If all ten g_{ijk} agree on a value v, the candidate type v - 1.
inline std::optional<long> semisimple_type(const ColoredGraph& g) {
  require_dimension(g, 4);
  require_contracted(g);
  const auto t = triple_counts4(g);
  for (long v : t) {
    if (v != t[0]) return std::nullopt;
  }
  return t[0] - 1;
}

/// Checks the declared parameters against the graph: chi must match and the rank may not exceed the
/// tricolored bound.
inline void check_params(const ColoredGraph& g, const ManifoldParams& p) {
  const long chi = euler_characteristic(g);
  if (chi != p.chi) {
    throw GemError(ErrorCode::ChiMismatch,
                   "declared chi " + std::to_string(p.chi) + " but graph has chi " + std::to_string(chi));
  }
  const long ub = rank_upper_bound(g);
  if (p.rank < 0 || p.rank > ub) {
    throw GemError(ErrorCode::RankExceedsBound,
                   "declared rank " + std::to_string(p.rank) + " outside [0, " + std::to_string(ub) + "]");
  }
}

/// Semi-simple of type p.rank. The uniform-triple test and the order identity must agree.
inline bool is_semisimple(const ColoredGraph& g, const ManifoldParams& p) {
  check_params(g, p);
  const auto type = semisimple_type(g);
  const bool by_type = type && *type == p.rank;
  const bool by_order = static_cast<long>(g.order()) == semisimple_order(p);
  if (by_type != by_order) {
    throw GemError(ErrorCode::InternalInconsistency,
                   "uniform-triple test and order identity disagree (order " + std::to_string(g.order()) +
                       ", expected " + std::to_string(semisimple_order(p)) + ")");
  }
  return by_type;
}

struct Theorem2Values {
  long k = 0;
  long genus = 0;
  Rational k_from_genus;  // (3 genus + 5 m) / 2
};

/// Exact values for manifolds admitting semi-simple crystallizations.
inline Theorem2Values theorem2_equalities(const ManifoldParams& p) {
  const LowerBounds b = theorem1_lower_bounds(p);
  return {b.k, b.genus, Rational(3 * b.genus + 5 * p.rank, 2)};
}

using RationalMatrix10 = std::array<std::array<Rational, 10>, 10>;

/// Incidence of pairs (columns g01..g34) in triples (rows 012..234).
inline RationalMatrix10 pair_triple_matrix() {
  RationalMatrix10 a{};
  const auto pairs = color_combinations(5, 2);
  const auto triples = color_combinations(5, 3);
  for (std::size_t r = 0; r < 10; ++r) {
    for (std::size_t c = 0; c < 10; ++c) {
      a[r][c] = (pairs[c].bits() & ~triples[r].bits()) == 0 ? 1 : 0;
    }
  }
  return a;
}

/// Closed-form inverse; every entry is 1/3 or -1/6.
inline RationalMatrix10 pair_triple_inverse_table() {
  // Entries times 6.
  static constexpr int kSixTimes[10][10] = {
      {2, 2, 2, -1, -1, -1, -1, -1, -1, 2},  {2, -1, -1, 2, 2, -1, -1, -1, 2, -1},
      {-1, 2, -1, 2, -1, 2, -1, 2, -1, -1},  {-1, -1, 2, -1, 2, 2, 2, -1, -1, -1},
      {2, -1, -1, -1, -1, 2, 2, 2, -1, -1},  {-1, 2, -1, -1, 2, -1, 2, -1, 2, -1},
      {-1, -1, 2, 2, -1, -1, -1, 2, 2, -1},  {-1, -1, 2, 2, -1, -1, 2, -1, -1, 2},
      {-1, 2, -1, -1, 2, -1, -1, 2, -1, 2},  {2, -1, -1, -1, -1, 2, -1, -1, 2, 2},
  };
  RationalMatrix10 inv{};
  for (std::size_t r = 0; r < 10; ++r) {
    for (std::size_t c = 0; c < 10; ++c) inv[r][c] = Rational(kSixTimes[r][c], 6);
  }
  return inv;
}

inline RationalMatrix10 multiply(const RationalMatrix10& x, const RationalMatrix10& y) {
  RationalMatrix10 out{};
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 10; ++j) {
      Rational s;
      for (std::size_t k = 0; k < 10; ++k) s += x[i][k] * y[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

/// Gauss-Jordan inverse in exact arithmetic; throws InternalInconsistency if singular.
inline RationalMatrix10 gauss_jordan_inverse(RationalMatrix10 m) {
  RationalMatrix10 inv{};
  for (std::size_t i = 0; i < 10; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < 10; ++col) {
    std::size_t pivot = col;
    while (pivot < 10 && m[pivot][col] == Rational{}) ++pivot;
    if (pivot == 10) throw GemError(ErrorCode::InternalInconsistency, "pair/triple matrix is singular");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < 10; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t r = 0; r < 10; ++r) {
      if (r == col || m[r][col] == Rational{}) continue;
      const Rational factor = m[r][col];
      for (std::size_t j = 0; j < 10; ++j) {
        m[r][j] -= factor * m[col][j];
        inv[r][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

/// The hard-coded inverse, checked once against A * A^{-1} = I and against elimination.
inline const RationalMatrix10& pair_triple_inverse() {
  static const RationalMatrix10 checked = [] {
    const RationalMatrix10 a = pair_triple_matrix();
    const RationalMatrix10 table = pair_triple_inverse_table();
    const RationalMatrix10 prod = multiply(a, table);
    for (std::size_t i = 0; i < 10; ++i) {
      for (std::size_t j = 0; j < 10; ++j) {
        if (prod[i][j] != Rational(i == j ? 1 : 0)) {
          throw GemError(ErrorCode::InternalInconsistency, "hard-coded inverse fails A * A^-1 = I");
        }
      }
    }
    if (gauss_jordan_inverse(a) != table) {
      throw GemError(ErrorCode::InternalInconsistency, "hard-coded inverse differs from elimination");
    }
    return table;
  }();
  return checked;
}

/// Solves g_ij + g_ik + g_jk = 2 g_ijk + half_order for the ten g_ij.
/// Input and output are in lexicographic order (012..234 and 01..34).
inline std::array<Rational, 10> solve_gij_from_gijk(const std::array<long, 10>& triple_counts, long half_order) {
  if (half_order < 1) throw GemError(ErrorCode::InvalidVertex, "half order must be positive");
  const RationalMatrix10& inv = pair_triple_inverse();
  std::array<Rational, 10> rhs{};
  for (std::size_t r = 0; r < 10; ++r) rhs[r] = 2 * triple_counts[r] + half_order;
  std::array<Rational, 10> x{};
  for (std::size_t i = 0; i < 10; ++i) {
    Rational s;
    for (std::size_t k = 0; k < 10; ++k) s += inv[i][k] * rhs[k];
    x[i] = s;
  }
  return x;
}

// Product manifolds.

enum class SurfaceProduct { TxT, TxU, UxU };

struct SurfaceProductResult {
  LowerBounds bounds;
  ManifoldParams params;  // chi and rank of the product
};

inline long surface_chi(bool orientable, long genus) { return orientable ? 2 - 2 * genus : 2 - genus; }
inline long surface_rank(bool orientable, long genus) { return orientable ? 2 * genus : genus; }

/// Bounds for T_a x T_b, T_a x U_b or U_a x U_b. Computed through theorem1_lower_bounds
/// and checked against the closed forms; T_0 is the 2-sphere.
inline SurfaceProductResult surface_product_bounds(SurfaceProduct kind, long a, long b) {
  const bool first_orientable = kind != SurfaceProduct::UxU;
  const bool second_orientable = kind == SurfaceProduct::TxT;
  auto check = [](bool orientable, long genus) {
    if (genus < (orientable ? 0 : 1)) {
      throw GemError(ErrorCode::InvalidGenus, (orientable ? "T_" : "U_") + std::to_string(genus));
    }
  };
  check(first_orientable, a);
  check(second_orientable, b);

  ManifoldParams p;
  p.chi = surface_chi(first_orientable, a) * surface_chi(second_orientable, b);
  p.rank = surface_rank(first_orientable, a) + surface_rank(second_orientable, b);
  const LowerBounds via_theorem = theorem1_lower_bounds(p);

  LowerBounds closed;
  switch (kind) {
    case SurfaceProduct::TxT:
      closed = {12 * a * b + 8 * a + 8 * b + 6, 8 * a * b + 2 * a + 2 * b + 4};
      break;
    case SurfaceProduct::TxU:
      closed = {6 * a * b + 8 * a + 4 * b + 6, 4 * a * b + 2 * a + b + 4};
      break;
    case SurfaceProduct::UxU:
      closed = {3 * a * b + 4 * a + 4 * b + 6, 2 * a * b + a + b + 4};
      break;
  }
  if (closed != via_theorem) {
    throw GemError(ErrorCode::InternalInconsistency, "surface product closed form disagrees with general bound");
  }
  return {via_theorem, p};
}

/// Bounds for M^3 x S^1 where pi_1(M^3) is finitely generated abelian of rank r.
inline LowerBounds lens_times_circle_bounds(long rank_of_pi1_m3) {
  if (rank_of_pi1_m3 < 0) throw GemError(ErrorCode::InvalidGenus, "rank must be non-negative");
  const LowerBounds b = theorem1_lower_bounds({0, rank_of_pi1_m3 + 1, std::nullopt});
  if (b.genus != 5 * rank_of_pi1_m3 + 1 || b.k != 10 * rank_of_pi1_m3 + 4) {
    throw GemError(ErrorCode::InternalInconsistency, "M3 x S1 closed form disagrees with general bound");
  }
  return b;
}

enum class BoundVerdict { AttainsBoth, AttainsNeither, Mixed };

inline std::string_view to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::AttainsBoth: return "attains_both";
    case BoundVerdict::AttainsNeither: return "attains_neither";
    case BoundVerdict::Mixed: return "mixed";
  }
  return "mixed";
}

/// Compares a graph's k and rho against the lower bounds for the declared parameters.
inline BoundVerdict bound_verdict(const ColoredGraph& g, const ManifoldParams& p) {
  check_params(g, p);
  const LowerBounds b = theorem1_lower_bounds(p);
  const bool k_hit = gem_complexity_of_graph(g) == b.k;
  const bool genus_hit = regular_genus_of_graph(g) == HalfInteger::from_integer(b.genus);
  if (k_hit && genus_hit) return BoundVerdict::AttainsBoth;
  if (!k_hit && !genus_hit) return BoundVerdict::AttainsNeither;
  return BoundVerdict::Mixed;
}

/// Classification remarks keyed on the gap between a genus value and the rank.
/// Returned as documentation strings only.
inline std::optional<std::string> genus_rank_annotation(HalfInteger genus, long rank, bool orientable) {
  if (!genus.is_integer()) return std::nullopt;
  const long gap = genus.twice_value() / 2 - rank;
  const std::string bundle = orientable ? "S1xS3" : "S1~S3";
  if (gap == 0) {
    return "if G(M) = rk = " + std::to_string(rank) + ", M is a connected sum of " + std::to_string(rank) +
           " copies of " + bundle;
  }
  if (gap == 1) return std::string("no PL 4-manifold has G(M) = rk + 1");
  if (gap == 2) {
    return "if G(M) = rk + 2 and pi_1 is free of rank " + std::to_string(rank) + ", M is CP2 # " +
           std::to_string(rank) + " copies of " + bundle;
  }
  return std::nullopt;
}

}  // namespace gemkit
