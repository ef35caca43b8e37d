// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gemkit/gemkit.hpp"
#include "test_support.hpp"

using namespace gemkit;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

HalfInteger whole(long v) { return HalfInteger::from_integer(v); }

bool all_rho(const ColoredGraph& g, long value) {
  for (const auto& e : cyclic_permutations(4)) {
    if (rho_epsilon(g, e) != whole(value)) return false;
  }
  return true;
}

bool all_residue_rho(const ColoredGraph& g, long value) {
  for (const auto& e : cyclic_permutations(4)) {
    for (Color i = 0; i < 5; ++i) {
      if (residue_genus(g, i, e) != whole(value)) return false;
    }
  }
  return true;
}

bool uniform(const std::array<long, 10>& counts, long value) {
  return std::all_of(counts.begin(), counts.end(), [value](long c) { return c == value; });
}

long k_graph(const ColoredGraph& g) { return gem_complexity_of_graph(g); }

void sphere() {
  const ColoredGraph g = builtin("s4").graph;
  require(face_vector(g).f == std::vector<long>{5, 10, 10, 5, 2}, "face vector");
  require(euler_characteristic(g) == 2, "chi");
  require(all_rho(g, 0), "rho_eps = 0 for all 12 orderings");
  require(cyclic_permutations(4).size() == 12, "12 orderings");
  require(k_graph(g) == 0, "k_graph");
  require(theorem1_lower_bounds({2, 0, {}}) == LowerBounds{0, 0}, "bounds (0,0)");
  require(bound_verdict(g, {2, 0, {}}) == BoundVerdict::AttainsBoth, "bounds attained");
}

void bundles() {
  const ColoredGraph left = builtin("s1xs3").graph;
  const ColoredGraph right = builtin("s1~s3").graph;
  require(is_bipartite(left), "s1xs3 bipartite");
  require(!is_bipartite(right), "s1~s3 not bipartite");
  for (const ColoredGraph* g : {&left, &right}) {
    require(g->order() == 10, "order 10");
    require(euler_characteristic(*g) == 0, "chi 0");
    require(uniform(triple_counts4(*g), 2), "all g_ijk = 2");
    require(uniform(pair_counts4(*g), 3), "all g_ij = 3");
    require(all_rho(*g, 1), "rho_eps = 1 for all orderings");
    require(all_residue_rho(*g, 0), "residue genus 0");
    require(is_semisimple(*g, {0, 1, {}}), "semi-simple with m = 1");
    require(k_graph(*g) == 4 && theorem1_lower_bounds({0, 1, {}}).k == 4, "k_graph = 4 = bound");
  }
}

void projective() {
  const ColoredGraph g = builtin("rp4").graph;
  require(g.order() == 16, "order 16");
  require(euler_characteristic(g) == 1, "chi 1");
  require(!is_bipartite(g), "not bipartite");
  require(uniform(triple_counts4(g), 2), "all g_ijk = 2");
  require(uniform(pair_counts4(g), 4), "all g_ij = 4");
  require(regular_genus_of_graph(g) == whole(3), "rho 3");
  require(all_residue_rho(g, 1), "residue genus 1");
  require(k_graph(g) == 7, "k_graph 7");
  require(semisimple_order({1, 1, {}}) == 16, "order identity");
}

void sphere_times_rp2() {
  const ColoredGraph g = builtin("s2xrp2").graph;
  require(g.order() == 24, "order 24");
  require(euler_characteristic(g) == 2, "chi 2");
  require(regular_genus_of_graph(g) == whole(5), "rho 5");
  require(k_graph(g) == 11, "k_graph 11");
  const LowerBounds b = theorem1_lower_bounds({2, 1, {}});
  require(b == LowerBounds{10, 5}, "bounds (10,5)");
  // genus bound attained, complexity within one of it
  require(regular_genus_of_graph(g) == whole(b.genus) && k_graph(g) - b.k <= 1, "G = 5, k in {10,11}");
}

std::string report(const ColoredGraph& g) {
  std::ostringstream os;
  os << to_json(compute_invariants(g)).dump();
  for (const auto& e : cyclic_permutations(4)) os << ' ' << rho_epsilon(g, e).to_string();
  return os.str();
}

void connected_sums() {
  for (const char* key : {"rp4", "s1xs3"}) {
    const ColoredGraph g = builtin(key).graph;
    const long k = k_graph(g);
    const HalfInteger rho = regular_genus_of_graph(g);
    const auto side = bipartition(g);
    // welding vertices from the same or from opposite bipartition classes
    Vertex other = 1;
    if (side) {
      while ((*side)[other] == (*side)[0]) ++other;
    }
    const ColoredGraph same = connected_sum(g, 0, g, 0);
    const ColoredGraph flipped = connected_sum(g, 0, g, other);
    for (const ColoredGraph* s : {&same, &flipped}) {
      require(semisimple_type(*s) == 2, std::string(key) + ": semi-simple candidate of type 2");
      require(k_graph(*s) == 2 * k, std::string(key) + ": k additive");
      require(regular_genus_of_graph(*s) == rho + rho, std::string(key) + ": rho additive");
      require(is_semisimple(*s, {euler_characteristic(*s), 2, {}}), std::string(key) + ": order identity");
    }
    require(report(same) == report(flipped), std::string(key) + ": identical reports for both weldings");
  }
  require(k_graph(connected_sum(builtin("rp4").graph, 0, builtin("rp4").graph, 0)) == 14, "rp4#rp4 k = 14");
  require(regular_genus_of_graph(connected_sum(builtin("rp4").graph, 0, builtin("rp4").graph, 0)) == whole(6),
          "rp4#rp4 rho = 6");
  require(k_graph(connected_sum(builtin("s1xs3").graph, 0, builtin("s1xs3").graph, 0)) == 8, "s1xs3#s1xs3 k = 8");
  require(regular_genus_of_graph(connected_sum(builtin("s1xs3").graph, 0, builtin("s1xs3").graph, 0)) == whole(2),
          "s1xs3#s1xs3 rho = 2");
}

void linear_system() {
  const RationalMatrix10 prod = multiply(pair_triple_matrix(), pair_triple_inverse());
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < 10; ++j) require(prod[i][j] == Rational(i == j ? 1 : 0), "A * A^-1 = I");
  }
  for (auto key : kFixtureKeys) {
    const ColoredGraph g = builtin(key).graph;
    const auto solved = solve_gij_from_gijk(triple_counts4(g), static_cast<long>(g.order()) / 2);
    const auto pairs = pair_counts4(g);
    for (std::size_t i = 0; i < 10; ++i) require(solved[i] == Rational(pairs[i]), std::string(key) + ": solved g_ij");
  }
}

void battery(const ColoredGraph& g, const std::string& name, long* relation_checks) {
  const FaceVector f = face_vector(g);
  require(dehn_sommerville_residuals(f) == std::array<long, 3>{0, 0, 0}, name + ": Dehn-Sommerville");
  if (!is_contracted(g)) return;
  require(f1_identity_residual(g) == 0, name + ": order/f1 identity");
  for (const auto& e : cyclic_permutations(4)) {
    require(check_genus_relations(g, e).all_zero(), name + ": genus relations " + e.to_string());
    ++*relation_checks;
  }
}

void identity_battery() {
  long relation_checks = 0;
  for (auto key : kFixtureKeys) battery(builtin(key).graph, std::string(key), &relation_checks);
  EnumFilter f;
  f.require_manifold_conditions = true;
  EnumOptions opts;
  opts.threads = 4;
  const auto graphs = enumerate(5, kDefaultMaxOrder, f, opts);
  require(!graphs.empty(), "enumeration produced candidates");
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    battery(graphs[i], "enumerated #" + std::to_string(i), &relation_checks);
  }
  std::cout << "  (" << kFixtureKeys.size() << " fixtures, " << graphs.size() << " enumerated graphs, "
            << relation_checks << " relation checks)\n";
}

void bound_tables() {
  for (long r = 0; r < 20; ++r) {
    require(lens_times_circle_bounds(r) == LowerBounds{10 * r + 4, 5 * r + 1}, "M3xS1");
  }
  int pairs = 0;
  for (long a = 1; a <= 5; ++a) {
    for (long b = 1; b <= 4; ++b) {
      const auto tt = surface_product_bounds(SurfaceProduct::TxT, a, b);
      const auto tu = surface_product_bounds(SurfaceProduct::TxU, a, b);
      const auto uu = surface_product_bounds(SurfaceProduct::UxU, a, b);
      require(tt.bounds == LowerBounds{12 * a * b + 8 * a + 8 * b + 6, 8 * a * b + 2 * a + 2 * b + 4}, "TxT");
      require(tu.bounds == LowerBounds{6 * a * b + 8 * a + 4 * b + 6, 4 * a * b + 2 * a + b + 4}, "TxU");
      require(uu.bounds == LowerBounds{3 * a * b + 4 * a + 4 * b + 6, 2 * a * b + a + b + 4}, "UxU");
      require(tt.bounds == theorem1_lower_bounds({(2 - 2 * a) * (2 - 2 * b), 2 * a + 2 * b, {}}), "TxT general");
      require(tu.bounds == theorem1_lower_bounds({(2 - 2 * a) * (2 - b), 2 * a + b, {}}), "TxU general");
      require(uu.bounds == theorem1_lower_bounds({(2 - a) * (2 - b), a + b, {}}), "UxU general");
      ++pairs;
    }
  }
  require(pairs == 20, "20 parameter pairs");
}

void enumeration_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t classes = 0;
  for (auto [colors, max_order] : std::vector<std::pair<int, Vertex>>{{3, 6}, {5, 4}}) {
    for (Vertex n = 2; n <= max_order; n += 2) {
      const auto mine = enumerate_order(colors, n, {});
      const auto brute = testing::brute_force_classes(colors, n);
      const std::string tag = std::to_string(colors) + " colors, order " + std::to_string(n);
      require(mine.size() == brute.size(), tag + ": count");
      std::multiset<std::vector<std::vector<Vertex>>> a;
      std::multiset<std::vector<std::vector<Vertex>>> b;
      for (const auto& g : mine) a.insert(testing::brute_force_canonical(g));
      for (const auto& g : brute) b.insert(testing::brute_force_canonical(g));
      require(a == b, tag + ": canonical-code multiset");
      classes += mine.size();
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 30.0, "oracle under 30 s");
  std::cout << "  (" << classes << " classes, " << secs << " s)\n";
}

ColoredGraph shuffled(const ColoredGraph& g, std::mt19937_64& rng, bool colors_too) {
  const auto vmap = testing::random_vertex_permutation(g.order(), rng);
  std::vector<int> cmap(static_cast<std::size_t>(g.num_colors()));
  std::iota(cmap.begin(), cmap.end(), 0);
  if (colors_too) std::shuffle(cmap.begin(), cmap.end(), rng);
  return ColoredGraph::from_involutions(g.num_colors(), testing::apply_maps(g, vmap, cmap));
}

void properties() {
  std::mt19937_64 rng(20240601);
  int iso_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int colors = 3 + static_cast<int>(rng() % 3);
    const Vertex n = 2 * static_cast<Vertex>(1 + rng() % 4);
    const ColoredGraph a = testing::random_graph(colors, n, rng);
    const ColoredGraph b = trial % 2 == 0 ? shuffled(a, rng, trial % 4 == 0) : testing::random_graph(colors, n, rng);
    for (bool allow : {false, true}) {
      const bool iso = are_isomorphic(a, b, allow).has_value();
      require(iso == (canonical_code(a, allow) == canonical_code(b, allow)), "canonical code <=> isomorphism");
      if (n <= 6) require(iso == testing::brute_force_isomorphic(a, b, allow), "isomorphism vs brute force");
      iso_pairs += iso;
    }
  }
  require(iso_pairs >= 100, "enough isomorphic pairs");

  for (int trial = 0; trial < 100; ++trial) {
    const ColoredGraph g = testing::random_bipartite_graph(5, 2 * static_cast<Vertex>(1 + rng() % 8), rng);
    if (!is_connected(g)) continue;
    for (const auto& e : cyclic_permutations(4)) require(chi_epsilon(g, e) % 2 == 0, "bipartite => chi_eps even");
  }

  for (int trial = 0; trial < 100; ++trial) {
    const ColoredGraph g = testing::random_graph(5, 2 * static_cast<Vertex>(1 + rng() % 8), rng);
    if (!is_connected(g)) continue;
    std::vector<Color> seq{0, 1, 2, 3, 4};
    std::shuffle(seq.begin(), seq.end(), rng);
    const CyclicPermutation canonical(seq);
    std::vector<Color> other = seq;
    std::rotate(other.begin(), other.begin() + static_cast<long>(rng() % 5), other.end());
    if (rng() % 2) std::reverse(other.begin(), other.end());
    require(rho_epsilon(g, other) == rho_epsilon(g, canonical), "rho_eps invariant on the dihedral class");
  }

  for (auto key : kFixtureKeys) {
    const Fixture fx = builtin(key);
    if (!is_semisimple(fx.graph, fx.declared)) continue;
    const HalfInteger gap = regular_genus_of_graph(fx.graph) - whole(fx.declared.rank);
    require(gap.is_integer() && (gap.twice_value() / 2) % 2 == 0, std::string(key) + ": rho - m even");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"S4 order-2 gem: face vector, chi, genus, complexity, bounds attained", sphere},
      {"order-10 S3-bundle fixtures: bipartiteness, counts, genus, semi-simple type 1", bundles},
      {"RP4 fixture: chi, counts, genus, residue genus, complexity, order identity", projective},
      {"S2xRP2 fixture: chi, genus 5, complexity 11, bounds (10,5)", sphere_times_rp2},
      {"connected sums: type-2 candidates with additive k and rho, welding-independent", connected_sums},
      {"linear system: exact inverse and recovered pair counts", linear_system},
      {"identity battery on fixtures and enumerated manifold candidates", identity_battery},
      {"bound tables for M3xS1 and surface products", bound_tables},
      {"enumeration against exhaustive oracle", enumeration_oracle},
      {"property suite: canonical codes, parity, dihedral invariance", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string status = "PASS";
    std::string detail;
    try {
      criteria[i].second();
    } catch (const Failure& f) {
      status = "FAIL";
      detail = f.what;
    } catch (const std::exception& e) {
      status = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    std::cout << status << " [" << (i + 1) << "] " << criteria[i].first;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n" << std::flush;
    failed += status == "FAIL";
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
