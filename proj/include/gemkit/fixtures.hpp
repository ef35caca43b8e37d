#pragma once

// Built-in crystallizations. Color legend of the source drawings:
// 0 = thick with square dashes, 1 = thick with round dots, 2 = plain,
// 3 = dotted, 4 = dashed. Vertex names v1..vN of the drawings become 0..N-1.

#include <array>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gemkit/bounds.hpp"
#include "gemkit/colored_graph.hpp"

namespace gemkit {

struct Fixture {
  std::string key;
  ColoredGraph graph;
  ManifoldParams declared;
  std::string provenance;
};

namespace detail {

using EdgeList = std::initializer_list<std::pair<int, int>>;

inline ColoredGraph from_edge_lists(long long order, std::initializer_list<EdgeList> colors, int shift) {
  RawGraph raw;
  raw.colors = static_cast<long long>(colors.size());
  raw.order = order;
  for (const auto& edges : colors) {
    auto& m = raw.matchings.emplace_back();
    for (auto [u, v] : edges) m.emplace_back(u - shift, v - shift);
  }
  return validate(raw);
}

inline ColoredGraph sphere_graph() {
  return from_edge_lists(2, {{{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}, {{0, 1}}}, 0);
}

// Ten vertices; the two drawings differ only in the pair of long color-4 edges.
inline ColoredGraph s3_bundle_graph(bool twisted) {
  std::vector<std::pair<int, int>> c4{{7, 8}, {3, 4}, {5, 6}};
  if (twisted) {
    c4.insert(c4.end(), {{1, 9}, {2, 10}});
  } else {
    c4.insert(c4.end(), {{1, 10}, {2, 9}});
  }
  const std::vector<std::vector<std::pair<int, int>>> colors = {
      {{1, 3}, {2, 4}, {9, 10}, {5, 6}, {7, 8}},
      {{3, 5}, {4, 6}, {1, 2}, {7, 8}, {9, 10}},
      {{5, 7}, {6, 8}, {3, 4}, {1, 2}, {9, 10}},
      {{7, 9}, {8, 10}, {5, 6}, {1, 2}, {3, 4}},
      c4,
  };
  RawGraph raw;
  raw.colors = 5;
  raw.order = 10;
  for (const auto& edges : colors) {
    auto& m = raw.matchings.emplace_back();
    for (auto [u, v] : edges) m.emplace_back(u - 1, v - 1);
  }
  return validate(raw);
}

inline ColoredGraph rp4_graph() {
  return from_edge_lists(16,
                         {
                             {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {13, 14}, {15, 16}},
                             {{1, 9}, {2, 10}, {3, 11}, {4, 12}, {5, 13}, {6, 14}, {7, 15}, {8, 16}},
                             {{2, 3}, {6, 7}, {10, 11}, {14, 15}, {1, 4}, {9, 12}, {5, 8}, {13, 16}},
                             {{4, 15}, {12, 7}, {2, 13}, {10, 5}, {1, 14}, {9, 6}, {8, 11}, {16, 3}},
                             {{4, 5}, {12, 13}, {3, 6}, {2, 7}, {1, 8}, {11, 14}, {10, 15}, {9, 16}},
                         },
                         1);
}

// Vertices already numbered 0..23 in the drawing.
inline ColoredGraph s2xrp2_graph() {
  return from_edge_lists(24,
                         {
                             {{1, 7}, {20, 9}, {2, 6}, {8, 18}, {10, 22}, {14, 21},
                              {0, 4}, {11, 3}, {5, 17}, {13, 16}, {12, 19}, {15, 23}},
                             {{7, 20}, {9, 2}, {1, 6}, {18, 10}, {22, 14}, {21, 8},
                              {4, 11}, {3, 0}, {17, 13}, {5, 16}, {19, 15}, {23, 12}},
                             {{0, 1}, {8, 2}, {4, 7}, {3, 10}, {5, 15}, {6, 18},
                              {22, 11}, {23, 16}, {14, 20}, {21, 9}, {12, 19}, {13, 17}},
                             {{4, 12}, {7, 19}, {16, 22}, {17, 21}, {0, 1}, {2, 6},
                              {3, 9}, {15, 20}, {11, 23}, {8, 18}, {5, 14}, {10, 13}},
                             {{14, 22}, {1, 5}, {7, 17}, {0, 2}, {4, 13}, {3, 9},
                              {6, 16}, {8, 15}, {10, 12}, {11, 20}, {18, 23}, {19, 21}},
                         },
                         0);
}

}  // namespace detail

inline constexpr std::array<std::string_view, 5> kFixtureKeys = {"s4", "s1xs3", "s1~s3", "rp4", "s2xrp2"};

inline Fixture builtin(std::string_view key) {
  if (key == "s4") {
    return {"s4", detail::sphere_graph(), {2, 0, "S4"}, "standard order-2 crystallization of the 4-sphere"};
  }
  if (key == "s1xs3") {
    return {"s1xs3", detail::s3_bundle_graph(false), {0, 1, "S1xS3"},
            "order-10 semi-simple crystallization of the orientable S3-bundle over S1 (left drawing)"};
  }
  if (key == "s1~s3") {
    return {"s1~s3", detail::s3_bundle_graph(true), {0, 1, "S1~S3"},
            "order-10 semi-simple crystallization of the non-orientable S3-bundle over S1 (right drawing)"};
  }
  if (key == "rp4") {
    return {"rp4", detail::rp4_graph(), {1, 1, "RP4"}, "order-16 semi-simple crystallization of RP4"};
  }
  if (key == "s2xrp2") {
    return {"s2xrp2", detail::s2xrp2_graph(), {2, 1, "S2xRP2"},
            "order-24 crystallization of S2xRP2 with regular genus 5"};
  }
  throw GemError(ErrorCode::UnknownFixture, std::string(key));
}

}  // namespace gemkit
