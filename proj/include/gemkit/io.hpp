#pragma once

// Graph file formats.
//
// JSON (canonical):   {"colors":5,"order":2,"matchings":[[[0,1]],[[0,1]],...]}
// Compact one-line:   5;2;c0:0-1;c1:0-1;c2:0-1;c3:0-1;c4:0-1

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "json.hpp"

namespace gemkit {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const ColoredGraph& g) {
  ordered_json matchings = ordered_json::array();
  for (Color c = 0; c < g.num_colors(); ++c) {
    ordered_json pairs = ordered_json::array();
    for (auto [u, v] : g.matching_pairs(c)) pairs.push_back({u, v});
    matchings.push_back(std::move(pairs));
  }
  ordered_json j;
  j["colors"] = g.num_colors();
  j["order"] = g.order();
  j["matchings"] = std::move(matchings);
  return j;
}

/// Canonical single-line JSON serialization.
inline std::string serialize_json(const ColoredGraph& g) { return to_json(g).dump(); }

inline std::string serialize_compact(const ColoredGraph& g) {
  std::string out = std::to_string(g.num_colors()) + ";" + std::to_string(g.order());
  for (Color c = 0; c < g.num_colors(); ++c) {
    out += ";c" + std::to_string(c) + ":";
    bool first = true;
    for (auto [u, v] : g.matching_pairs(c)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(u) + "-" + std::to_string(v);
    }
  }
  return out;
}

inline ColoredGraph from_json(const nlohmann::json& j) {
  try {
    RawGraph raw;
    raw.colors = j.at("colors").get<long long>();
    raw.order = j.at("order").get<long long>();
    for (const auto& m : j.at("matchings")) {
      auto& pairs = raw.matchings.emplace_back();
      for (const auto& p : m) {
        if (!p.is_array() || p.size() != 2) throw GemError(ErrorCode::ParseError, "edge must be a [u,v] pair");
        pairs.emplace_back(p[0].get<long long>(), p[1].get<long long>());
      }
    }
    return validate(raw);
  } catch (const nlohmann::json::exception& e) {
    throw GemError(ErrorCode::ParseError, e.what());
  }
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline long long parse_int(std::string_view s) {
  s = trim(s);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw GemError(ErrorCode::ParseError, "expected integer, got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace detail

inline ColoredGraph parse_compact(std::string_view text) {
  const auto fields = detail::split(detail::trim(text), ';');
  if (fields.size() < 2) throw GemError(ErrorCode::ParseError, "compact form needs 'colors;order;...'");
  RawGraph raw;
  raw.colors = detail::parse_int(fields[0]);
  raw.order = detail::parse_int(fields[1]);
  for (std::size_t i = 2; i < fields.size(); ++i) {
    const std::string_view field = detail::trim(fields[i]);
    const std::size_t colon = field.find(':');
    if (field.empty() || field.front() != 'c' || colon == std::string_view::npos) {
      throw GemError(ErrorCode::ParseError, "bad color field '" + std::string(field) + "'");
    }
    const long long color = detail::parse_int(field.substr(1, colon - 1));
    if (color != static_cast<long long>(i - 2)) {
      throw GemError(ErrorCode::ParseError, "color fields must be listed as c0, c1, ... in order");
    }
    auto& pairs = raw.matchings.emplace_back();
    const std::string_view body = detail::trim(field.substr(colon + 1));
    if (body.empty()) continue;
    for (std::string_view edge : detail::split(body, ',')) {
      const std::size_t dash = edge.find('-');
      if (dash == std::string_view::npos) throw GemError(ErrorCode::ParseError, "bad edge '" + std::string(edge) + "'");
      pairs.emplace_back(detail::parse_int(edge.substr(0, dash)), detail::parse_int(edge.substr(dash + 1)));
    }
  }
  return validate(raw);
}

/// Accepts either format; JSON is recognized by a leading '{'.
inline ColoredGraph parse_graph(std::string_view text) {
  const std::string_view t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw GemError(ErrorCode::ParseError, e.what());
    }
    return from_json(j);
  }
  return parse_compact(t);
}

}  // namespace gemkit
