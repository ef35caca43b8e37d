#pragma once

// Command-line front end. run() is separate from main() so the test suites can drive it in-process.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gemkit/bounds.hpp"
#include "gemkit/catalog.hpp"
#include "gemkit/colored_graph.hpp"
#include "gemkit/complex_invariants.hpp"
#include "gemkit/fixtures.hpp"
#include "gemkit/io.hpp"
#include "gemkit/isomorphism.hpp"
#include "gemkit/regular_genus.hpp"

namespace gemkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

/// Graph source: "builtin:KEY", "-" for stdin, or a file path.
inline ColoredGraph load_source(const std::string& source, std::istream& in) {
  if (source.rfind("builtin:", 0) == 0) return builtin(source.substr(8)).graph;
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(source);
    if (!file) throw GemError(ErrorCode::ParseError, "cannot open '" + source + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_graph(text);
}

// Exactly one graph from a positional path or --builtin; stdin when neither is given.
inline ColoredGraph load_single(const std::string& path, const std::string& key, std::istream& in) {
  if (!path.empty() && !key.empty()) throw UsageError("give either a graph file or --builtin, not both");
  if (!key.empty()) return builtin(key).graph;
  return load_source(path.empty() ? "-" : path, in);
}

inline unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GEMKIT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

inline std::string render_graph(const ColoredGraph& g, const std::string& format) {
  return format == "compact" ? serialize_compact(g) : serialize_json(g);
}

inline ordered_json genus_json(const ColoredGraph& g) {
  const GenusReport report = regular_genus_report(g);
  ordered_json by_perm = ordered_json::object();
  for (const auto& [e, r] : report.by_perm) by_perm[e.to_string()] = r.to_string();
  ordered_json argmin = ordered_json::array();
  for (const auto& e : report.argmin) argmin.push_back(e.to_string());
  ordered_json j;
  j["rho_by_perm"] = std::move(by_perm);
  j["rho"] = report.rho.to_string();
  j["argmin"] = std::move(argmin);
  if (g.dimension() == 4 && is_contracted(g)) {
    ordered_json residue = ordered_json::object();
    for (Color i = 0; i < 5; ++i) {
      ordered_json per = ordered_json::object();
      for (const auto& [e, r] : report.by_perm) per[e.to_string()] = residue_genus(g, i, e).to_string();
      residue[std::to_string(i)] = std::move(per);
    }
    j["residue_rho"] = std::move(residue);
  } else {
    j["residue_rho"] = nullptr;
  }
  return j;
}

inline void print_human(std::ostream& out, const ordered_json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object()) {
      out << indent << it.key() << ":\n";
      print_human(out, *it, indent + "  ");
    } else if (it->is_string()) {
      out << indent << it.key() << ": " << it->get<std::string>() << "\n";
    } else {
      out << indent << it.key() << ": " << it->dump() << "\n";
    }
  }
}

inline void emit(Streams& s, const ordered_json& j, const std::string& format) {
  if (format == "human") {
    print_human(s.out, j);
  } else {
    s.out << j.dump(2) << "\n";
  }
}

inline ordered_json bounds_json(const LowerBounds& b) {
  ordered_json j;
  j["k_lb"] = b.k;
  j["genus_lb"] = b.genus;
  return j;
}

inline ordered_json check_json(const ColoredGraph& g, std::optional<long> rank, std::optional<long> chi_decl) {
  ordered_json j;
  j["colors"] = g.num_colors();
  j["order"] = g.order();
  const bool connected = is_connected(g);
  j["connected"] = connected;
  if (!connected) throw GemError(ErrorCode::Disconnected, "graph is not connected");
  const bool contracted = is_contracted(g);
  j["contracted"] = contracted;
  j["bipartite"] = is_bipartite(g);
  const FaceVector f = face_vector(g);
  const long chi = alternating_sum(f);
  j["f"] = f.f;
  j["chi"] = chi;
  const GenusReport genus = regular_genus_report(g);
  j["rho"] = genus.rho.to_string();
  if (g.dimension() != 4) return j;

  const ManifoldCheck mc = necessary_manifold_conditions(g);
  j["manifold_conditions"] = {{"passed", mc.passed}, {"failures", mc.failures}};
  const auto ds = dehn_sommerville_residuals(f, chi);
  j["dehn_sommerville_residuals"] = ds;
  if (!contracted) return j;

  j["f1_identity_residual"] = f1_identity_residual(g);
  bool relations_ok = true;
  for (const auto& e : cyclic_permutations(4)) relations_ok = relations_ok && check_genus_relations(g, e).all_zero();
  j["genus_relations_zero"] = relations_ok;
  j["k_graph"] = gem_complexity_of_graph(g);
  j["rank_ub"] = rank_upper_bound(g);
  const auto type = semisimple_type(g);
  j["semisimple_type"] = type ? ordered_json(*type) : ordered_json(nullptr);
  if (rank) {
    const ManifoldParams p{chi_decl.value_or(chi), *rank, std::nullopt};
    j["rank"] = *rank;
    j["semisimple"] = is_semisimple(g, p);
    j["bounds"] = bounds_json(theorem1_lower_bounds(p));
    j["verdict"] = std::string(to_string(bound_verdict(g, p)));
    if (auto note = genus_rank_annotation(genus.rho, *rank, is_bipartite(g))) j["note"] = *note;
  }
  return j;
}

inline int run(const std::vector<std::string>& args, Streams s) {
  CLI::App app{"gemkit: invariants of edge-colored graphs representing PL manifolds", "gemkit"};
  app.require_subcommand(1);
  std::string format = "json";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "json | compact | human")
        ->check(CLI::IsMember({"json", "compact", "human"}));
    sub->add_flag_callback("--compact", [&format] { format = "compact"; }, "same as --format compact");
    sub->add_flag_callback("--human", [&format] { format = "human"; }, "same as --format human");
  };

  // info
  std::string info_path, info_key;
  auto* info = app.add_subcommand("info", "invariant report of one graph");
  info->add_option("graph", info_path, "graph file, builtin:KEY or - for stdin");
  info->add_option("--builtin", info_key, "built-in fixture key");
  add_format(info);

  // genus
  std::string genus_path, genus_key;
  auto* genus = app.add_subcommand("genus", "regular genus over all cyclic permutations");
  genus->add_option("graph", genus_path, "graph file, builtin:KEY or - for stdin");
  genus->add_option("--builtin", genus_key, "built-in fixture key");
  add_format(genus);

  // bounds
  std::optional<long> bounds_chi;
  std::optional<long> bounds_rank;
  std::string bounds_graph, bounds_key, bounds_product;
  auto* bounds = app.add_subcommand("bounds", "lower bounds for gem-complexity and regular genus");
  bounds->add_option("--chi", bounds_chi, "Euler characteristic");
  bounds->add_option("--rank", bounds_rank, "rank of the fundamental group")->check(CLI::NonNegativeNumber);
  bounds->add_option("--graph", bounds_graph, "graph file (chi is computed from it)");
  bounds->add_option("--builtin", bounds_key, "built-in fixture key (chi is computed from it)");
  bounds->add_option("--product", bounds_product, "TxT:g,r | TxU:g,h | UxU:h,k | M3xS1:r");
  add_format(bounds);

  // consum
  std::vector<std::string> consum_paths, consum_keys;
  long long va = -1, vb = -1;
  auto* consum = app.add_subcommand("consum", "graph connected sum");
  consum->add_option("graphs", consum_paths, "graph files (files first, then --builtin fixtures)");
  consum->add_option("--builtin", consum_keys, "built-in fixture key (repeatable)");
  consum->add_option("--va", va, "vertex removed from the first graph")->required();
  consum->add_option("--vb", vb, "vertex removed from the second graph")->required();
  add_format(consum);

  // check
  std::string check_path, check_key;
  std::optional<long> check_rank;
  std::optional<long> check_chi;
  auto* check = app.add_subcommand("check", "identity battery, manifold conditions and semi-simplicity");
  check->add_option("graph", check_path, "graph file, builtin:KEY or - for stdin");
  check->add_option("--builtin", check_key, "built-in fixture key");
  check->add_option("--rank", check_rank, "declared rank of the fundamental group")->check(CLI::NonNegativeNumber);
  check->add_option("--chi", check_chi, "declared Euler characteristic (must match the graph)");
  add_format(check);

  // enum
  int enum_colors = 5;
  long enum_max_order = 2;
  EnumFilter enum_filter;
  bool enum_survey = false;
  bool enum_large = false;
  unsigned enum_threads = 0;
  auto* en = app.add_subcommand("enum", "isomorph-free enumeration of small graphs");
  en->add_option("--colors", enum_colors, "number of colors (d+1)")->check(CLI::Range(3, 8));
  en->add_option("--max-order", enum_max_order, "largest order (even)")->check(CLI::PositiveNumber);
  en->add_flag("--bipartite", enum_filter.bipartite_only, "bipartite graphs only");
  en->add_flag("--contracted", enum_filter.contracted_only, "contracted graphs only");
  en->add_flag("--connected", enum_filter.connected_only, "connected graphs only");
  en->add_flag("--manifold", enum_filter.require_manifold_conditions, "graphs passing the 4-manifold conditions");
  en->add_flag("--survey", enum_survey, "emit the grouped invariant table instead of graphs");
  en->add_flag("--allow-large", enum_large, "allow orders above the default cap (progress on stderr)");
  en->add_option("--threads", enum_threads, "worker threads (default: all cores, capped by GEMKIT_THREADS)");

  // iso
  std::string iso_a, iso_b;
  bool iso_colors = false;
  auto* iso = app.add_subcommand("iso", "isomorphism test with certificate");
  iso->add_option("first", iso_a, "graph file or builtin:KEY")->required();
  iso->add_option("second", iso_b, "graph file or builtin:KEY")->required();
  iso->add_flag("--color-perm", iso_colors, "allow permuting colors");

  // builtin
  std::string builtin_key;
  bool builtin_list = false;
  bool builtin_about = false;
  auto* bi = app.add_subcommand("builtin", "print a built-in fixture");
  bi->add_option("key", builtin_key, "s4 | s1xs3 | s1~s3 | rp4 | s2xrp2");
  bi->add_flag("--list", builtin_list, "list fixture keys");
  bi->add_flag("--about", builtin_about, "print declared parameters and provenance");
  add_format(bi);

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, s.out, s.err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, s.out, s.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, s.out, s.err);
    s.err << app.help();
    return kExitUsage;
  }

  try {
    if (*info) {
      const ColoredGraph g = load_single(info_path, info_key, s.in);
      emit(s, to_json(compute_invariants(g)), format);
      return kExitOk;
    }
    if (*genus) {
      const ColoredGraph g = load_single(genus_path, genus_key, s.in);
      if (format == "human") {
        const GenusReport r = regular_genus_report(g);
        for (const auto& [e, rho] : r.by_perm) s.out << e.to_string() << "  " << rho << "\n";
        s.out << "rho: " << r.rho << "\n";
      } else {
        s.out << genus_json(g).dump(2) << "\n";
      }
      return kExitOk;
    }
    if (*bounds) {
      ordered_json j;
      if (!bounds_product.empty()) {
        const auto colon = bounds_product.find(':');
        if (colon == std::string::npos) throw UsageError("--product needs KIND:args");
        const std::string kind = bounds_product.substr(0, colon);
        std::vector<long> nums;
        std::stringstream ss(bounds_product.substr(colon + 1));
        for (std::string tok; std::getline(ss, tok, ',');) nums.push_back(std::stol(tok));
        j["product"] = bounds_product;
        if (kind == "M3xS1") {
          if (nums.size() != 1) throw UsageError("M3xS1 takes one argument");
          const LowerBounds b = lens_times_circle_bounds(nums[0]);
          j["chi"] = 0;
          j["rank"] = nums[0] + 1;
          j["k_lb"] = b.k;
          j["genus_lb"] = b.genus;
        } else {
          if (nums.size() != 2) throw UsageError(kind + " takes two arguments");
          SurfaceProduct sp{};
          if (kind == "TxT") sp = SurfaceProduct::TxT;
          else if (kind == "TxU") sp = SurfaceProduct::TxU;
          else if (kind == "UxU") sp = SurfaceProduct::UxU;
          else throw UsageError("unknown product kind '" + kind + "'");
          const SurfaceProductResult r = surface_product_bounds(sp, nums[0], nums[1]);
          j["chi"] = r.params.chi;
          j["rank"] = r.params.rank;
          j["k_lb"] = r.bounds.k;
          j["genus_lb"] = r.bounds.genus;
        }
        emit(s, j, format);
        return kExitOk;
      }
      if (!bounds_rank) throw UsageError("bounds needs --rank (or --product)");
      std::optional<ColoredGraph> g;
      if (!bounds_graph.empty() || !bounds_key.empty()) g = load_single(bounds_graph, bounds_key, s.in);
      ManifoldParams p;
      p.rank = *bounds_rank;
      if (g) {
        p.chi = euler_characteristic(*g);
        if (bounds_chi && *bounds_chi != p.chi) {
          throw GemError(ErrorCode::ChiMismatch, "declared chi differs from the graph's chi " + std::to_string(p.chi));
        }
      } else if (bounds_chi) {
        p.chi = *bounds_chi;
      } else {
        throw UsageError("bounds needs --chi or a graph");
      }
      const LowerBounds b = theorem1_lower_bounds(p);
      j["chi"] = p.chi;
      j["rank"] = p.rank;
      j["k_lb"] = b.k;
      j["genus_lb"] = b.genus;
      if (g) {
        const HalfInteger rho = regular_genus_of_graph(*g);
        j["k_graph"] = gem_complexity_of_graph(*g);
        j["rho"] = rho.to_string();
        j["verdict"] = std::string(to_string(bound_verdict(*g, p)));
        if (auto note = genus_rank_annotation(rho, p.rank, is_bipartite(*g))) j["note"] = *note;
      }
      emit(s, j, format);
      return kExitOk;
    }
    if (*consum) {
      std::vector<ColoredGraph> graphs;
      for (const auto& p : consum_paths) graphs.push_back(load_source(p, s.in));
      for (const auto& k : consum_keys) graphs.push_back(builtin(k).graph);
      if (graphs.size() != 2) throw UsageError("consum needs exactly two graphs");
      const ColoredGraph sum = connected_sum(graphs[0], va, graphs[1], vb);
      for (int i = 0; i < 2; ++i) {
        if (auto side = bipartition(graphs[static_cast<std::size_t>(i)])) {
          const long long v = i == 0 ? va : vb;
          s.err << (i == 0 ? "va" : "vb") << "=" << v << " lies in bipartition class "
                << static_cast<int>((*side)[static_cast<std::size_t>(v)]) << "\n";
        }
      }
      s.out << render_graph(sum, format) << "\n";
      return kExitOk;
    }
    if (*check) {
      const ColoredGraph g = load_single(check_path, check_key, s.in);
      emit(s, check_json(g, check_rank, check_chi), format);
      return kExitOk;
    }
    if (*en) {
      if (enum_max_order % 2 != 0) throw UsageError("--max-order must be even");
      if (enum_colors == 5 && enum_max_order > kDefaultMaxOrder && !enum_large) {
        throw UsageError("orders above " + std::to_string(kDefaultMaxOrder) + " need --allow-large");
      }
      EnumOptions opts;
      opts.threads = worker_count(enum_threads);
      if (enum_large) {
        opts.progress = [&s](long order, int color, std::size_t classes) {
          s.err << "order " << order << ": colors 0.." << color << " -> " << classes << " classes\n";
        };
      }
      if (enum_survey) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : survey(enum_colors, enum_max_order, enum_filter, opts)) {
          ordered_json row;
          row["order"] = r.order;
          row["chi"] = r.chi;
          row["rho"] = r.rho.to_string();
          row["type"] = r.type ? ordered_json(*r.type) : ordered_json(nullptr);
          row["count"] = r.count;
          rows.push_back(std::move(row));
        }
        s.out << rows.dump(2) << "\n";
        return kExitOk;
      }
      const auto graphs = enumerate(enum_colors, enum_max_order, enum_filter, opts);
      ordered_json by_order = ordered_json::object();
      for (const auto& g : graphs) {
        s.out << serialize_compact(g) << "\n";
        const std::string key = std::to_string(g.order());
        by_order[key] = by_order.value(key, 0) + 1;
      }
      ordered_json footer;
      footer["colors"] = enum_colors;
      footer["max_order"] = enum_max_order;
      footer["count"] = graphs.size();
      footer["by_order"] = std::move(by_order);
      s.out << footer.dump() << "\n";
      return kExitOk;
    }
    if (*iso) {
      const ColoredGraph a = load_source(iso_a, s.in);
      const ColoredGraph b = load_source(iso_b, s.in);
      ordered_json j;
      if (auto cert = are_isomorphic(a, b, iso_colors)) {
        j["isomorphic"] = true;
        j["vertex_map"] = cert->vertex_map;
        j["color_map"] = cert->color_map;
        s.out << j.dump() << "\n";
        return kExitOk;
      }
      j["isomorphic"] = false;
      s.out << j.dump() << "\n";
      return kExitDomain;
    }
    if (*bi) {
      if (builtin_list) {
        for (auto k : kFixtureKeys) s.out << k << "\n";
        return kExitOk;
      }
      if (builtin_key.empty()) throw UsageError("builtin needs a key or --list");
      const Fixture fx = builtin(builtin_key);
      if (builtin_about) {
        ordered_json j;
        j["key"] = fx.key;
        j["name"] = fx.declared.name.value_or("");
        j["chi"] = fx.declared.chi;
        j["rank"] = fx.declared.rank;
        j["order"] = fx.graph.order();
        j["provenance"] = fx.provenance;
        emit(s, j, format == "compact" ? "json" : format);
      } else {
        s.out << render_graph(fx.graph, format) << "\n";
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    s.err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  } catch (const GemError& e) {
    s.err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    s.err << "usage error: bad number (" << e.what() << ")\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gemkit::cli
