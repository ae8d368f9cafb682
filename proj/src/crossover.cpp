// Copyright 2026 The iodgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iodg/crossover.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "iodg/rng.hpp"

namespace iodg {

namespace {

IdEdge id_edge(const IODGraph& graph, const IODGraph::Edge& e) {
  return {graph.node(e.first).id, graph.node(e.second).id};
}

// Child ids for the output parent's omega' nodes. Input-parent ids win;
// colliding omega' ids take "'" suffixes until unique.
std::unordered_map<int, std::string> omega_child_names(
    const IODGraph& g, const IOPartition& pa, const IODGraph& gp,
    const IOPartition& pb, bool strict_ids) {
  std::unordered_map<int, std::string> names;
  if (strict_ids) {
    for (int v : pb.omega) names[v] = gp.node(v).id;
    return names;
  }
  std::unordered_set<std::string> taken;
  for (int v : pa.psi) taken.insert(g.node(v).id);
  std::unordered_set<std::string> originals;
  for (int v : pb.omega) originals.insert(gp.node(v).id);
  for (int v : pb.omega) {
    std::string name = gp.node(v).id;
    while (taken.count(name) ||
           (originals.count(name) && name != gp.node(v).id)) {
      name += "'";
    }
    taken.insert(name);
    names[v] = name;
  }
  return names;
}

}  // namespace

CompatibilityResult crossover_compatible(const IODGraph& g,
                                         const IOPartition& pa,
                                         const IODGraph& gp,
                                         const IOPartition& pb,
                                         bool strict_ids) {
  Membrane ma = membrane(g, pa);
  Membrane mb = membrane(gp, pb);
  if (strict_ids) {
    auto overlap = [](const IODGraph& x, const std::vector<int>& xs,
                      const IODGraph& y, const std::vector<int>& ys)
        -> std::string {
      std::unordered_set<std::string> ids;
      for (int v : xs) ids.insert(x.node(v).id);
      for (int v : ys) {
        if (ids.count(y.node(v).id)) return y.node(v).id;
      }
      return {};
    };
    if (std::string id = overlap(g, pa.psi, gp, pb.omega); !id.empty()) {
      return {false, "psi and omega' share node id " + id};
    }
    if (std::string id = overlap(gp, pb.psi, g, pa.omega); !id.empty()) {
      return {false, "psi' and omega share node id " + id};
    }
  }
  if (ma.forward.size() != mb.forward.size()) {
    return {false, "forward link counts differ: " +
                       std::to_string(ma.forward.size()) + " vs " +
                       std::to_string(mb.forward.size())};
  }
  if (ma.backward.size() != mb.backward.size()) {
    return {false, "backward link counts differ: " +
                       std::to_string(ma.backward.size()) + " vs " +
                       std::to_string(mb.backward.size())};
  }
  return {true, {}};
}

namespace {

// Kuhn's augmenting-path matching; instances here are tiny.
bool kuhn_augment(int left, const std::vector<std::vector<int>>& adj,
                  std::vector<char>& visited, std::vector<int>& match_right) {
  for (int right : adj[left]) {
    if (visited[right]) continue;
    visited[right] = 1;
    if (match_right[right] < 0 ||
        kuhn_augment(match_right[right], adj, visited, match_right)) {
      match_right[right] = left;
      return true;
    }
  }
  return false;
}

// Pairs left link i with right link assign[i]. `admissible` gates pairs when
// tag-constrained.
std::vector<int> assign_links(
    std::size_t n, const MatchingSpec& spec, Rng& rng,
    const std::function<bool(int, int)>& admissible) {
  std::vector<int> assign(n);
  if (!spec.tag_constrained) {
    std::iota(assign.begin(), assign.end(), 0);
    if (spec.mode == MatchingMode::SeededRandom) rng.shuffle(assign);
    return assign;
  }
  std::vector<std::vector<int>> adj(n);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = 0; r < n; ++r) {
      if (admissible(static_cast<int>(l), static_cast<int>(r))) {
        adj[l].push_back(static_cast<int>(r));
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (spec.mode == MatchingMode::SeededRandom) {
    rng.shuffle(order);
    for (auto& a : adj) rng.shuffle(a);
  }
  std::vector<int> match_right(n, -1);
  for (int l : order) {
    std::vector<char> visited(n, 0);
    if (!kuhn_augment(l, adj, visited, match_right)) {
      throw Error(ErrorCode::Infeasible,
                  "no tag-respecting perfect matching exists");
    }
  }
  for (std::size_t r = 0; r < n; ++r) assign[match_right[r]] = static_cast<int>(r);
  return assign;
}

CrossoverMembrane membrane_from_assignment(
    const IODGraph& g, const IODGraph& gp, const Membrane& ma,
    const Membrane& mb, const std::vector<int>& forward_assign,
    const std::vector<int>& backward_assign,
    const std::unordered_map<int, std::string>& omega_names) {
  CrossoverMembrane out;
  std::set<IdEdge> edges;
  for (std::size_t i = 0; i < forward_assign.size(); ++i) {
    const auto& f = ma.forward[i];
    const auto& fp = mb.forward[forward_assign[i]];
    out.forward_pairs.emplace_back(id_edge(g, f), id_edge(gp, fp));
    edges.insert({g.node(f.first).id, omega_names.at(fp.second)});
  }
  for (std::size_t i = 0; i < backward_assign.size(); ++i) {
    const auto& bp = mb.backward[i];
    const auto& b = ma.backward[backward_assign[i]];
    out.backward_pairs.emplace_back(id_edge(gp, bp), id_edge(g, b));
    edges.insert({omega_names.at(bp.first), g.node(b.second).id});
  }
  out.edges.assign(edges.begin(), edges.end());
  return out;
}

struct LinkSets {
  Membrane ma, mb;
  std::unordered_map<int, std::string> omega_names;
};

LinkSets prepare(const IODGraph& g, const IOPartition& pa, const IODGraph& gp,
                 const IOPartition& pb, bool strict_ids) {
  require_valid(g);
  require_valid(gp);
  CompatibilityResult compat = crossover_compatible(g, pa, gp, pb, strict_ids);
  if (!compat) {
    throw Error(ErrorCode::Incompatible,
                "partitions are not crossover compatible: " + compat.reason);
  }
  return {membrane(g, pa), membrane(gp, pb),
          omega_child_names(g, pa, gp, pb, strict_ids)};
}

}  // namespace

CrossoverMembrane build_crossover_membrane(const IODGraph& g,
                                           const IOPartition& pa,
                                           const IODGraph& gp,
                                           const IOPartition& pb,
                                           const MatchingSpec& spec,
                                           bool strict_ids) {
  LinkSets ls = prepare(g, pa, gp, pb, strict_ids);
  Rng rng(spec.seed);

  auto tag_ok_forward = [&](int l, int r) {
    return g.node(ls.ma.forward[l].first).tag ==
           gp.node(ls.mb.forward[r].second).tag;
  };
  auto tag_ok_backward = [&](int l, int r) {
    return gp.node(ls.mb.backward[l].first).tag ==
           g.node(ls.ma.backward[r].second).tag;
  };

  std::vector<int> forward_assign, backward_assign;
  if (spec.mode == MatchingMode::Explicit) {
    auto resolve = [](const std::vector<IODGraph::Edge>& links,
                      const IODGraph& graph, const IdEdge& e,
                      const char* side) {
      for (std::size_t i = 0; i < links.size(); ++i) {
        if (id_edge(graph, links[i]) == e) return static_cast<int>(i);
      }
      throw Error(ErrorCode::InvalidArgument,
                  std::string("explicit pairing names a link not in ") + side +
                      ": (" + e.first + ", " + e.second + ")");
    };
    if (spec.forward_pairs.size() != ls.ma.forward.size() ||
        spec.backward_pairs.size() != ls.ma.backward.size()) {
      throw Error(ErrorCode::InvalidArgument,
                  "explicit pairing must cover every membrane link");
    }
    forward_assign.assign(ls.ma.forward.size(), -1);
    for (const auto& [fe, fpe] : spec.forward_pairs) {
      int l = resolve(ls.ma.forward, g, fe, "F");
      int r = resolve(ls.mb.forward, gp, fpe, "F'");
      if (forward_assign[l] != -1) {
        throw Error(ErrorCode::InvalidArgument,
                    "explicit forward pairing is not a bijection");
      }
      forward_assign[l] = r;
    }
    backward_assign.assign(ls.ma.backward.size(), -1);
    for (const auto& [bpe, be] : spec.backward_pairs) {
      int l = resolve(ls.mb.backward, gp, bpe, "B'");
      int r = resolve(ls.ma.backward, g, be, "B");
      if (backward_assign[l] != -1) {
        throw Error(ErrorCode::InvalidArgument,
                    "explicit backward pairing is not a bijection");
      }
      backward_assign[l] = r;
    }
    auto check_bijection = [](const std::vector<int>& assign,
                              const char* side) {
      std::vector<char> used(assign.size(), 0);
      for (int r : assign) {
        if (r < 0 || used[r]) {
          throw Error(ErrorCode::InvalidArgument,
                      std::string("explicit ") + side +
                          " pairing is not a bijection");
        }
        used[r] = 1;
      }
    };
    check_bijection(forward_assign, "forward");
    check_bijection(backward_assign, "backward");
    if (spec.tag_constrained) {
      for (std::size_t l = 0; l < forward_assign.size(); ++l) {
        if (!tag_ok_forward(static_cast<int>(l), forward_assign[l])) {
          throw Error(ErrorCode::Infeasible,
                      "explicit forward pairing violates the tag constraint");
        }
      }
      for (std::size_t l = 0; l < backward_assign.size(); ++l) {
        if (!tag_ok_backward(static_cast<int>(l), backward_assign[l])) {
          throw Error(ErrorCode::Infeasible,
                      "explicit backward pairing violates the tag constraint");
        }
      }
    }
  } else {
    forward_assign =
        assign_links(ls.ma.forward.size(), spec, rng, tag_ok_forward);
    backward_assign =
        assign_links(ls.ma.backward.size(), spec, rng, tag_ok_backward);
  }
  return membrane_from_assignment(g, gp, ls.ma, ls.mb, forward_assign,
                                  backward_assign, ls.omega_names);
}

void for_each_crossover_membrane(
    const IODGraph& g, const IOPartition& pa, const IODGraph& gp,
    const IOPartition& pb, bool dedupe,
    const std::function<bool(const CrossoverMembrane&)>& callback,
    bool strict_ids) {
  LinkSets ls = prepare(g, pa, gp, pb, strict_ids);
  std::vector<int> fperm(ls.ma.forward.size());
  std::iota(fperm.begin(), fperm.end(), 0);
  std::set<std::vector<IdEdge>> seen;
  do {
    std::vector<int> bperm(ls.ma.backward.size());
    std::iota(bperm.begin(), bperm.end(), 0);
    do {
      CrossoverMembrane m = membrane_from_assignment(
          g, gp, ls.ma, ls.mb, fperm, bperm, ls.omega_names);
      if (dedupe && !seen.insert(m.edges).second) continue;
      if (!callback(m)) return;
    } while (std::next_permutation(bperm.begin(), bperm.end()));
  } while (std::next_permutation(fperm.begin(), fperm.end()));
}

IODGraph crossover_child(const IODGraph& g, const IOPartition& pa,
                         const IODGraph& gp, const IOPartition& pb,
                         const CrossoverMembrane& m, bool strict_ids) {
  LinkSets ls = prepare(g, pa, gp, pb, strict_ids);

  // The membrane must be a bijective pairing of exactly these partitions'
  // links, and its edge set must be the splice the pairing implies.
  auto verify_side = [](const std::vector<std::pair<IdEdge, IdEdge>>& pairs,
                        std::vector<IdEdge> left, std::vector<IdEdge> right,
                        const char* what) {
    std::vector<IdEdge> got_left, got_right;
    for (const auto& [l, r] : pairs) {
      got_left.push_back(l);
      got_right.push_back(r);
    }
    std::sort(got_left.begin(), got_left.end());
    std::sort(got_right.begin(), got_right.end());
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (got_left != left || got_right != right) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string("membrane does not match partitions: ") + what +
                      " pairing is not a bijection over the cut links");
    }
  };
  std::vector<IdEdge> fa, fb, ba, bb;
  for (const auto& e : ls.ma.forward) fa.push_back(id_edge(g, e));
  for (const auto& e : ls.mb.forward) fb.push_back(id_edge(gp, e));
  for (const auto& e : ls.mb.backward) ba.push_back(id_edge(gp, e));
  for (const auto& e : ls.ma.backward) bb.push_back(id_edge(g, e));
  verify_side(m.forward_pairs, fa, fb, "forward");
  verify_side(m.backward_pairs, ba, bb, "backward");

  std::set<IdEdge> expected;
  std::unordered_map<std::string, std::string> omega_by_id;
  for (int v : pb.omega) omega_by_id[gp.node(v).id] = ls.omega_names.at(v);
  for (const auto& [fe, fpe] : m.forward_pairs) {
    expected.insert({fe.first, omega_by_id.at(fpe.second)});
  }
  for (const auto& [bpe, be] : m.backward_pairs) {
    expected.insert({omega_by_id.at(bpe.first), be.second});
  }
  if (std::vector<IdEdge>(expected.begin(), expected.end()) != m.edges) {
    throw Error(ErrorCode::InvalidArgument,
                "membrane edge set does not match its pairing provenance");
  }

  std::vector<Node> nodes;
  for (int v : pa.psi) nodes.push_back(g.node(v));
  for (int v : pb.omega) {
    Node n = gp.node(v);
    n.id = ls.omega_names.at(v);
    nodes.push_back(std::move(n));
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : g.edges()) {
    if (pa.in_psi(e.first) && pa.in_psi(e.second)) {
      edges.emplace_back(g.node(e.first).id, g.node(e.second).id);
    }
  }
  for (const auto& e : gp.edges()) {
    if (!pb.in_psi(e.first) && !pb.in_psi(e.second)) {
      edges.emplace_back(ls.omega_names.at(e.first),
                         ls.omega_names.at(e.second));
    }
  }
  for (const auto& e : m.edges) edges.push_back(e);
  return IODGraph(std::move(nodes), edges);
}

namespace {

std::vector<int> random_psi(const IODGraph& graph, Rng& rng) {
  std::vector<int> psi(graph.input_indices());
  for (int v : graph.intermediate_indices()) {
    if (rng.next() & 1) psi.push_back(v);
  }
  return psi;
}

}  // namespace

CrossoverRecord crossover(const IODGraph& g, const IODGraph& gp,
                          const CrossoverStrategy& strategy,
                          std::uint64_t seed, const std::string& input_label,
                          const std::string& output_label) {
  require_valid(g);
  require_valid(gp);

  MatchingSpec matching = strategy.matching;
  if (matching.mode == MatchingMode::SeededRandom) {
    matching.seed = derive_seed(seed, 0x6d617463);  // independent stream
  }

  auto finish = [&](const IOPartition& pa,
                    const IOPartition& pb) -> CrossoverRecord {
    CrossoverMembrane m = build_crossover_membrane(g, pa, gp, pb, matching,
                                                   strategy.strict_ids);
    CrossoverRecord rec;
    rec.child = crossover_child(g, pa, gp, pb, m, strategy.strict_ids);
    rec.input_parent = input_label;
    rec.output_parent = output_label;
    for (int v : pa.psi) rec.psi.push_back(g.node(v).id);
    for (int v : pb.psi) rec.psi_prime.push_back(gp.node(v).id);
    rec.membrane = std::move(m);
    rec.seed = seed;
    rec.strict_ids = strategy.strict_ids;
    return rec;
  };

  auto passes_filter = [&](const IODGraph& graph, const IOPartition& p) {
    switch (strategy.filter) {
      case PartitionFilter::All:
        return true;
      case PartitionFilter::InputContiguous:
        return is_input_contiguous(graph, p);
      case PartitionFilter::OutputContiguous:
        return is_output_contiguous(graph, p);
      case PartitionFilter::Contiguous:
        return is_input_contiguous(graph, p) &&
               is_output_contiguous(graph, p);
      case PartitionFilter::LayerRespecting:
        throw Error(ErrorCode::InvalidArgument,
                    "layer-respecting search needs explicit partitions");
    }
    return false;
  };

  // A compatible pair can still refuse the matching spec (an explicit
  // pairing naming other links, or an unsatisfiable tag constraint); the
  // search skips such pairs and keeps going.
  auto try_finish = [&](const IOPartition& pa,
                        const IOPartition& pb) -> std::optional<CrossoverRecord> {
    if (!crossover_compatible(g, pa, gp, pb, strategy.strict_ids)) {
      return std::nullopt;
    }
    try {
      return finish(pa, pb);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidArgument ||
          e.code() == ErrorCode::Infeasible) {
        return std::nullopt;
      }
      throw;
    }
  };

  std::uint64_t attempts = 0;
  if (strategy.search == CrossoverStrategy::Search::Seeded) {
    Rng rng(derive_seed(seed, 0x70617274));
    while (attempts < strategy.max_attempts) {
      ++attempts;
      IOPartition pa = make_partition(g, random_psi(g, rng));
      IOPartition pb = make_partition(gp, random_psi(gp, rng));
      if (!passes_filter(g, pa) || !passes_filter(gp, pb)) continue;
      if (auto rec = try_finish(pa, pb)) return std::move(*rec);
    }
    throw Error(ErrorCode::BudgetExceeded,
                "no compatible partition pair found in " +
                    std::to_string(strategy.max_attempts) + " attempts");
  }

  // Exhaustive lexicographic scan over partition pairs.
  std::optional<CrossoverRecord> result;
  bool budget_hit = false;
  for_each_partition(g, strategy.filter, [&](const IOPartition& pa) {
    for_each_partition(gp, strategy.filter, [&](const IOPartition& pb) {
      if (++attempts > strategy.max_attempts) {
        budget_hit = true;
        return false;
      }
      result = try_finish(pa, pb);
      return !result;
    });
    return !result && !budget_hit;
  });
  if (result) return std::move(*result);
  if (budget_hit) {
    throw Error(ErrorCode::BudgetExceeded,
                "partition pair search budget exceeded (" +
                    std::to_string(strategy.max_attempts) + ")");
  }
  throw Error(ErrorCode::Incompatible,
              "no compatible partition pair exists under the filter");
}

IODGraph replay(const IODGraph& g, const IODGraph& gp,
                const CrossoverRecord& record) {
  IOPartition pa = make_partition_ids(g, record.psi);
  IOPartition pb = make_partition_ids(gp, record.psi_prime);
  return crossover_child(g, pa, gp, pb, record.membrane, record.strict_ids);
}

}  // namespace iodg
