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

#include "iodg/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <ostream>
#include <thread>

#include "iodg/rng.hpp"

namespace iodg {

CensusConfig default_census_config(int num_inputs, int num_outputs,
                                   int num_intermediates) {
  CensusConfig c;
  c.num_inputs = num_inputs;
  c.num_outputs = num_outputs;
  c.num_intermediates = num_intermediates;
  const int m = num_intermediates;
  for (int j = 0; j < num_inputs; ++j) c.input_wiring.push_back(j % m);
  for (int k = 0; k < num_outputs; ++k) {
    c.output_wiring.push_back((((m - num_outputs + k) % m) + m) % m);
  }
  for (int s = 0; s < m; ++s) {
    for (int d = 0; d < m; ++d) c.slots.emplace_back(s, d);
  }
  return c;
}

namespace {

void check_config(const CensusConfig& c) {
  const int m = c.num_intermediates;
  if (c.num_inputs < 1 || c.num_outputs < 1 || m < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "census needs at least one input, output, and intermediate");
  }
  if (m > 32) {
    throw Error(ErrorCode::InvalidArgument,
                "census kernel supports at most 32 intermediates");
  }
  if (static_cast<int>(c.input_wiring.size()) != c.num_inputs ||
      static_cast<int>(c.output_wiring.size()) != c.num_outputs) {
    throw Error(ErrorCode::InvalidArgument,
                "wiring must cover every input and output exactly once");
  }
  for (int w : c.input_wiring) {
    if (w < 0 || w >= m) {
      throw Error(ErrorCode::InvalidArgument,
                  "input wiring references a missing intermediate");
    }
  }
  for (int w : c.output_wiring) {
    if (w < 0 || w >= m) {
      throw Error(ErrorCode::InvalidArgument,
                  "output wiring references a missing intermediate");
    }
  }
  std::vector<std::pair<int, int>> sorted = c.slots;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidArgument, "duplicate variable slot");
  }
  for (const auto& [s, d] : c.slots) {
    if (s < 0 || s >= m || d < 0 || d >= m) {
      throw Error(ErrorCode::InvalidArgument,
                  "variable slot references a missing intermediate");
    }
  }
  if (c.mode == CensusConfig::Mode::Sample && c.sample_n == 0) {
    throw Error(ErrorCode::InvalidArgument, "sample mode needs sample_n > 0");
  }
}

// All constant data the per-mask classifier needs, laid out once.
struct Kernel {
  int m = 0;
  std::vector<int> sources;             // distinct wired-from intermediates
  std::vector<std::uint32_t> in_mask;   // per input: bit of its source node
  std::vector<std::uint32_t> out_bits;  // per output: bit of its feed node
  int num_inputs = 0, num_outputs = 0;
  std::vector<std::pair<int, int>> slots;

  explicit Kernel(const CensusConfig& c)
      : m(c.num_intermediates),
        num_inputs(c.num_inputs),
        num_outputs(c.num_outputs),
        slots(c.slots) {
    for (int w : c.input_wiring) {
      if (std::find(sources.begin(), sources.end(), w) == sources.end()) {
        sources.push_back(w);
      }
      in_mask.push_back(1u << w);
    }
    for (int k = 0; k < c.num_outputs; ++k) {
      out_bits.push_back(1u << c.output_wiring[k]);
    }
  }

  // Word-parallel closure from `start` over adjacency rows.
  static std::uint32_t closure(const std::uint32_t* rows,
                               std::uint32_t start) {
    std::uint32_t reach = start;
    std::uint32_t frontier = start;
    while (frontier != 0) {
      std::uint32_t next = 0;
      while (frontier != 0) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= rows[v];
      }
      frontier = next & ~reach;
      reach |= next;
    }
    return reach;
  }

  // 0 = non, 1 = partially, 2 = very, 3 = fully.
  int classify(const std::uint32_t* rows) const {
    std::uint32_t closure_of[32];
    for (int s : sources) closure_of[s] = closure(rows, 1u << s);
    bool any = false, all_some = true, all_pairs = true;
    for (int j = 0; j < num_inputs; ++j) {
      std::uint32_t reach = closure_of[std::countr_zero(in_mask[j])];
      int hits = 0;
      for (int k = 0; k < num_outputs; ++k) {
        if (reach & out_bits[k]) ++hits;
      }
      any = any || hits > 0;
      all_some = all_some && hits > 0;
      all_pairs = all_pairs && hits == num_outputs;
    }
    if (all_pairs) return 3;
    if (all_some) return 2;
    if (any) return 1;
    return 0;
  }

  void rows_from_mask(std::uint64_t mask, std::uint32_t* rows) const {
    for (int v = 0; v < m; ++v) rows[v] = 0;
    while (mask != 0) {
      int i = std::countr_zero(mask);
      mask &= mask - 1;
      rows[slots[i].first] |= 1u << slots[i].second;
    }
  }
};

void tally(std::vector<CensusRow>& rows, int k, int cls) {
  CensusRow& r = rows[k];
  ++r.total;
  switch (cls) {
    case 0: ++r.non; break;
    case 1: ++r.partially; break;
    case 2: ++r.very; break;
    case 3: ++r.fully; break;
  }
}

void merge(std::vector<CensusRow>& into, const std::vector<CensusRow>& from) {
  for (std::size_t k = 0; k < into.size(); ++k) {
    into[k].total += from[k].total;
    into[k].non += from[k].non;
    into[k].partially += from[k].partially;
    into[k].very += from[k].very;
    into[k].fully += from[k].fully;
  }
}

}  // namespace

CensusTable run_census(const CensusConfig& config,
                       const CensusProgress& progress) {
  check_config(config);
  const Kernel kernel(config);
  const std::size_t num_slots = config.slots.size();

  CensusTable table;
  table.rows.assign(num_slots + 1, CensusRow{});

  if (config.mode == CensusConfig::Mode::Sample) {
    table.sampled = true;
    table.sample_n = config.sample_n;
    table.seed = config.seed;
    std::vector<int> pool(num_slots);
    for (std::size_t k = 0; k <= num_slots; ++k) {
      Rng rng(derive_seed(config.seed, k));
      for (std::uint64_t d = 0; d < config.sample_n; ++d) {
        // Partial Fisher-Yates: the first k entries are a uniform
        // k-combination of slots.
        for (std::size_t i = 0; i < num_slots; ++i) pool[i] = static_cast<int>(i);
        for (std::size_t i = 0; i < k; ++i) {
          std::swap(pool[i], pool[i + rng.below(num_slots - i)]);
        }
        std::uint32_t rows[32] = {};
        for (std::size_t i = 0; i < k; ++i) {
          const auto& slot = config.slots[pool[i]];
          rows[slot.first] |= 1u << slot.second;
        }
        tally(table.rows, static_cast<int>(k), kernel.classify(rows));
      }
      if (progress) progress(k + 1, num_slots + 1);
    }
    return table;
  }

  if (num_slots > 63 || (1ull << num_slots) > config.budget) {
    throw Error(ErrorCode::BudgetExceeded,
                "exhaustive census over 2^" + std::to_string(num_slots) +
                    " graphs exceeds the budget");
  }
  const std::uint64_t total = 1ull << num_slots;
  unsigned n_threads = config.threads > 0
                           ? static_cast<unsigned>(config.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(
      std::min<std::uint64_t>(n_threads, std::max<std::uint64_t>(total, 1)));

  // High-order mask bits shard the universe; tallying is commutative, so
  // the merged result is independent of scheduling.
  std::vector<std::vector<CensusRow>> locals(
      n_threads, std::vector<CensusRow>(num_slots + 1));
  std::atomic<std::uint64_t> done{0};
  auto worker = [&](unsigned t) {
    std::uint64_t begin = total / n_threads * t;
    std::uint64_t end = t + 1 == n_threads ? total : total / n_threads * (t + 1);
    std::uint32_t rows[32];
    std::uint64_t since_report = 0;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      kernel.rows_from_mask(mask, rows);
      tally(locals[t], std::popcount(mask), kernel.classify(rows));
      if (progress && ++since_report == (1u << 20)) {
        done += since_report;
        since_report = 0;
        progress(done.load(), total);
      }
    }
    done += since_report;
  };
  if (n_threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < n_threads; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  for (const auto& local : locals) merge(table.rows, local);
  if (progress) progress(total, total);
  return table;
}

void emit_csv(const CensusTable& table, std::ostream& out) {
  if (table.sampled) {
    out << "# mode=sample n=" << table.sample_n << " seed=" << table.seed
        << "\n";
  }
  out << "k,total,non,partial,very,full\n";
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const CensusRow& r = table.rows[k];
    out << k << ',' << r.total << ',' << r.non << ',' << r.partially << ','
        << r.very << ',' << r.fully << "\n";
  }
}

int classify_census_member(const CensusConfig& config, std::uint64_t mask) {
  check_config(config);
  if (config.slots.size() > 63) {
    throw Error(ErrorCode::InvalidArgument,
                "mask-addressed members need at most 63 slots");
  }
  Kernel kernel(config);
  std::uint32_t rows[32];
  kernel.rows_from_mask(mask, rows);
  return kernel.classify(rows);
}

IODGraph census_member(const CensusConfig& config, std::uint64_t mask) {
  check_config(config);
  if (config.slots.size() > 63) {
    throw Error(ErrorCode::InvalidArgument,
                "mask-addressed members need at most 63 slots");
  }
  std::vector<Node> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  auto in_name = [](int j) { return "i" + std::to_string(j + 1); };
  auto out_name = [](int k) { return "o" + std::to_string(k + 1); };
  auto mid_name = [](int v) { return "n" + std::to_string(v + 1); };
  for (int j = 0; j < config.num_inputs; ++j) {
    nodes.push_back({in_name(j), NodeRole::Input, ""});
    edges.emplace_back(in_name(j), mid_name(config.input_wiring[j]));
  }
  for (int k = 0; k < config.num_outputs; ++k) {
    nodes.push_back({out_name(k), NodeRole::Output, ""});
    edges.emplace_back(mid_name(config.output_wiring[k]), out_name(k));
  }
  for (int v = 0; v < config.num_intermediates; ++v) {
    nodes.push_back({mid_name(v), NodeRole::Intermediate, ""});
  }
  for (std::size_t i = 0; i < config.slots.size(); ++i) {
    if (mask & (1ull << i)) {
      edges.emplace_back(mid_name(config.slots[i].first),
                         mid_name(config.slots[i].second));
    }
  }
  return IODGraph(std::move(nodes), edges);
}

}  // namespace iodg
