#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "vtypes/algebraic.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/vertex_types.hpp"

namespace vtypes {

/// Every spec of the family with 1 <= h <= max_h and cells in 1..max_cell,
/// ordered by (h, m, n) lexicographically.
std::vector<GraphSpec> enumerate_specs(Family f, int max_h, int max_cell);

/// Seeded std::mt19937_64 draws: h uniform in 1..max_h, cells in 1..max_cell.
std::vector<GraphSpec> random_specs(Family f, std::size_t count, std::uint64_t seed, int max_h, int max_cell);

/// Results in input order whatever the worker count; items are split into
/// contiguous blocks, one per worker.
template <class T, class F>
auto parallel_map(const std::vector<T>& items, F fn, std::size_t workers)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  workers = std::max<std::size_t>(1, std::min(workers, items.size()));
  if (workers <= 1) {
    for (std::size_t k = 0; k < items.size(); ++k) slots[k].emplace(fn(items[k]));
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    const std::size_t block = (items.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w * block; k < std::min(items.size(), (w + 1) * block); ++k)
            slots[k].emplace(fn(items[k]));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct ChainFinding {
  GraphSpec spec;
  double value = 0.0;
  std::optional<AlgebraicNumber> exact;
  std::size_t index = 0;             // 1-based position in the spectrum
  std::vector<Vertex> non_downers;   // vertices with zero eigenspace row
  std::vector<CellTag> cells;        // cells containing them
  bool cross_validated = false;      // classify_all agrees with the eigenspace route
  std::optional<bool> exact_agrees;  // set when an exact minimal polynomial is known
};

/// Non-downer vertices of every DNG spec in the bounds, for every nonzero eigenvalue.
std::vector<ChainFinding> search_chain_neutrals(int max_h, int max_cell, std::size_t workers = 1,
                                                ClassifierOptions opts = {});

struct RemarkFinding {
  GraphSpec spec;
  int m_h = 0;
  std::size_t multiplicity = 0;  // mult(-m_h, G)
  VertexType v_h = VertexType::Downer;
  VertexType u_h = VertexType::Downer;
};

/// NSG specs with m_h >= 2 in the bounds where -m_h is an eigenvalue.
std::vector<RemarkFinding> search_remark_mh(int max_h, int max_cell, std::size_t workers = 1,
                                            ClassifierOptions opts = {});

}  // namespace vtypes
