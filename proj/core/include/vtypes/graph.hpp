#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vtypes/matrix.hpp"

namespace vtypes {

using Vertex = std::size_t;

/// NSG = nested split (connected threshold) graph, DNG = double nested (connected chain) graph.
enum class Family { Threshold, Chain };

std::string_view family_name(Family f);  // "nsg" / "dng"

/// Cell-size parameterization NSG(m_1..m_h; n_1..n_h) or DNG(m_1..m_h; n_1..n_h).
struct GraphSpec {
  Family family = Family::Threshold;
  std::vector<int> m;  // co-clique (NSG) or first colour class (DNG) cell sizes
  std::vector<int> n;  // clique (NSG) or second colour class (DNG) cell sizes

  std::size_t h() const { return m.size(); }
  int total_m() const;  // M_h
  int total_n() const;  // N_h
  std::size_t order() const { return static_cast<std::size_t>(total_m() + total_n()); }

  auto operator<=>(const GraphSpec&) const = default;
};

GraphSpec nsg(std::vector<int> m, std::vector<int> n);
GraphSpec dng(std::vector<int> m, std::vector<int> n);
GraphSpec half_graph_spec(int h);

/// Throws SpecError naming the offending index when the invariants fail.
void validate(const GraphSpec& spec);

/// Parses `nsg:2,2,2;2,3,2`, `dng:1,1;1,1` or `half:4`. Throws SpecError naming the bad token.
GraphSpec parse_spec(std::string_view text);
std::string format_spec(const GraphSpec& spec);

enum class Side : std::uint8_t { U, V };

/// Cell membership U_i / V_i, 1-based index.
struct CellTag {
  Side side = Side::U;
  int index = 1;

  auto operator<=>(const CellTag&) const = default;
  std::string str() const;  // "U2"
};

/// Simple undirected graph on vertices 0..order-1 with optional cell labels.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// `adjacency` must be symmetric with zero diagonal; throws DomainError otherwise.
  Graph(DenseMatrix<std::uint8_t> adjacency, std::vector<std::optional<CellTag>> labels = {});

  static Graph from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.rows(); }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_(u, v) != 0; }
  const DenseMatrix<std::uint8_t>& adjacency() const { return adjacency_; }

  std::size_t degree(Vertex v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // u < v, lexicographic
  std::vector<Vertex> neighbors(Vertex v) const;

  const std::optional<CellTag>& label(Vertex v) const { return labels_[v]; }
  std::span<const std::optional<CellTag>> labels() const { return labels_; }
  /// Distinct tags present, ordered U_1..U_h then V_1..V_h.
  std::vector<CellTag> cells() const;
  std::vector<Vertex> cell_members(CellTag tag) const;
  std::optional<Vertex> find_vertex(CellTag tag) const;  // first member

  /// Equality of adjacency only (labels ignored).
  bool same_adjacency(const Graph& other) const { return adjacency_ == other.adjacency_; }
  bool operator==(const Graph&) const = default;

 private:
  DenseMatrix<std::uint8_t> adjacency_;
  std::vector<std::optional<CellTag>> labels_;
};

/// Vertices ordered U_1..U_h then V_1..V_h, each cell contiguous.
Graph build(const GraphSpec& spec);
/// H(h) = DNG(1,..,1; 1,..,1). Throws SpecError for h < 1.
Graph half_graph(int h);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // centre is vertex 0

/// Induced subgraph on `keep` (kept in the given order); labels carried over.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);
Graph delete_vertex(const Graph& g, Vertex v);
/// Adds a twin u of v with N(u) = N(v), inserted at index v+1 and carrying v's tag.
Graph duplicate_vertex(const Graph& g, Vertex v);

/// Forbidden induced subgraphs: threshold {P4, 2K2, C4}, chain {2K2, C3, C5}.
bool validate_family(const Graph& g, Family family);

// Derived specifications used by the localization theorems. Each throws
// DomainError when s lies outside the range where the construction is defined.

/// G' = NSG(m_{s+1..h}; n_{s+1..h}), 1 <= s <= h-1.
GraphSpec nsg_tail(const GraphSpec& spec, int s);
/// G'' = NSG(m_{1..s}; n_{1..s}), 1 <= s <= h.
GraphSpec nsg_head(const GraphSpec& spec, int s);
/// H_s = G - V_s = NSG(m_1,..,m_{s-1}+m_s,..,m_h; n without n_s), 2 <= s <= h.
GraphSpec nsg_merged(const GraphSpec& spec, int s);
/// G_s' = DNG(m_1..m_{s-1}; n_{h-s+2}..n_h), 2 <= s <= h.
GraphSpec dng_head(const GraphSpec& spec, int s);
/// G_s'' = DNG(m_s..m_h; n_1..n_{h-s+1}), 1 <= s <= h.
GraphSpec dng_tail(const GraphSpec& spec, int s);

struct DerivedSpecs {
  std::optional<GraphSpec> tail;    // NSG G', or DNG G_s''
  std::optional<GraphSpec> head;    // NSG G'', or DNG G_s'
  std::optional<GraphSpec> merged;  // NSG H_s only
};

/// All derived specs that exist for index s (1 <= s <= h, else DomainError).
DerivedSpecs derived_specs(const GraphSpec& spec, int s);

/// Vertex ids of cells U_a..U_b / V_a..V_b in build(spec).
std::vector<Vertex> cell_range(const GraphSpec& spec, Side side, int first, int last);

}  // namespace vtypes
