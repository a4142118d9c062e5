#include "vtypes/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "vtypes/error.hpp"

namespace vtypes {

std::string_view family_name(Family f) { return f == Family::Threshold ? "nsg" : "dng"; }

int GraphSpec::total_m() const { return std::accumulate(m.begin(), m.end(), 0); }
int GraphSpec::total_n() const { return std::accumulate(n.begin(), n.end(), 0); }

GraphSpec nsg(std::vector<int> m, std::vector<int> n) {
  GraphSpec s{Family::Threshold, std::move(m), std::move(n)};
  validate(s);
  return s;
}

GraphSpec dng(std::vector<int> m, std::vector<int> n) {
  GraphSpec s{Family::Chain, std::move(m), std::move(n)};
  validate(s);
  return s;
}

GraphSpec half_graph_spec(int h) {
  if (h < 1) throw SpecError("half graph needs h >= 1, got " + std::to_string(h));
  return dng(std::vector<int>(h, 1), std::vector<int>(h, 1));
}

void validate(const GraphSpec& spec) {
  if (spec.m.empty() || spec.n.empty()) throw SpecError("empty cell list");
  if (spec.m.size() != spec.n.size()) {
    throw SpecError("cell lists differ in length: " + std::to_string(spec.m.size()) + " vs " +
                    std::to_string(spec.n.size()));
  }
  for (std::size_t i = 0; i < spec.m.size(); ++i) {
    if (spec.m[i] < 1) {
      throw SpecError("cell size must be >= 1: m_" + std::to_string(i + 1) + " = " +
                      std::to_string(spec.m[i]));
    }
    if (spec.n[i] < 1) {
      throw SpecError("cell size must be >= 1: n_" + std::to_string(i + 1) + " = " +
                      std::to_string(spec.n[i]));
    }
  }
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int parse_int_token(std::string_view token) {
  token = trim(token);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw SpecError("bad token '" + std::string(token) + "': expected an integer");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text) {
  std::vector<int> out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_int_token(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

GraphSpec parse_spec(std::string_view text) {
  text = trim(text);
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SpecError("bad token '" + std::string(text) + "': expected nsg:, dng: or half: prefix");
  }
  auto kind = trim(text.substr(0, colon));
  auto body = trim(text.substr(colon + 1));
  if (kind == "half") return half_graph_spec(parse_int_token(body));

  Family family;
  if (kind == "nsg") {
    family = Family::Threshold;
  } else if (kind == "dng") {
    family = Family::Chain;
  } else {
    throw SpecError("bad token '" + std::string(kind) + "': unknown family");
  }
  auto semi = body.find(';');
  if (semi == std::string_view::npos) {
    throw SpecError("bad token '" + std::string(body) + "': expected ';' between m and n lists");
  }
  GraphSpec spec{family, parse_list(body.substr(0, semi)), parse_list(body.substr(semi + 1))};
  validate(spec);
  return spec;
}

std::string format_spec(const GraphSpec& spec) {
  std::string out(family_name(spec.family));
  out += ':';
  auto append = [&out](const std::vector<int>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(cells[i]);
    }
  };
  append(spec.m);
  out += ';';
  append(spec.n);
  return out;
}

std::string CellTag::str() const { return (side == Side::U ? "U" : "V") + std::to_string(index); }

Graph::Graph(DenseMatrix<std::uint8_t> adjacency, std::vector<std::optional<CellTag>> labels)
    : adjacency_(std::move(adjacency)), labels_(std::move(labels)) {
  const auto n = adjacency_.rows();
  if (adjacency_.cols() != n) throw DomainError("adjacency matrix must be square");
  if (labels_.empty()) labels_.resize(n);
  if (labels_.size() != n) throw DomainError("label count does not match order");
  for (std::size_t i = 0; i < n; ++i) {
    if (adjacency_(i, i) != 0) throw DomainError("loop at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacency_(i, j) > 1 || adjacency_(i, j) != adjacency_(j, i)) {
        throw DomainError("adjacency not a symmetric 0/1 matrix at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")");
      }
    }
  }
}

Graph Graph::from_edges(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) {
  DenseMatrix<std::uint8_t> a(order, order);
  for (auto [u, v] : edges) {
    if (u >= order || v >= order) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
    a(u, v) = a(v, u) = 1;
  }
  return Graph(std::move(a));
}

std::size_t Graph::degree(Vertex v) const {
  auto r = adjacency_.row(v);
  return static_cast<std::size_t>(std::count(r.begin(), r.end(), std::uint8_t{1}));
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (Vertex v = 0; v < order(); ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < order(); ++u)
    if (adjacent(v, u)) out.push_back(u);
  return out;
}

std::vector<CellTag> Graph::cells() const {
  std::vector<CellTag> tags;
  for (const auto& l : labels_)
    if (l) tags.push_back(*l);
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

std::vector<Vertex> Graph::cell_members(CellTag tag) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v)
    if (labels_[v] == tag) out.push_back(v);
  return out;
}

std::optional<Vertex> Graph::find_vertex(CellTag tag) const {
  for (Vertex v = 0; v < order(); ++v)
    if (labels_[v] == tag) return v;
  return std::nullopt;
}

Graph build(const GraphSpec& spec) {
  validate(spec);
  const int h = static_cast<int>(spec.h());
  const std::size_t mu = static_cast<std::size_t>(spec.total_m());
  const std::size_t total = spec.order();

  // cell index (1-based) of each vertex on each side
  std::vector<int> ucell, vcell;
  std::vector<std::optional<CellTag>> labels;
  labels.reserve(total);
  for (int i = 1; i <= h; ++i)
    for (int k = 0; k < spec.m[i - 1]; ++k) {
      ucell.push_back(i);
      labels.push_back(CellTag{Side::U, i});
    }
  for (int i = 1; i <= h; ++i)
    for (int k = 0; k < spec.n[i - 1]; ++k) {
      vcell.push_back(i);
      labels.push_back(CellTag{Side::V, i});
    }

  DenseMatrix<std::uint8_t> a(total, total);
  for (std::size_t u = 0; u < ucell.size(); ++u) {
    // NSG: U_i ~ V_1..V_i ; DNG: U_i ~ V_1..V_{h-i+1}
    const int reach = spec.family == Family::Threshold ? ucell[u] : h - ucell[u] + 1;
    for (std::size_t v = 0; v < vcell.size(); ++v) {
      if (vcell[v] <= reach) a(u, mu + v) = a(mu + v, u) = 1;
    }
  }
  if (spec.family == Family::Threshold) {
    for (std::size_t i = mu; i < total; ++i)
      for (std::size_t j = mu; j < total; ++j)
        if (i != j) a(i, j) = 1;
  }
  return Graph(std::move(a), std::move(labels));
}

Graph half_graph(int h) { return build(half_graph_spec(h)); }

Graph complete_graph(std::size_t n) {
  DenseMatrix<std::uint8_t> a(n, n, 1);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 0;
  return Graph(std::move(a));
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, e);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  const auto k = keep.size();
  DenseMatrix<std::uint8_t> a(k, k);
  std::vector<std::optional<CellTag>> labels(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (keep[i] >= g.order()) throw DomainError("vertex " + std::to_string(keep[i]) + " out of range");
    labels[i] = g.label(keep[i]);
    for (std::size_t j = 0; j < k; ++j) a(i, j) = g.adjacency()(keep[i], keep[j]);
  }
  return Graph(std::move(a), std::move(labels));
}

Graph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range (order " +
                      std::to_string(g.order()) + ")");
  }
  std::vector<Vertex> keep;
  keep.reserve(g.order() - 1);
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(g, keep);
}

Graph duplicate_vertex(const Graph& g, Vertex v) {
  const auto n = g.order();
  if (v >= n) {
    throw DomainError("vertex " + std::to_string(v) + " out of range (order " + std::to_string(n) + ")");
  }
  // old index -> new index; the twin sits at v+1
  auto shift = [v](Vertex u) { return u <= v ? u : u + 1; };
  const Vertex twin = v + 1;
  DenseMatrix<std::uint8_t> a(n + 1, n + 1);
  std::vector<std::optional<CellTag>> labels(n + 1);
  for (Vertex i = 0; i < n; ++i) {
    labels[shift(i)] = g.label(i);
    for (Vertex j = 0; j < n; ++j) a(shift(i), shift(j)) = g.adjacency()(i, j);
  }
  labels[twin] = g.label(v);
  for (Vertex u = 0; u < n; ++u) {
    if (g.adjacent(v, u)) a(twin, shift(u)) = a(shift(u), twin) = 1;
  }
  return Graph(std::move(a), std::move(labels));
}

namespace {

// Induced-subgraph shape on 3..5 vertices, recognised by edge count and degrees.
bool is_forbidden(const Graph& g, std::span<const Vertex> sub, Family family) {
  const auto k = sub.size();
  std::size_t degs[5] = {0, 0, 0, 0, 0};
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (g.adjacent(sub[i], sub[j])) {
        ++edges;
        ++degs[i];
        ++degs[j];
      }
  auto count_deg = [&](std::size_t d) {
    return static_cast<std::size_t>(std::count(degs, degs + k, d));
  };
  if (k == 3) return family == Family::Chain && edges == 3;  // C3
  if (k == 4) {
    const bool two_k2 = edges == 2 && count_deg(1) == 4;
    const bool p4 = edges == 3 && count_deg(1) == 2 && count_deg(2) == 2;
    const bool c4 = edges == 4 && count_deg(2) == 4;
    if (family == Family::Threshold) return two_k2 || p4 || c4;
    return two_k2;
  }
  // k == 5: 2-regular on five vertices is C5
  return family == Family::Chain && edges == 5 && count_deg(2) == 5;
}

bool any_subset(const Graph& g, std::size_t k, Family family) {
  const auto n = g.order();
  if (n < k) return false;
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    if (is_forbidden(g, idx, family)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool validate_family(const Graph& g, Family family) {
  if (family == Family::Threshold) return !any_subset(g, 4, family);
  return !any_subset(g, 3, family) && !any_subset(g, 4, family) && !any_subset(g, 5, family);
}

namespace {

void require_index(const GraphSpec& spec, int s, int lo, int hi, const char* what) {
  if (s < lo || s > hi) {
    throw DomainError(std::string(what) + ": index s=" + std::to_string(s) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "] for h=" +
                      std::to_string(spec.h()));
  }
}

void require_family(const GraphSpec& spec, Family f, const char* what) {
  if (spec.family != f) throw DomainError(std::string(what) + ": wrong graph family");
}

std::vector<int> slice(const std::vector<int>& v, int first, int last) {  // 1-based inclusive
  return {v.begin() + (first - 1), v.begin() + last};
}

}  // namespace

GraphSpec nsg_tail(const GraphSpec& spec, int s) {
  require_family(spec, Family::Threshold, "nsg_tail");
  const int h = static_cast<int>(spec.h());
  require_index(spec, s, 1, h - 1, "nsg_tail");
  return nsg(slice(spec.m, s + 1, h), slice(spec.n, s + 1, h));
}

GraphSpec nsg_head(const GraphSpec& spec, int s) {
  require_family(spec, Family::Threshold, "nsg_head");
  require_index(spec, s, 1, static_cast<int>(spec.h()), "nsg_head");
  return nsg(slice(spec.m, 1, s), slice(spec.n, 1, s));
}

GraphSpec nsg_merged(const GraphSpec& spec, int s) {
  require_family(spec, Family::Threshold, "nsg_merged");
  require_index(spec, s, 2, static_cast<int>(spec.h()), "nsg_merged");
  std::vector<int> m = spec.m, n = spec.n;
  m[s - 2] += m[s - 1];
  m.erase(m.begin() + (s - 1));
  n.erase(n.begin() + (s - 1));
  return nsg(std::move(m), std::move(n));
}

GraphSpec dng_head(const GraphSpec& spec, int s) {
  require_family(spec, Family::Chain, "dng_head");
  const int h = static_cast<int>(spec.h());
  require_index(spec, s, 2, h, "dng_head");
  return dng(slice(spec.m, 1, s - 1), slice(spec.n, h - s + 2, h));
}

GraphSpec dng_tail(const GraphSpec& spec, int s) {
  require_family(spec, Family::Chain, "dng_tail");
  const int h = static_cast<int>(spec.h());
  require_index(spec, s, 1, h, "dng_tail");
  return dng(slice(spec.m, s, h), slice(spec.n, 1, h - s + 1));
}

DerivedSpecs derived_specs(const GraphSpec& spec, int s) {
  validate(spec);
  const int h = static_cast<int>(spec.h());
  require_index(spec, s, 1, h, "derived_specs");
  DerivedSpecs out;
  if (spec.family == Family::Threshold) {
    if (s <= h - 1) out.tail = nsg_tail(spec, s);
    out.head = nsg_head(spec, s);
    if (s >= 2) out.merged = nsg_merged(spec, s);
  } else {
    out.tail = dng_tail(spec, s);
    if (s >= 2) out.head = dng_head(spec, s);
  }
  return out;
}

std::vector<Vertex> cell_range(const GraphSpec& spec, Side side, int first, int last) {
  std::vector<Vertex> out;
  Vertex offset = side == Side::U ? 0 : static_cast<Vertex>(spec.total_m());
  const auto& cells = side == Side::U ? spec.m : spec.n;
  for (int i = 1; i <= static_cast<int>(cells.size()); ++i) {
    for (int k = 0; k < cells[i - 1]; ++k, ++offset)
      if (i >= first && i <= last) out.push_back(offset);
  }
  return out;
}

}  // namespace vtypes
