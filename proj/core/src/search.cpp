#include "vtypes/search.hpp"

#include <random>

#include "vtypes/error.hpp"
#include "vtypes/exact.hpp"
#include "vtypes/spectrum.hpp"

namespace vtypes {

std::vector<GraphSpec> enumerate_specs(Family f, int max_h, int max_cell) {
  if (max_h < 1 || max_cell < 1) throw DomainError("search bounds must be >= 1");
  std::vector<GraphSpec> out;
  for (int h = 1; h <= max_h; ++h) {
    std::vector<int> digits(2 * static_cast<std::size_t>(h), 1);
    while (true) {
      GraphSpec s;
      s.family = f;
      s.m.assign(digits.begin(), digits.begin() + h);
      s.n.assign(digits.begin() + h, digits.end());
      out.push_back(std::move(s));
      int k = 2 * h - 1;
      while (k >= 0 && digits[static_cast<std::size_t>(k)] == max_cell) digits[static_cast<std::size_t>(k--)] = 1;
      if (k < 0) break;
      ++digits[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

std::vector<GraphSpec> random_specs(Family f, std::size_t count, std::uint64_t seed, int max_h, int max_cell) {
  if (max_h < 1 || max_cell < 1) throw DomainError("random spec bounds must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> hd(1, max_h), cd(1, max_cell);
  std::vector<GraphSpec> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    GraphSpec s;
    s.family = f;
    const int h = hd(rng);
    for (int i = 0; i < h; ++i) s.m.push_back(cd(rng));
    for (int i = 0; i < h; ++i) s.n.push_back(cd(rng));
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

std::vector<ChainFinding> chain_findings(const GraphSpec& spec, const ClassifierOptions& opts) {
  std::vector<ChainFinding> out;
  const Graph g = build(spec);
  const Spectrum sp = eig_sym(g, opts.spectrum);
  const double tau = sp.cluster_tolerance();
  std::unique_ptr<Classifier> cl;
  for (const auto& c : sp.clusters()) {
    if (std::abs(c.value) <= tau) continue;
    auto downers = downers_via_eigenspace(sp, c, opts.coordinate_tolerance);
    if (downers.size() == g.order()) continue;
    if (!cl) cl = std::make_unique<Classifier>(g, opts);

    ChainFinding f;
    f.spec = spec;
    f.value = c.value;
    f.index = c.first + 1;
    for (Vertex v = 0; v < g.order(); ++v)
      if (!std::binary_search(downers.begin(), downers.end(), v)) f.non_downers.push_back(v);
    for (Vertex v : f.non_downers) {
      const CellTag t = *g.label(v);
      if (std::find(f.cells.begin(), f.cells.end(), t) == f.cells.end()) f.cells.push_back(t);
    }
    std::sort(f.cells.begin(), f.cells.end());
    const auto numeric = cl->classify_all(Eigenvalue::numeric(c.value));
    f.cross_validated = numeric.vertices_of(VertexType::Downer) == downers;
    f.exact = cl->identify(c.value);
    if (f.exact) f.exact_agrees = cl->classify_all(Eigenvalue::of(*f.exact)).vertices_of(VertexType::Downer) == downers;
    out.push_back(std::move(f));
  }
  return out;
}

std::optional<RemarkFinding> remark_finding(const GraphSpec& spec, const ClassifierOptions& opts) {
  const int mh = spec.m.back();
  Classifier cl(build(spec), opts);
  const auto lambda = AlgebraicNumber::integer(-mh);
  const auto k = root_multiplicity(cl.char_poly(), lambda);
  if (k == 0) return std::nullopt;
  const int h = static_cast<int>(spec.h());
  const auto e = Eigenvalue::of(lambda);
  RemarkFinding f;
  f.spec = spec;
  f.m_h = mh;
  f.multiplicity = k;
  f.v_h = cl.classify_vertex(e, *cl.graph().find_vertex({Side::V, h}));
  f.u_h = cl.classify_vertex(e, *cl.graph().find_vertex({Side::U, h}));
  return f;
}

}  // namespace

std::vector<ChainFinding> search_chain_neutrals(int max_h, int max_cell, std::size_t workers, ClassifierOptions opts) {
  const auto specs = enumerate_specs(Family::Chain, max_h, max_cell);
  std::vector<ChainFinding> out;
  for (auto& part : parallel_map(specs, [&](const GraphSpec& s) { return chain_findings(s, opts); }, workers))
    for (auto& f : part) out.push_back(std::move(f));
  return out;
}

std::vector<RemarkFinding> search_remark_mh(int max_h, int max_cell, std::size_t workers, ClassifierOptions opts) {
  if (max_cell < 2) throw DomainError("remark-mh search needs max_cell >= 2");
  std::vector<GraphSpec> specs;
  for (auto& s : enumerate_specs(Family::Threshold, max_h, max_cell))
    if (s.m.back() >= 2) specs.push_back(std::move(s));
  std::vector<RemarkFinding> out;
  for (auto& f : parallel_map(specs, [&](const GraphSpec& s) { return remark_finding(s, opts); }, workers))
    if (f) out.push_back(std::move(*f));
  return out;
}

}  // namespace vtypes
