#include "vtypes/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vtypes/error.hpp"
#include "vtypes/exact.hpp"

namespace vtypes {

using nlohmann::json;

double ZOmega::value() const {
  static const double w = (std::sqrt(5.0) - 1.0) / 2.0;
  return static_cast<double>(p) + static_cast<double>(q) * w;
}

std::string ZOmega::str() const {
  std::ostringstream out;
  if (q == 0) {
    out << p;
    return out.str();
  }
  if (p != 0) out << p << (q < 0 ? " - " : " + ");
  else if (q < 0) out << '-';
  const auto mag = q < 0 ? -q : q;
  if (mag != 1) out << mag << '*';
  out << "omega";
  return out.str();
}

ZOmega EigenvectorPattern::at(long long i) const {
  const long long per = period;
  return values[static_cast<std::size_t>(((i - 1) % per + per) % per)];
}

ZOmega EigenvectorPattern::partial_sum(long long upper) const {
  const long long per = period;
  const long long r = ((upper - 1) % per + per) % per + 1;
  ZOmega acc;
  for (long long i = 1; i <= r; ++i) acc = acc + at(i);
  return acc;
}

ZOmega EigenvectorPattern::period_sum() const { return partial_sum(period); }

const EigenvectorPattern& period6_pattern() {
  static const EigenvectorPattern p{6, {{1, 0}, {0, 0}, {-1, 0}, {-1, 0}, {0, 0}, {1, 0}}};
  return p;
}

const EigenvectorPattern& period10_pattern() {
  const ZOmega w = ZOmega::omega();
  static const EigenvectorPattern p{10, {w, {-1, 0}, {0, 0}, {1, 0}, -w, -w, {1, 0}, {0, 0}, {-1, 0}, w}};
  return p;
}

std::vector<IdentityCheck> table1_identities() {
  const auto& a = period6_pattern();
  std::vector<IdentityCheck> out;
  for (int s = 1; s <= 6; ++s) {
    out.push_back({"sum_{i=1}^{5-s} a_i = -a_s", s, a.partial_sum(5 - s), -a.at(s)});
    out.push_back({"sum_{i=1}^{2-s} a_i = a_s", s, a.partial_sum(2 - s), a.at(s)});
  }
  return out;
}

std::vector<IdentityCheck> table2_identities() {
  const auto& b = period10_pattern();
  const ZOmega w = ZOmega::omega();
  std::vector<IdentityCheck> out;
  for (int s = 1; s <= 10; ++s) {
    out.push_back({"sum_{i=1}^{8-s} b_i = omega*b_s", s, b.partial_sum(8 - s), w * b.at(s)});
    out.push_back({"sum_{i=1}^{3-s} b_i = -omega*b_s", s, b.partial_sum(3 - s), -(w * b.at(s))});
  }
  return out;
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

// ---------------------------------------------------------------------------

AnalyzedGraph::AnalyzedGraph(GraphSpec spec, ClassifierOptions opts)
    : spec_(std::move(spec)), text_(format_spec(spec_)), classifier_(std::make_unique<Classifier>(build(spec_), opts)) {}

const Eigenvalue& AnalyzedGraph::eigenvalue(std::size_t i) const {
  const auto& c = spectrum().cluster_of(i);
  auto it = eigenvalues_.find(c.first);
  if (it == eigenvalues_.end()) {
    Eigenvalue e = Eigenvalue::numeric(c.value);
    if (auto a = classifier_->identify(c.value)) e = Eigenvalue::of(*a);
    it = eigenvalues_.emplace(c.first, std::move(e)).first;
  }
  return it->second;
}

const VertexTypeReport& AnalyzedGraph::report(std::size_t i) const {
  const auto& c = spectrum().cluster_of(i);
  auto it = reports_.find(c.first);
  if (it == reports_.end()) it = reports_.emplace(c.first, classifier_->classify_all(eigenvalue(i))).first;
  return it->second;
}

std::vector<std::size_t> AnalyzedGraph::cluster_positions() const {
  std::vector<std::size_t> out;
  for (const auto& c : spectrum().clusters()) out.push_back(c.first + 1);
  return out;
}

bool AnalyzedGraph::is_zero(std::size_t i) const { return std::abs(spectrum().lambda(i)) <= tau(); }
bool AnalyzedGraph::is_minus_one(std::size_t i) const { return std::abs(spectrum().lambda(i) + 1.0) <= tau(); }

const Spectrum& AnalyzedGraph::derived_spectrum(const GraphSpec& s) const {
  auto it = derived_.find(s);
  if (it == derived_.end()) {
    SpectrumOptions o;
    o.cluster_tolerance = tau();
    it = derived_.emplace(s, eig_sym(build(s), o)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------

namespace {

VerificationResult start(std::string claim, const AnalyzedGraph& g) {
  VerificationResult r;
  r.claim = std::move(claim);
  r.spec = g.spec_text();
  return r;
}

void fail(VerificationResult& r, json witness) {
  r.status = Status::Fail;
  r.witnesses["failures"].push_back(std::move(witness));
}

void require_family(const AnalyzedGraph& g, Family f, std::string_view what) {
  if (g.spec().family != f)
    throw DomainError(std::string(what) + " needs a " + std::string(family_name(f)) + " spec, got " + g.spec_text());
}

std::optional<std::size_t> position_of(const Spectrum& s, double value, double tol) {
  for (std::size_t k = 0; k < s.order(); ++k)
    if (std::abs(s.pairs()[k].value - value) <= tol) return k + 1;
  return std::nullopt;
}

std::string type_or_mixed(const std::optional<VertexType>& t) { return t ? std::string(type_name(*t)) : "mixed"; }

json lambda_witness(const AnalyzedGraph& g, std::size_t i) {
  json w;
  w["i"] = i;
  w["lambda"] = g.spectrum().lambda(i);
  return w;
}

bool cell_is(const VertexTypeReport& r, CellTag tag, VertexType t) {
  const auto ct = r.cell_type(tag);
  return ct && *ct == t;
}

void check_cells_downer(VerificationResult& r, const AnalyzedGraph& g, std::size_t i, const std::vector<CellTag>& cells) {
  const auto& rep = g.report(i);
  for (const auto& tag : cells) {
    if (cell_is(rep, tag, VertexType::Downer)) continue;
    json w = lambda_witness(g, i);
    w["cell"] = tag.str();
    w["type"] = type_or_mixed(rep.cell_type(tag));
    w["k"] = rep.multiplicity;
    fail(r, std::move(w));
  }
}

void merge_into(VerificationResult& acc, VerificationResult&& part, std::size_t& checked) {
  if (part.status != Status::Skip) ++checked;
  if (part.status == Status::Fail) {
    acc.status = Status::Fail;
    for (auto& f : part.witnesses["failures"]) acc.witnesses["failures"].push_back(std::move(f));
  } else if (part.status == Status::Pass && acc.status == Status::Skip) {
    acc.status = Status::Pass;
  }
  if (part.witnesses.contains("findings"))
    for (auto& f : part.witnesses["findings"]) acc.witnesses["findings"].push_back(std::move(f));
  for (auto& n : part.notes)
    if (std::find(acc.notes.begin(), acc.notes.end(), n) == acc.notes.end()) acc.notes.push_back(std::move(n));
}

VerificationResult merged(std::string claim, const std::string& spec, std::vector<VerificationResult> parts) {
  VerificationResult acc;
  acc.claim = std::move(claim);
  acc.spec = spec;
  acc.status = Status::Skip;
  std::size_t checked = 0;
  for (auto& p : parts) merge_into(acc, std::move(p), checked);
  acc.witnesses["checked"] = checked;
  if (parts.empty()) acc.notes.push_back("no applicable eigenvalue");
  return acc;
}


}  // namespace

// ---------------------------------------------------------------------------

VerificationResult verify_nsg_spectrum(const AnalyzedGraph& g) {
  require_family(g, Family::Threshold, "verify_nsg_spectrum");
  auto r = start("nsg-spectrum", g);
  const auto& spec = g.spec();
  const int h = static_cast<int>(spec.h());
  const int mh = spec.m.back();
  const double tau = g.tau();

  int positive = 0, below = 0;
  bool simple_pos = true, simple_below = true;
  for (const auto& c : g.spectrum().clusters()) {
    if (c.value > tau) {
      positive += static_cast<int>(c.multiplicity);
      simple_pos = simple_pos && c.multiplicity == 1;
    } else if (c.value < -1.0 - tau) {
      below += static_cast<int>(c.multiplicity);
      simple_below = simple_below && c.multiplicity == 1;
    }
  }
  const int expect_below = mh == 1 ? h - 1 : h;
  const auto& phi = g.classifier().char_poly();
  const auto mult0 = static_cast<int>(root_multiplicity(phi, AlgebraicNumber::zero()));
  const auto mult1 = static_cast<int>(root_multiplicity(phi, AlgebraicNumber::minus_one()));
  const int expect0 = spec.total_m() - h;
  const int expect1 = mh == 1 ? spec.total_n() - h + 1 : spec.total_n() - h;

  r.witnesses["positive"] = positive;
  r.witnesses["below_minus_one"] = below;
  r.witnesses["mult_0"] = mult0;
  r.witnesses["mult_minus_1"] = mult1;

  auto expect = [&](const char* what, long long got, long long want) {
    if (got != want) fail(r, json{{"check", what}, {"got", got}, {"expected", want}});
  };
  expect("positive count", positive, h);
  expect("count below -1", below, expect_below);
  expect("exact mult(0)", mult0, expect0);
  expect("exact mult(-1)", mult1, expect1);
  if (!simple_pos) fail(r, json{{"check", "positive eigenvalues simple"}});
  if (!simple_below) fail(r, json{{"check", "eigenvalues below -1 simple"}});

  for (const auto& c : g.spectrum().clusters()) {
    const bool excluded = std::abs(c.value) <= tau || std::abs(c.value + 1.0) <= tau;
    if (!excluded && !c.main) fail(r, json{{"check", "main"}, {"lambda", c.value}, {"main", false}});
  }
  return r;
}

VerificationResult verify_dng_spectrum(const AnalyzedGraph& g) {
  require_family(g, Family::Chain, "verify_dng_spectrum");
  auto r = start("dng-spectrum", g);
  const auto& spec = g.spec();
  const int h = static_cast<int>(spec.h());
  const double tau = g.tau();
  const auto values = g.spectrum().values();
  const std::size_t n = values.size();

  double asym = 0.0;
  for (std::size_t k = 0; k < n; ++k) asym = std::max(asym, std::abs(values[k] + values[n - 1 - k]));
  if (asym > tau) fail(r, json{{"check", "symmetric"}, {"max_deviation", asym}, {"tolerance", tau}});

  int above = 0, below = 0, positive = 0, negative = 0;
  bool simple = true;
  for (const auto& c : g.spectrum().clusters()) {
    if (std::abs(c.value) <= tau) continue;
    simple = simple && c.multiplicity == 1;
    const auto k = static_cast<int>(c.multiplicity);
    (c.value > 0 ? positive : negative) += k;
    if (c.value > 0.5) above += k;
    if (c.value < -0.5) below += k;
  }
  const auto mult0 = static_cast<int>(root_multiplicity(g.classifier().char_poly(), AlgebraicNumber::zero()));
  r.witnesses["above_half"] = above;
  r.witnesses["below_minus_half"] = below;
  r.witnesses["mult_0"] = mult0;

  auto expect = [&](const char* what, long long got, long long want) {
    if (got != want) fail(r, json{{"check", what}, {"got", got}, {"expected", want}});
  };
  expect("positive count", positive, h);
  expect("negative count", negative, h);
  expect("count above 1/2", above, h);
  expect("count below -1/2", below, h);
  expect("exact mult(0)", mult0, spec.total_m() + spec.total_n() - 2 * h);
  if (!simple) fail(r, json{{"check", "nonzero eigenvalues simple"}});
  return r;
}

VerificationResult verify_nsg_downers(const AnalyzedGraph& g, std::size_t i) {
  require_family(g, Family::Threshold, "verify_nsg_downers");
  if (g.is_zero(i) || g.is_minus_one(i))
    throw DomainError("lambda_" + std::to_string(i) + " is 0 or -1, excluded from the boundary-downer claim");
  auto r = start("nsg-downers", g);
  r.witnesses = lambda_witness(g, i);
  const auto& spec = g.spec();
  const int h = static_cast<int>(spec.h());
  const int mh = spec.m.back();
  check_cells_downer(r, g, i, {{Side::U, 1}, {Side::V, 1}, {Side::U, h}});

  const double lambda = g.spectrum().lambda(i);
  const CellTag vh{Side::V, h};
  if (mh >= 2 && std::abs(lambda + mh) <= g.tau()) {
    const auto t = g.report(i).cell_type(vh);
    r.witnesses["findings"].push_back(json{{"cell", vh.str()}, {"type", type_or_mixed(t)}, {"lambda", lambda}});
    r.notes.push_back("lambda = -m_h with m_h >= 2: V_h observed " + type_or_mixed(t));
  } else {
    check_cells_downer(r, g, i, {vh});
  }
  return r;
}

VerificationResult verify_dng_downers(const AnalyzedGraph& g, std::size_t i) {
  require_family(g, Family::Chain, "verify_dng_downers");
  if (g.is_zero(i)) throw DomainError("lambda_" + std::to_string(i) + " is 0, excluded from the boundary-downer claim");
  auto r = start("dng-downers", g);
  r.witnesses = lambda_witness(g, i);
  const int h = static_cast<int>(g.spec().h());
  check_cells_downer(r, g, i, {{Side::U, 1}, {Side::U, h}, {Side::V, 1}, {Side::V, h}});
  return r;
}

VerificationResult verify_adjacent_cells(const AnalyzedGraph& g, std::size_t i) {
  const bool threshold = g.spec().family == Family::Threshold;
  if (g.is_zero(i) || (threshold && g.is_minus_one(i)))
    throw DomainError("lambda_" + std::to_string(i) + " is excluded from the adjacent-cell claim");
  auto r = start("adjacent-cells", g);
  r.witnesses = lambda_witness(g, i);
  const auto& rep = g.report(i);
  const int h = static_cast<int>(g.spec().h());
  for (Side side : {Side::U, Side::V}) {
    for (int j = 1; j < h; ++j) {
      const CellTag a{side, j}, b{side, j + 1};
      if (cell_is(rep, a, VertexType::Downer) || cell_is(rep, b, VertexType::Downer)) continue;
      json w = lambda_witness(g, i);
      w["cells"] = {a.str(), b.str()};
      w["types"] = {type_or_mixed(rep.cell_type(a)), type_or_mixed(rep.cell_type(b))};
      fail(r, std::move(w));
    }
  }
  return r;
}

namespace {

struct Sandwich {
  std::optional<std::size_t> j;
  std::size_t n_prime = 0;
};

Sandwich locate(const AnalyzedGraph& g, const GraphSpec& derived, double lambda) {
  const auto& sp = g.derived_spectrum(derived);
  return {position_of(sp, lambda, g.tau()), sp.order()};
}

std::vector<VerificationResult> nsg_localization(const AnalyzedGraph& g, CellTag cell, std::size_t i) {
  const auto& spec = g.spec();
  const int h = static_cast<int>(spec.h());
  const int s = cell.index;
  const std::size_t n = g.order();
  const double lambda = g.spectrum().lambda(i);
  const double tau = g.tau();
  const bool u_side = cell.side == Side::U;
  std::vector<std::string> ids = u_side ? std::vector<std::string>{"nsg-loc-u-eigenvalue", "nsg-loc-u-index",
                                                                    "nsg-loc-u-bottom", "nsg-loc-u-interval"}
                                        : std::vector<std::string>{"nsg-loc-v-eigenvalue", "nsg-loc-v-index",
                                                                    "nsg-loc-v-bottom"};
  std::vector<VerificationResult> out;
  for (const auto& id : ids) {
    auto r = start(id, g);
    r.witnesses = lambda_witness(g, i);
    r.witnesses["cell"] = cell.str();
    out.push_back(std::move(r));
  }
  const bool in_range = u_side ? (s >= 2 && s <= h - 1) : (s >= 2 && s <= h);
  if (!in_range) {
    for (auto& r : out) {
      r.status = Status::Skip;
      r.notes.push_back(cell.str() + " lies outside the range covered by the theorem");
    }
    return out;
  }

  // U_s: G' = tail, window n - n'; V_s: H_s = G - V_s, window n_s
  const GraphSpec derived = u_side ? nsg_tail(spec, s) : nsg_merged(spec, s);
  const auto loc = locate(g, derived, lambda);
  const auto& sp = g.derived_spectrum(derived);
  const std::size_t window = u_side ? n - loc.n_prime : static_cast<std::size_t>(spec.n[s - 1]);

  auto& eig = out[0];
  eig.witnesses["derived"] = format_spec(derived);
  if (!loc.j) fail(eig, json{{"check", "eigenvalue of derived graph"}, {"lambda", lambda}, {"derived", format_spec(derived)}});

  auto& index = out[1];
  if (!loc.j) {
    fail(index, json{{"check", "index sandwich"}, {"reason", "lambda_i not in the derived spectrum"}});
  } else {
    const std::size_t j = *loc.j;
    index.witnesses["j"] = j;
    index.witnesses["window"] = window;
    if (!(j < i && i < window + j))
      fail(index, json{{"check", "j < i < window + j"},
                       {"i", i},
                       {"j", j},
                       {"window", window},
                       {"weak_form_holds", j <= i && i <= window + j}});
  }

  auto& bottom = out[2];
  if (i <= loc.n_prime) {
    const double b = sp.lambda(loc.n_prime);
    if (std::abs(lambda - b) <= tau)
      fail(bottom, json{{"check", "lambda_i differs from the smallest derived eigenvalue"}, {"bottom", b}});
  }

  if (u_side) {
    const auto& head = g.derived_spectrum(nsg_head(spec, s));
    const double lo = head.lambda(head.order());
    const double hi = head.lambda(1);
    auto& interval = out[3];
    interval.witnesses["interval"] = {lo, hi};
    if (!(lambda > lo + tau && lambda < hi - tau))
      fail(interval, json{{"check", "strict interval"}, {"lambda", lambda}, {"lo", lo}, {"hi", hi}});
  }
  return out;
}

std::vector<VerificationResult> dng_localization(const AnalyzedGraph& g, CellTag cell, std::size_t i) {
  const auto& spec = g.spec();
  const int h = static_cast<int>(spec.h());
  const int s = cell.index;
  const std::size_t n = g.order();
  const double lambda = g.spectrum().lambda(i);
  const double tau = g.tau();
  const bool main = g.spectrum().cluster_of(i).main;
  static const char* ids[] = {"dng-loc-eigenvalue", "dng-loc-index", "dng-loc-bottom", "dng-loc-interval",
                              "dng-loc-strict"};
  std::vector<VerificationResult> out;
  for (const char* id : ids) {
    auto r = start(id, g);
    r.witnesses = lambda_witness(g, i);
    r.witnesses["cell"] = cell.str();
    out.push_back(std::move(r));
  }
  if (!(s > 2 && s < h - 1)) {
    for (auto& r : out) {
      r.status = Status::Skip;
      r.notes.push_back(cell.str() + " lies outside 2 < s < h-1");
    }
    return out;
  }

  // V_s is U_s of the mirrored spec DNG(n; m), which has the same spectrum
  const GraphSpec base = cell.side == Side::U ? spec : dng(spec.n, spec.m);
  const GraphSpec head = dng_head(base, s);
  const GraphSpec tail = dng_tail(base, s);
  const auto loc = locate(g, head, lambda);
  const auto& sp_head = g.derived_spectrum(head);
  const auto& sp_tail = g.derived_spectrum(tail);

  auto& eig = out[0];
  eig.witnesses["derived"] = format_spec(head);
  if (!loc.j) fail(eig, json{{"check", "eigenvalue of G_s'"}, {"lambda", lambda}, {"derived", format_spec(head)}});

  auto& index = out[1];
  if (!main) {
    index.status = Status::Skip;
    index.notes.push_back("lambda_i is not main");
  } else if (!loc.j) {
    fail(index, json{{"check", "index sandwich"}, {"reason", "lambda_i not in Sp(G_s')"}});
  } else {
    const std::size_t j = *loc.j;
    index.witnesses["j"] = j;
    if (!(j < i && i < n - loc.n_prime + j))
      fail(index, json{{"check", "j < i < n - n_s' + j"}, {"i", i}, {"j", j}, {"n_prime", loc.n_prime}});
  }

  auto& bottom = out[2];
  if (i <= loc.n_prime) {
    const double b = sp_head.lambda(loc.n_prime);
    if (std::abs(lambda - b) <= tau) fail(bottom, json{{"check", "lambda_i != lambda'_{n_s'}"}, {"bottom", b}});
  }

  const double lo = sp_tail.lambda(sp_tail.order());
  const double hi = sp_tail.lambda(1);
  auto& interval = out[3];
  interval.witnesses["interval"] = {lo, hi};
  if (!(lambda >= lo - tau && lambda < hi - tau))
    fail(interval, json{{"check", "half-open interval"}, {"lambda", lambda}, {"lo", lo}, {"hi", hi}});

  auto& strict = out[4];
  if (!main) {
    strict.status = Status::Skip;
    strict.notes.push_back("lambda_i is not main");
  } else if (!(lambda > lo + tau && lambda < hi - tau)) {
    fail(strict, json{{"check", "open interval"}, {"lambda", lambda}, {"lo", lo}, {"hi", hi}});
  }
  return out;
}

}  // namespace

std::vector<VerificationResult> verify_neutral_localization(const AnalyzedGraph& g, CellTag cell, std::size_t i) {
  const bool threshold = g.spec().family == Family::Threshold;
  if (g.is_zero(i) || (threshold && g.is_minus_one(i)))
    throw DomainError("lambda_" + std::to_string(i) + " is excluded from the localization claims");
  if (cell.index < 1 || cell.index > static_cast<int>(g.spec().h()))
    throw DomainError("no cell " + cell.str() + " in " + g.spec_text());
  if (!cell_is(g.report(i), cell, VertexType::Neutral))
    throw DomainError("cell " + cell.str() + " is not all-Neutral for lambda_" + std::to_string(i));
  auto out = threshold ? nsg_localization(g, cell, i) : dng_localization(g, cell, i);
  for (auto& r : out)
    if (r.witnesses.contains("failures"))
      for (auto& f : r.witnesses["failures"]) {
        f["cell"] = cell.str();
        f["i"] = i;
      }
  return out;
}

namespace {

std::vector<Interval> intervals_from(const AnalyzedGraph& g, GraphSpec (*derive)(const GraphSpec&, int)) {
  std::vector<Interval> out;
  const int h = static_cast<int>(g.spec().h());
  for (int s = 2; s <= h - 1; ++s) {
    const auto& sp = g.derived_spectrum(derive(g.spec(), s));
    out.push_back({s, sp.lambda(sp.order()), sp.lambda(1)});
  }
  return out;
}

json intervals_json(const std::vector<Interval>& iv) {
  json out = json::array();
  for (const auto& x : iv) out.push_back(json{{"s", x.s}, {"lo", x.lo}, {"hi", x.hi}});
  return out;
}

}  // namespace

std::vector<Interval> nsg_intervals(const AnalyzedGraph& g) {
  require_family(g, Family::Threshold, "nsg_intervals");
  return intervals_from(g, nsg_head);
}

std::vector<Interval> dng_intervals(const AnalyzedGraph& g) {
  require_family(g, Family::Chain, "dng_intervals");
  return intervals_from(g, dng_tail);
}

VerificationResult verify_interval_corollary(const AnalyzedGraph& g) {
  const auto iv = nsg_intervals(g);
  auto r = start("interval", g);
  r.witnesses["intervals"] = intervals_json(iv);
  r.witnesses["all_u_downer"] = json::array();
  const double tau = g.tau();
  for (auto i : g.cluster_positions()) {
    if (g.is_zero(i) || g.is_minus_one(i)) continue;
    const double lambda = g.spectrum().lambda(i);
    const auto& rep = g.report(i);
    bool all_u = true;
    for (Vertex v = 0; v < g.order(); ++v)
      if (g.graph().label(v)->side == Side::U && rep.per_vertex[v] != VertexType::Downer) all_u = false;
    if (all_u) r.witnesses["all_u_downer"].push_back(i);
    const bool inside = std::any_of(iv.begin(), iv.end(), [&](const Interval& x) {
      return lambda > x.lo - tau && lambda < x.hi + tau;
    });
    if (!inside && !all_u) {
      json w = lambda_witness(g, i);
      w["check"] = "all of U downer outside every I_s";
      fail(r, std::move(w));
    }
  }
  return r;
}

VerificationResult verify_dng_interval_corollary(const AnalyzedGraph& g) {
  const auto iv = dng_intervals(g);
  auto r = start("dng-interval", g);
  r.witnesses["intervals"] = intervals_json(iv);
  const double tau = g.tau();
  for (auto i : g.cluster_positions()) {
    if (g.is_zero(i)) continue;
    const double lambda = g.spectrum().lambda(i);
    const bool inside = std::any_of(iv.begin(), iv.end(), [&](const Interval& x) {
      return lambda >= x.lo - tau && lambda < x.hi + tau;
    });
    if (inside) continue;
    const auto& rep = g.report(i);
    const auto downers = rep.vertices_of(VertexType::Downer);
    if (downers.size() != g.order()) {
      json w = lambda_witness(g, i);
      w["check"] = "every vertex downer outside every interval";
      w["non_downers"] = g.order() - downers.size();
      fail(r, std::move(w));
    }
  }
  return r;
}

VerificationResult verify_lambda_n_downers(const AnalyzedGraph& g) {
  auto r = start("lambda-n-downers", g);
  const std::size_t n = g.order();
  r.witnesses = lambda_witness(g, n);
  const auto& rep = g.report(n);
  r.witnesses["route"] = std::string(route_name(rep.route));
  for (Vertex v = 0; v < n; ++v) {
    if (rep.per_vertex[v] == VertexType::Downer) continue;
    json w = lambda_witness(g, n);
    w["vertex"] = v;
    w["cell"] = g.graph().label(v) ? json(g.graph().label(v)->str()) : json(nullptr);
    w["type"] = std::string(type_name(rep.per_vertex[v]));
    fail(r, std::move(w));
  }
  return r;
}

VerificationResult verify_interlacing(const AnalyzedGraph& g, double slack) {
  auto r = start("interlacing", g);
  r.witnesses["slack"] = slack;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!check_interlacing(g.spectrum(), g.classifier().spectrum_without(v), slack))
      fail(r, json{{"vertex", v}, {"check", "interlacing G, G - v"}});
  }
  return r;
}

VerificationResult verify_cross_validation(const AnalyzedGraph& g) {
  auto r = start("cross-validate", g);
  std::size_t checked = 0;
  for (auto i : g.cluster_positions()) {
    const auto& c = g.spectrum().cluster_of(i);
    const auto& rep = g.report(i);
    const auto eig = g.classifier().downers_via_eigenspace(c);
    ++checked;
    if (eig != rep.vertices_of(VertexType::Downer)) {
      json w = lambda_witness(g, i);
      w["check"] = "eigenspace downers equal multiplicity downers";
      w["eigenspace"] = eig.size();
      w["multiplicity"] = rep.vertices_of(VertexType::Downer).size();
      fail(r, std::move(w));
    }
    for (const auto& a : rep.anomalies) {
      if (a.rfind("numeric multiplicity", 0) == 0) {
        json w = lambda_witness(g, i);
        w["check"] = "numeric multiplicity equals exact multiplicity";
        w["anomaly"] = a;
        fail(r, std::move(w));
      } else if (a.rfind("numeric route disagrees", 0) == 0) {
        r.notes.push_back("lambda_" + std::to_string(i) + ": " + a + " (vertex-deleted multiplicity)");
      }
    }
  }
  r.witnesses["checked"] = checked;
  return r;
}

std::vector<std::string> claim_ids(Family f) {
  if (f == Family::Threshold)
    return {"nsg-spectrum",     "lambda-n-downers", "nsg-downers",          "adjacent-cells",
            "nsg-loc-u-eigenvalue", "nsg-loc-u-index", "nsg-loc-u-bottom", "nsg-loc-u-interval",
            "nsg-loc-v-eigenvalue", "nsg-loc-v-index", "nsg-loc-v-bottom", "interval",
            "interlacing",      "cross-validate"};
  return {"dng-spectrum",   "dng-downers",      "adjacent-cells", "dng-loc-eigenvalue", "dng-loc-index",
          "dng-loc-bottom", "dng-loc-interval", "dng-loc-strict", "dng-interval",       "interlacing",
          "cross-validate"};
}

std::vector<VerificationResult> verify_all(const GraphSpec& spec, ClassifierOptions opts) {
  validate(spec);
  AnalyzedGraph g(spec, opts);
  const bool threshold = spec.family == Family::Threshold;
  std::vector<VerificationResult> out;
  out.push_back(threshold ? verify_nsg_spectrum(g) : verify_dng_spectrum(g));
  if (threshold) out.push_back(verify_lambda_n_downers(g));

  std::vector<std::size_t> eligible;
  for (auto i : g.cluster_positions())
    if (!g.is_zero(i) && !(threshold && g.is_minus_one(i))) eligible.push_back(i);

  std::vector<VerificationResult> downers, adjacent;
  std::map<std::string, std::vector<VerificationResult>> loc;
  for (auto i : eligible) {
    downers.push_back(threshold ? verify_nsg_downers(g, i) : verify_dng_downers(g, i));
    adjacent.push_back(verify_adjacent_cells(g, i));
    for (const auto& tag : g.graph().cells()) {
      if (!cell_is(g.report(i), tag, VertexType::Neutral)) continue;
      for (auto& res : verify_neutral_localization(g, tag, i)) loc[res.claim].push_back(std::move(res));
    }
  }
  out.push_back(merged(threshold ? "nsg-downers" : "dng-downers", g.spec_text(), std::move(downers)));
  out.push_back(merged("adjacent-cells", g.spec_text(), std::move(adjacent)));
  for (const auto& id : claim_ids(spec.family)) {
    if (id.rfind(threshold ? "nsg-loc" : "dng-loc", 0) != 0) continue;
    auto res = merged(id, g.spec_text(), std::move(loc[id]));
    if (res.status == Status::Skip && res.notes == std::vector<std::string>{"no applicable eigenvalue"})
      res.notes = {"no all-neutral cell"};
    out.push_back(std::move(res));
  }
  out.push_back(threshold ? verify_interval_corollary(g) : verify_dng_interval_corollary(g));
  out.push_back(verify_interlacing(g));
  out.push_back(verify_cross_validation(g));
  return out;
}

std::vector<VerificationResult> verify_claim(const GraphSpec& spec, const std::string& claim, ClassifierOptions opts) {
  std::vector<VerificationResult> out;
  for (auto& r : verify_all(spec, opts))
    if (r.claim == claim || r.claim.rfind(claim + "-", 0) == 0) out.push_back(std::move(r));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

PatternEigenvector from_pattern(int h, const EigenvectorPattern& pat, AlgebraicNumber lambda) {
  PatternEigenvector p{half_graph(h), std::move(lambda), {}, {}};
  for (Vertex v = 0; v < p.graph.order(); ++v) {
    const auto entry = pat.at(p.graph.label(v)->index);
    p.vector.push_back(entry.value());
    if (entry == ZOmega{}) p.zeros.push_back(v);
  }
  return p;
}

constexpr double kPatternTolerance = 1e-9;

}  // namespace

PatternEigenvector build_period6(int h) {
  if (h < 1 || (h % 6 != 1 && h % 6 != 4))
    throw DomainError("period-6 pattern needs h = 1 or 4 (mod 6), got h = " + std::to_string(h));
  return from_pattern(h, period6_pattern(), AlgebraicNumber::integer(h % 6 == 1 ? 1 : -1));
}

PatternEigenvector build_period10(int h) {
  if (h < 1 || (h % 10 != 7 && h % 10 != 2))
    throw DomainError("period-10 pattern needs h = 7 or 2 (mod 10), got h = " + std::to_string(h));
  return from_pattern(h, period10_pattern(), h % 10 == 7 ? AlgebraicNumber::omega() : AlgebraicNumber::minus_omega());
}

PatternEigenvector negate_pattern(const PatternEigenvector& p) {
  if (p.vector.size() != p.graph.order()) throw DomainError("vector length does not match the graph order");
  if (!verify_eigenvector(p.graph, p.eigenvalue.approx(), p.vector, kPatternTolerance))
    throw DomainError("input is not an eigenvector for " + p.eigenvalue.describe());
  for (Vertex v = 0; v < p.graph.order(); ++v)
    if (!p.graph.label(v)) throw DomainError("negation needs U/V labels on every vertex");
  for (const auto& [a, b] : p.graph.edges())
    if (p.graph.label(a)->side == p.graph.label(b)->side)
      throw DomainError("edge inside a colour class: " + std::to_string(a) + " " + std::to_string(b));
  PatternEigenvector out{p.graph, p.eigenvalue.negated(), p.vector, p.zeros};
  for (Vertex v = 0; v < out.graph.order(); ++v)
    if (out.graph.label(v)->side == Side::V) out.vector[v] = -out.vector[v];
  return out;
}

Duplication extend_by_duplication(const Graph& g, double lambda, std::span<const double> x, Vertex v,
                                  std::size_t count) {
  if (x.size() != g.order()) throw DomainError("vector length does not match the graph order");
  if (v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  if (std::abs(lambda) <= kPatternTolerance) throw DomainError("duplication needs a nonzero eigenvalue");
  if (!verify_eigenvector(g, lambda, x, kPatternTolerance)) throw DomainError("input is not an eigenvector");
  double norm = 0.0;
  for (double t : x) norm += t * t;
  norm = std::sqrt(norm);
  if (std::abs(x[v]) / norm > kDefaultCoordinateTolerance) {
    std::ostringstream msg;
    msg << "x(" << v << ") = " << x[v] << " is not zero";
    throw DomainError(msg.str());
  }
  Duplication d{g, {x.begin(), x.end()}, {}};
  for (std::size_t k = 0; k < count; ++k) {
    d.graph = duplicate_vertex(d.graph, v);
    d.vector.insert(d.vector.begin() + static_cast<std::ptrdiff_t>(v + 1), 0.0);
  }
  for (std::size_t k = 1; k <= count; ++k) d.duplicates.push_back(v + k);
  return d;
}

}  // namespace vtypes
