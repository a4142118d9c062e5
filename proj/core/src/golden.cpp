#include <cmath>
#include <set>

#include "vtypes/error.hpp"
#include "vtypes/exact.hpp"
#include "vtypes/theorems.hpp"

namespace vtypes {

using nlohmann::json;

namespace {

VerificationResult result(std::string claim, std::string spec) {
  VerificationResult r;
  r.claim = std::move(claim);
  r.spec = std::move(spec);
  return r;
}

void check(VerificationResult& r, bool ok, json witness) {
  if (ok) return;
  r.status = Status::Fail;
  r.witnesses["failures"].push_back(std::move(witness));
}

std::vector<std::string> neutral_cells(const VertexTypeReport& rep) {
  std::vector<std::string> out;
  for (const auto& c : rep.per_cell)
    if (!c.type || *c.type != VertexType::Downer) out.push_back(c.tag.str());
  return out;
}

// lambda_i must be the integer `value`; the neutral cells must be exactly `expected`.
VerificationResult neutral_example(std::string claim, const std::string& spec, std::size_t i, long long value,
                                   std::vector<std::string> expected) {
  auto r = result(std::move(claim), spec);
  Classifier cl(build(parse_spec(spec)));
  const double got = cl.spectrum().lambda(i);
  check(r, std::abs(got - static_cast<double>(value)) <= cl.spectrum().cluster_tolerance(),
        json{{"check", "lambda_i"}, {"i", i}, {"got", got}, {"expected", value}});
  const auto rep = cl.classify_all(Eigenvalue::of(AlgebraicNumber::integer(value)));
  const auto cells = neutral_cells(rep);
  r.witnesses["neutral_cells"] = cells;
  r.witnesses["k"] = rep.multiplicity;
  r.witnesses["route"] = std::string(route_name(rep.route));
  check(r, cells == expected, json{{"check", "neutral cells"}, {"got", cells}, {"expected", expected}});
  check(r, rep.vertices_of(VertexType::Parter).empty(), json{{"check", "no parter vertices"}});
  return r;
}

void check_pattern(VerificationResult& r, const PatternEigenvector& p, int h) {
  const double res = sum_rule_residual(p.graph, p.eigenvalue.approx(), p.vector);
  check(r, res < 1e-10, json{{"h", h}, {"check", "sum rule"}, {"residual", res}});
  check(r, validate_family(p.graph, Family::Chain), json{{"h", h}, {"check", "chain graph"}});
  const auto rep = classify_all(p.graph, Eigenvalue::of(p.eigenvalue));
  check(r, rep.vertices_of(VertexType::Neutral) == p.zeros,
        json{{"h", h}, {"check", "neutral set equals zero positions"}, {"lambda", p.eigenvalue.describe()}});
  check(r, rep.route == Route::BothAgree, json{{"h", h}, {"check", "routes agree"}, {"anomalies", rep.anomalies}});
  r.witnesses["cases"].push_back(json{{"h", h}, {"lambda", p.eigenvalue.describe()}, {"zeros", p.zeros.size()}});
}

}  // namespace

std::vector<VerificationResult> verify_golden_claims() {
  std::vector<VerificationResult> out;

  {
    auto r = result("example-remark-mh", "nsg:2,2,2;2,3,2");
    const auto rep = classify_all(build(parse_spec(r.spec)), Eigenvalue::of(AlgebraicNumber::integer(-2)));
    check(r, rep.multiplicity == 1, json{{"check", "mult(-2)"}, {"got", rep.multiplicity}});
    check(r, rep.cell_type({Side::U, 3}) == VertexType::Downer, json{{"check", "U3 downer"}});
    check(r, rep.cell_type({Side::V, 3}) == VertexType::Neutral, json{{"check", "V3 neutral"}});
    r.witnesses["neutral_cells"] = neutral_cells(rep);
    out.push_back(std::move(r));
  }
  out.push_back(neutral_example("example-neutral-u2-u4", "nsg:4,1,3,1,1;1,1,1,2,1", 3, 1, {"U2", "U4"}));
  out.push_back(neutral_example("example-neutral-v2-v4", "nsg:2,4,4,2;1,1,1,2", 16, -2, {"V2", "V4"}));
  out.push_back(neutral_example("example-neutral-u3-v2", "nsg:2,2,5,1;1,1,1,1", 2, 1, {"U3", "V2"}));

  {
    auto r = result("example-interval", "nsg:1,1,5;1,1,8");
    AnalyzedGraph g(parse_spec(r.spec));
    const auto iv = nsg_intervals(g);
    check(r, iv.size() == 1, json{{"check", "one interval"}, {"got", iv.size()}});
    if (iv.size() == 1) {
      r.witnesses["I_2"] = {iv[0].lo, iv[0].hi};
      check(r, std::abs(iv[0].lo + 1.48) <= 0.01 && std::abs(iv[0].hi - 2.17) <= 0.01,
            json{{"check", "I_2"}, {"lo", iv[0].lo}, {"hi", iv[0].hi}});
    }
    const std::size_t n = g.order();
    for (std::size_t i : {std::size_t{1}, n - 2, n - 1, n}) {
      const auto& rep = g.report(i);
      bool all_u = true;
      for (Vertex v = 0; v < n; ++v)
        if (g.graph().label(v)->side == Side::U && rep.per_vertex[v] != VertexType::Downer) all_u = false;
      check(r, all_u, json{{"check", "U downer"}, {"i", i}});
    }
    out.push_back(std::move(r));
  }

  {
    auto r = result("spectrum-examples", "nsg:1;1 nsg:3;1 nsg:2,2,2;2,3,2");
    const std::tuple<const char*, std::size_t, std::size_t> cases[] = {
        {"nsg:1;1", 0, 1}, {"nsg:3;1", 2, 0}, {"nsg:2,2,2;2,3,2", 3, 4}};
    for (const auto& [spec, m0, m1] : cases) {
      const auto phi = char_poly(build(parse_spec(spec)));
      const auto g0 = root_multiplicity(phi, AlgebraicNumber::zero());
      const auto g1 = root_multiplicity(phi, AlgebraicNumber::minus_one());
      check(r, g0 == m0 && g1 == m1, json{{"spec", spec}, {"mult_0", g0}, {"mult_minus_1", g1}});
    }
    out.push_back(std::move(r));
  }

  {
    auto r = result("table1", "period-6");
    for (const auto& id : table1_identities())
      check(r, id.holds(), json{{"identity", id.identity}, {"s", id.s}, {"lhs", id.lhs.str()}, {"rhs", id.rhs.str()}});
    check(r, period6_pattern().period_sum() == ZOmega{}, json{{"check", "period sum"}});
    out.push_back(std::move(r));
  }
  {
    auto r = result("table2", "period-10");
    for (const auto& id : table2_identities())
      check(r, id.holds(), json{{"identity", id.identity}, {"s", id.s}, {"lhs", id.lhs.str()}, {"rhs", id.rhs.str()}});
    check(r, period10_pattern().period_sum() == ZOmega{}, json{{"check", "period sum"}});
    out.push_back(std::move(r));
  }

  {
    auto r = result("period6", "half:1,4,7,10,13");
    for (int h : {1, 4, 7, 10, 13}) check_pattern(r, build_period6(h), h);
    out.push_back(std::move(r));
  }
  {
    auto r = result("period10", "half:2,7,12,17");
    for (int h : {2, 7, 12, 17}) check_pattern(r, build_period10(h), h);
    out.push_back(std::move(r));
  }
  {
    auto r = result("negation", "half:1,4,7,12");
    for (const auto& p : {build_period6(1), build_period6(4), build_period6(7), build_period10(12)})
      check_pattern(r, negate_pattern(p), static_cast<int>(p.graph.order() / 2));
    out.push_back(std::move(r));
  }

  {
    auto r = result("duplication", "half:4");
    const auto p = build_period6(4);
    const Vertex u2 = *p.graph.find_vertex({Side::U, 2});
    const Vertex v2 = *p.graph.find_vertex({Side::V, 2});
    const double lambda = p.eigenvalue.approx();
    const auto d1 = extend_by_duplication(p.graph, lambda, p.vector, u2, 1);
    check(r, d1.graph.same_adjacency(build(parse_spec("dng:1,2,1,1;1,1,1,1"))),
          json{{"check", "H(4) + twin of u2 is DNG(1,2,1,1;1,1,1,1)"}});
    const auto d3 = extend_by_duplication(p.graph, lambda, p.vector, v2, 3);
    check(r, d3.graph.order() == 11, json{{"check", "order"}, {"got", d3.graph.order()}});
    for (const auto* d : {&d1, &d3}) {
      check(r, sum_rule_residual(d->graph, lambda, d->vector) < 1e-10, json{{"check", "sum rule after duplication"}});
      check(r, validate_family(d->graph, Family::Chain), json{{"check", "chain graph after duplication"}});
      const auto rep = classify_all(d->graph, Eigenvalue::of(p.eigenvalue));
      for (Vertex v : d->duplicates)
        check(r, rep.per_vertex[v] == VertexType::Neutral, json{{"check", "duplicate neutral"}, {"vertex", v}});
    }
    bool rejected = false;
    try {
      extend_by_duplication(p.graph, lambda, p.vector, *p.graph.find_vertex({Side::U, 1}), 1);
    } catch (const DomainError&) {
      rejected = true;
    }
    check(r, rejected, json{{"check", "nonzero coordinate rejected"}});
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vtypes
