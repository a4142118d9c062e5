#include "vtypes/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "vtypes/algebraic.hpp"
#include "vtypes/error.hpp"
#include "vtypes/exact.hpp"
#include "vtypes/graph.hpp"
#include "vtypes/io.hpp"
#include "vtypes/search.hpp"
#include "vtypes/spectrum.hpp"
#include "vtypes/theorems.hpp"
#include "vtypes/vertex_types.hpp"

namespace vtypes {
namespace {

using nlohmann::json;

/// An error that maps straight onto an exit code.
struct Exit {
  int code;
  std::string message;
};

struct Common {
  std::string out_path;
  std::string format = "json";
  std::optional<double> tau;
  std::size_t workers = 1;
  bool numeric_only = false;

  ClassifierOptions options() const {
    ClassifierOptions o;
    o.spectrum.cluster_tolerance = tau;
    o.isolate_roots = !numeric_only;
    return o;
  }
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out_path, "Write output to PATH instead of standard output");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  sub->add_option("--tau", c.tau, "Cluster tolerance (default 1e-7 * max(1, spectral radius))")
      ->check(CLI::PositiveNumber);
  sub->add_option("--workers", c.workers, "Worker threads for search and randomized verify")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}))
      ->capture_default_str();
  sub->add_flag("--numeric-only", c.numeric_only, "Decide multiplicities of unidentified eigenvalues numerically");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, sep)) parts.push_back(tok);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::optional<double> parse_double(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

GraphSpec spec_arg(const std::string& text) {
  try {
    return parse_spec(text);
  } catch (const Error& e) {
    throw Exit{kExitUsage, e.what()};
  }
}

std::string cell_text(const Graph& g, Vertex v) {
  const auto& tag = g.label(v);
  return tag ? tag->str() : "-";
}

int cmd_gen(const std::string& spec_text, const Common& c, std::ostream& out) {
  const GraphSpec spec = spec_arg(spec_text);
  const Graph g = build(spec);
  if (c.format == "text") {
    out << edge_list_text(g);
  } else if (c.format == "csv") {
    out << "u,v\n";
    for (auto [u, v] : g.edges()) out << u << ',' << v << '\n';
  } else {
    json j = to_json(g);
    j["spec"] = format_spec(spec);
    out << json_line(j) << '\n';
  }
  return kExitOk;
}

int cmd_spectrum(const std::string& spec_text, const std::string& exact_list, bool with_charpoly, const Common& c,
                 std::ostream& out) {
  const GraphSpec spec = spec_arg(spec_text);
  std::vector<std::pair<std::string, AlgebraicNumber>> wanted;
  if (!exact_list.empty()) {
    for (const auto& tok : split(exact_list, ',')) {
      auto a = named_constant(tok);
      if (!a) throw Exit{kExitUsage, "bad token '" + tok + "' in --exact list (expected an integer, omega or -omega)"};
      wanted.emplace_back(tok, *a);
    }
  }
  const Graph g = build(spec);
  const Spectrum sp = eig_sym(g, c.options().spectrum);
  json j = to_json(sp);
  j["spec"] = format_spec(spec);
  std::optional<IntPolynomial> cp;
  if (with_charpoly || !wanted.empty()) cp = char_poly(g);
  if (with_charpoly) j["char_poly"] = to_json(*cp);
  json exact = json::array();
  for (const auto& [name, a] : wanted) {
    const std::size_t k = root_multiplicity(*cp, a);
    json e = {{"value", name}, {"multiplicity", k}};
    if (k > 0 && a.is_rational()) e["main"] = is_main_exact(g, a);
    exact.push_back(e);
  }
  if (!wanted.empty()) j["exact"] = exact;

  if (c.format == "json") {
    out << json_line(j) << '\n';
    return kExitOk;
  }
  if (c.format == "csv") {
    out << "index,value,multiplicity,main\n";
    std::size_t i = 1;
    for (const auto& cl : sp.clusters())
      for (std::size_t r = 0; r < cl.multiplicity; ++r, ++i)
        out << i << ',' << format_number(sp.pairs()[cl.first + r].value) << ',' << cl.multiplicity << ','
            << (cl.main ? "true" : "false") << '\n';
    for (const auto& e : exact)
      out << "exact," << e["value"].get<std::string>() << ',' << e["multiplicity"].get<std::size_t>() << ",\n";
    return kExitOk;
  }
  out << "spec " << format_spec(spec) << "\ntau " << format_number(sp.cluster_tolerance()) << '\n';
  for (const auto& cl : sp.clusters())
    out << format_number(cl.value) << " x" << cl.multiplicity << (cl.main ? " main" : " non-main") << '\n';
  for (const auto& e : exact)
    out << "exact " << e["value"].get<std::string>() << " x" << e["multiplicity"].get<std::size_t>() << '\n';
  if (cp) out << "char_poly " << cp->to_string() << '\n';
  return kExitOk;
}

struct Selector {
  std::string value;
  std::string minpoly;
  std::optional<double> near;
  std::optional<std::size_t> index;
};

Eigenvalue resolve_minpoly(const Classifier& cl, const Selector& sel) {
  IntPolynomial p;
  try {
    p = parse_coefficients(sel.minpoly);
  } catch (const DomainError& e) {
    throw Exit{kExitUsage, e.what()};
  }
  if (!p.is_monic() || p.degree() < 1)
    throw Exit{kExitUsage, "--minpoly '" + sel.minpoly + "' is not a monic polynomial of positive degree"};
  const Spectrum& sp = cl.spectrum();
  std::vector<AlgebraicNumber> roots;
  for (const auto& c : sp.clusters()) {
    const double radius = std::max(sp.cluster_tolerance(), 1e-9);
    try {
      auto a = AlgebraicNumber::make(p, c.value, radius);
      if (root_multiplicity(cl.char_poly(), a) > 0) roots.push_back(a);
    } catch (const NotAnEigenvalue&) {
      throw;
    } catch (const DomainError& e) {
      // reducible input is a selector error, not a miss at this cluster
      if (std::string(e.what()).find("reducible") != std::string::npos) throw Exit{kExitSelector, e.what()};
    }
  }
  if (roots.empty()) throw Exit{kExitSelector, "no eigenvalue of the graph is a root of " + p.to_string()};
  if (sel.near) {
    auto best = std::min_element(roots.begin(), roots.end(), [&](const auto& a, const auto& b) {
      return std::abs(a.approx() - *sel.near) < std::abs(b.approx() - *sel.near);
    });
    return Eigenvalue::of(*best);
  }
  if (roots.size() > 1) {
    std::string list;
    for (const auto& r : roots) list += (list.empty() ? "" : ", ") + format_number(r.approx());
    throw Exit{kExitSelector, "--minpoly matches several eigenvalues (" + list + "); add --near X"};
  }
  return Eigenvalue::of(roots.front());
}

Eigenvalue resolve(const Classifier& cl, const Selector& sel, bool numeric_only) {
  const Spectrum& sp = cl.spectrum();
  Eigenvalue e;
  if (sel.index) {
    if (*sel.index < 1 || *sel.index > sp.order())
      throw Exit{kExitSelector,
                 "--index " + std::to_string(*sel.index) + " is outside 1.." + std::to_string(sp.order())};
    e = cl.eigenvalue_at(*sel.index);
  } else if (!sel.minpoly.empty()) {
    e = resolve_minpoly(cl, sel);
  } else if (auto named = named_constant(sel.value)) {
    e = Eigenvalue::of(*named);
  } else {
    auto v = parse_double(sel.value);
    if (!v) throw Exit{kExitUsage, "bad token '" + sel.value + "' for --value"};
    const Cluster* c = sp.find(*v);
    if (!c) throw Exit{kExitSelector, "no eigenvalue within tau of " + sel.value};
    auto a = cl.identify(c->value);
    e = a ? Eigenvalue::of(*a) : Eigenvalue::numeric(c->value);
  }
  if (numeric_only && e.exact && !e.exact->is_rational()) e = Eigenvalue::numeric(e.approx);
  return e;
}

int cmd_classify(const std::string& spec_text, const Selector& sel, const Common& c, std::ostream& out) {
  const GraphSpec spec = spec_arg(spec_text);
  const Classifier cl(build(spec), c.options());
  const Eigenvalue lambda = resolve(cl, sel, c.numeric_only);
  VertexTypeReport r;
  try {
    r = cl.classify_all(lambda);
  } catch (const NotAnEigenvalue& e) {
    throw Exit{kExitSelector, e.what()};
  }
  const Graph& g = cl.graph();
  if (c.format == "csv") {
    out << "vertex,cell,type\n";
    for (Vertex v = 0; v < g.order(); ++v)
      out << v << ',' << cell_text(g, v) << ',' << type_name(r.per_vertex[v]) << '\n';
    return kExitOk;
  }
  if (c.format == "text") {
    out << "spec " << format_spec(spec) << "\nlambda " << r.eigenvalue.describe() << "\nk " << r.multiplicity
        << "\nroute " << route_name(r.route) << "\ntau " << format_number(r.tolerance) << '\n';
    for (const auto& cv : r.per_cell)
      out << cv.tag.str() << ' ' << (cv.type ? std::string(type_name(*cv.type)) : std::string("mixed")) << '\n';
    for (const auto& a : r.anomalies) out << "anomaly " << a << '\n';
    return kExitOk;
  }
  json j = to_json(r, g);
  j["spec"] = format_spec(spec);
  j["tolerances"]["coordinate"] = c.options().coordinate_tolerance;
  out << json_line(j) << '\n';
  return kExitOk;
}

struct VerifyArgs {
  std::string spec;
  std::string claim;
  bool all_claims = false;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::string family = "nsg";
  int max_h = 5;
  int max_cell = 4;
};

bool claim_matches(const std::string& id, const std::string& claim) {
  return claim.empty() || id == claim || id.rfind(claim + "-", 0) == 0;
}

void require_known_claim(const std::string& claim, Family f) {
  if (claim.empty()) return;
  for (const auto& id : claim_ids(f))
    if (claim_matches(id, claim)) return;
  throw Exit{kExitUsage, "unknown claim '" + claim + "' for family " + std::string(family_name(f))};
}

std::vector<VerificationResult> run_spec(const GraphSpec& spec, const std::string& claim, const ClassifierOptions& o) {
  return claim.empty() ? verify_all(spec, o) : verify_claim(spec, claim, o);
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
  if (a.spec.empty() && !a.all_claims && a.random == 0)
    throw Exit{kExitUsage, "verify needs a SPEC, --all-claims or --random N"};
  const ClassifierOptions opts = c.options();
  std::vector<VerificationResult> results;
  std::size_t specs = 0;

  if (a.all_claims) {
    bool any = false;
    for (auto& r : verify_golden_claims()) {
      if (!claim_matches(r.claim, a.claim)) continue;
      any = true;
      results.push_back(std::move(r));
    }
    if (!any && a.spec.empty() && a.random == 0) throw Exit{kExitUsage, "unknown claim '" + a.claim + "'"};
  }
  if (!a.spec.empty()) {
    const GraphSpec spec = spec_arg(a.spec);
    require_known_claim(a.claim, spec.family);
    for (auto& r : run_spec(spec, a.claim, opts)) results.push_back(std::move(r));
    ++specs;
  }
  if (a.random > 0) {
    const Family f = a.family == "dng" ? Family::Chain : Family::Threshold;
    require_known_claim(a.claim, f);
    const auto drawn = random_specs(f, a.random, a.seed, a.max_h, a.max_cell);
    auto per_spec = parallel_map(drawn, [&](const GraphSpec& s) { return run_spec(s, a.claim, opts); }, c.workers);
    for (auto& part : per_spec)
      for (auto& r : part) results.push_back(std::move(r));
    specs += drawn.size();
  }

  std::map<Status, std::size_t> counts{{Status::Pass, 0}, {Status::Fail, 0}, {Status::Skip, 0}};
  for (const auto& r : results) ++counts[r.status];

  if (c.format == "csv") {
    out << csv_header() << '\n';
    for (const auto& r : results) out << csv_row(r) << '\n';
  } else if (c.format == "text") {
    for (const auto& r : results) out << status_name(r.status) << ' ' << r.claim << ' ' << r.spec << '\n';
  } else {
    for (const auto& r : results) out << json_line(to_json(r)) << '\n';
  }
  json summary = {{"results", results.size()},
                  {"specs", specs},
                  {"pass", counts[Status::Pass]},
                  {"fail", counts[Status::Fail]},
                  {"skip", counts[Status::Skip]}};
  if (c.format == "json") {
    out << json_line({{"summary", summary}}) << '\n';
  } else {
    out << "summary,results=" << results.size() << ",pass=" << counts[Status::Pass]
        << ",fail=" << counts[Status::Fail] << ",skip=" << counts[Status::Skip] << '\n';
  }
  return counts[Status::Fail] > 0 ? kExitFailed : kExitOk;
}

std::string join_cells(const std::vector<CellTag>& cells) {
  std::string s;
  for (const auto& t : cells) s += (s.empty() ? "" : " ") + t.str();
  return s;
}

int cmd_search(const std::string& kind, int max_h, int max_cell, const Common& c, std::ostream& out) {
  const ClassifierOptions opts = c.options();
  json summary = {{"search", kind}, {"max_h", max_h}, {"max_cell", max_cell}};
  if (kind == "chain-neutrals") {
    const auto findings = search_chain_neutrals(max_h, max_cell, c.workers, opts);
    std::set<std::size_t> hs;
    std::set<GraphSpec> specs;
    bool all_cv = true;
    if (c.format == "csv") out << "spec,h,index,lambda,cells,cross_validated\n";
    for (const auto& f : findings) {
      hs.insert(f.spec.h());
      specs.insert(f.spec);
      all_cv = all_cv && f.cross_validated;
      if (c.format == "json") {
        out << json_line(to_json(f)) << '\n';
      } else if (c.format == "csv") {
        out << '"' << format_spec(f.spec) << "\"," << f.spec.h() << ',' << f.index << ','
            << format_number(f.value) << ',' << join_cells(f.cells) << ','
            << (f.cross_validated ? "true" : "false") << '\n';
      } else {
        out << format_spec(f.spec) << " lambda_" << f.index << '=' << format_number(f.value) << ' '
            << join_cells(f.cells) << '\n';
      }
    }
    summary["searched"] = enumerate_specs(Family::Chain, max_h, max_cell).size();
    summary["findings"] = findings.size();
    summary["specs_with_findings"] = specs.size();
    summary["h_values"] = hs;
    summary["all_cross_validated"] = all_cv;
  } else {
    const auto findings = search_remark_mh(max_h, max_cell, c.workers, opts);
    std::map<std::string, std::size_t> by_type{{"downer", 0}, {"neutral", 0}, {"parter", 0}};
    if (c.format == "csv") out << "spec,m_h,multiplicity,v_h,u_h\n";
    for (const auto& f : findings) {
      ++by_type[std::string(type_name(f.v_h))];
      if (c.format == "json") {
        out << json_line(to_json(f)) << '\n';
      } else if (c.format == "csv") {
        out << '"' << format_spec(f.spec) << "\"," << f.m_h << ',' << f.multiplicity << ',' << type_name(f.v_h)
            << ',' << type_name(f.u_h) << '\n';
      } else {
        out << format_spec(f.spec) << " lambda=-" << f.m_h << " k=" << f.multiplicity << " V_h " << type_name(f.v_h)
            << " U_h " << type_name(f.u_h) << '\n';
      }
    }
    summary["searched"] = enumerate_specs(Family::Threshold, max_h, max_cell).size();
    summary["findings"] = findings.size();
    summary["v_h_types"] = by_type;
  }
  if (c.format == "json") {
    out << json_line({{"summary", summary}}) << '\n';
  } else {
    out << "summary";
    for (const auto& [k, v] : summary.items()) out << ',' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Downer, Neutral and Parter vertices of threshold and chain graphs", "vtypes"};
  app.require_subcommand(1, 1);

  Common common;

  std::string spec_text;
  auto* gen = app.add_subcommand("gen", "Build a graph and print it");
  gen->add_option("spec", spec_text, "nsg:m1,..;n1,.. | dng:m1,..;n1,.. | half:h")->required();
  add_common(gen, common);

  std::string exact_list;
  bool with_charpoly = false;
  auto* spectrum = app.add_subcommand("spectrum", "Numeric spectrum with clusters and mainness");
  spectrum->add_option("spec", spec_text, "Graph specification")->required();
  spectrum->add_option("--exact", exact_list, "Comma list of integers / omega / -omega for exact multiplicities");
  spectrum->add_flag("--charpoly", with_charpoly, "Include the characteristic polynomial");
  add_common(spectrum, common);

  Selector sel;
  std::string index_text;
  std::string near_text;
  auto* classify = app.add_subcommand("classify", "Downer/Neutral/Parter report for one eigenvalue");
  classify->add_option("spec", spec_text, "Graph specification")->required();
  auto* o_value = classify->add_option("--value", sel.value, "Eigenvalue: an integer, omega, -omega or a decimal");
  auto* o_minpoly = classify->add_option("--minpoly", sel.minpoly, "Monic minimal polynomial, constant term first");
  auto* o_index = classify->add_option("--index", index_text, "1-based position, lambda_1 >= ... >= lambda_n");
  auto* o_near = classify->add_option("--near", near_text, "Pick the root of --minpoly nearest this value");
  o_value->excludes(o_minpoly)->excludes(o_index);
  o_minpoly->excludes(o_index);
  o_near->needs(o_minpoly);
  add_common(classify, common);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check the theorems on a spec, a random suite or the golden set");
  verify->add_option("spec", va.spec, "Graph specification");
  verify->add_option("--claim", va.claim, "Restrict to one claim id (or an id prefix)");
  verify->add_flag("--all-claims", va.all_claims, "Run the worked examples, constructions and identity tables");
  verify->add_option("--random", va.random, "Number of random specs");
  verify->add_option("--seed", va.seed, "Seed for --random")->capture_default_str();
  verify->add_option("--family", va.family, "Family for --random")
      ->check(CLI::IsMember({"nsg", "dng"}))
      ->capture_default_str();
  verify->add_option("--max-h", va.max_h, "Largest h for --random")->check(CLI::Range(1, 64))->capture_default_str();
  verify->add_option("--max-cell", va.max_cell, "Largest cell size for --random")
      ->check(CLI::Range(1, 64))
      ->capture_default_str();
  add_common(verify, common);

  std::string kind;
  int max_h = 4;
  int max_cell = 1;
  auto* search = app.add_subcommand("search", "Exhaustive searches over small parameter ranges");
  search->add_option("kind", kind, "chain-neutrals | remark-mh")
      ->required()
      ->check(CLI::IsMember({"chain-neutrals", "remark-mh"}));
  search->add_option("--max-h", max_h, "Largest h")->check(CLI::Range(1, 64))->capture_default_str();
  search->add_option("--max-cell", max_cell, "Largest cell size")->check(CLI::Range(1, 64))->capture_default_str();
  add_common(search, common);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!index_text.empty()) {
      std::size_t i = 0;
      auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), i);
      if (ec != std::errc{} || ptr != index_text.data() + index_text.size())
        throw Exit{kExitUsage, "bad token '" + index_text + "' for --index"};
      sel.index = i;
    }
    if (!near_text.empty()) {
      sel.near = parse_double(near_text);
      if (!sel.near) throw Exit{kExitUsage, "bad token '" + near_text + "' for --near"};
    }
    if (*classify && sel.value.empty() && sel.minpoly.empty() && !sel.index)
      throw Exit{kExitUsage, "classify needs one of --value, --minpoly or --index"};

    std::ofstream file;
    std::ostringstream buffer;
    std::ostream& sink = common.out_path.empty() ? out : static_cast<std::ostream&>(buffer);

    int code = kExitOk;
    if (*gen) code = cmd_gen(spec_text, common, sink);
    else if (*spectrum) code = cmd_spectrum(spec_text, exact_list, with_charpoly, common, sink);
    else if (*classify) code = cmd_classify(spec_text, sel, common, sink);
    else if (*verify) code = cmd_verify(va, common, sink);
    else code = cmd_search(kind, max_h, max_cell, common, sink);

    if (!common.out_path.empty()) {
      file.open(common.out_path, std::ios::binary | std::ios::trunc);
      if (!file) throw Exit{kExitUsage, "cannot open '" + common.out_path + "' for writing"};
      file << buffer.str();
    }
    return code;
  } catch (const Exit& e) {
    err << "vtypes: " << e.message << '\n';
    return e.code;
  } catch (const SpecError& e) {
    err << "vtypes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NotAnEigenvalue& e) {
    err << "vtypes: " << e.what() << '\n';
    return kExitSelector;
  } catch (const DomainError& e) {
    err << "vtypes: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "vtypes: internal error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace vtypes
