#include "vtypes/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace vtypes {

using nlohmann::json;

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json labels = json::array();
  for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v) ? json(g.label(v)->str()) : json(nullptr));
  return json{{"order", g.order()}, {"edge_count", g.edge_count()}, {"edges", edges}, {"labels", labels}};
}

std::string edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.label(v)) out << v << ' ' << g.label(v)->str() << '\n';
  return out.str();
}

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

json to_json(const AlgebraicNumber& a) {
  return json{{"minpoly", to_json(a.minpoly())}, {"approx", a.approx()}, {"name", a.describe()}};
}

json to_json(const Spectrum& s) {
  json clusters = json::array();
  for (const auto& c : s.clusters())
    clusters.push_back(json{{"value", c.value}, {"multiplicity", c.multiplicity}, {"main", c.main}, {"first", c.first + 1}});
  return json{{"values", s.values()}, {"clusters", clusters},
              {"tolerances", {{"cluster", s.cluster_tolerance()}, {"main", s.main_tolerance()}}}};
}

json to_json(const VertexTypeReport& r, const Graph& g) {
  json lambda{{"approx", r.eigenvalue.approx}, {"name", r.eigenvalue.describe()}};
  if (r.eigenvalue.exact) lambda["minpoly"] = to_json(r.eigenvalue.exact->minpoly());
  if (r.isolation) lambda["isolation"] = {r.isolation->first, r.isolation->second};
  json vertices = json::array();
  for (Vertex v = 0; v < r.per_vertex.size(); ++v)
    vertices.push_back(json{{"id", v},
                            {"cell", g.label(v) ? json(g.label(v)->str()) : json(nullptr)},
                            {"type", std::string(type_name(r.per_vertex[v]))}});
  json cells = json::array();
  for (const auto& c : r.per_cell)
    cells.push_back(json{{"tag", c.tag.str()}, {"type", c.type ? std::string(type_name(*c.type)) : "mixed"}});
  return json{{"lambda", lambda},
              {"k", r.multiplicity},
              {"route", std::string(route_name(r.route))},
              {"vertices", vertices},
              {"cells", cells},
              {"anomalies", r.anomalies},
              {"tolerances", {{"cluster", r.tolerance}}}};
}

json to_json(const VerificationResult& r) {
  return json{{"claim", r.claim},
              {"spec", r.spec},
              {"status", std::string(status_name(r.status))},
              {"witnesses", r.witnesses},
              {"notes", r.notes}};
}

json to_json(const ChainFinding& f) {
  json cells = json::array();
  for (const auto& c : f.cells) cells.push_back(c.str());
  json out{{"spec", format_spec(f.spec)},
           {"h", f.spec.h()},
           {"lambda", f.value},
           {"index", f.index},
           {"non_downers", f.non_downers},
           {"cells", cells},
           {"cross_validated", f.cross_validated}};
  if (f.exact) out["exact"] = to_json(*f.exact);
  if (f.exact_agrees) out["exact_agrees"] = *f.exact_agrees;
  return out;
}

json to_json(const RemarkFinding& f) {
  return json{{"spec", format_spec(f.spec)},
              {"m_h", f.m_h},
              {"lambda", -f.m_h},
              {"k", f.multiplicity},
              {"V_h", std::string(type_name(f.v_h))},
              {"U_h", std::string(type_name(f.u_h))}};
}

json rounded(json j) {
  if (j.is_number_float()) return round_sig(j.get<double>());
  if (j.is_array() || j.is_object())
    for (auto& x : j) x = rounded(std::move(x));
  return j;
}

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", round_sig(x));
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

namespace {

void write_compact(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += json(k).dump();
        out += ':';
        write_compact(v, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write_compact(j[i], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string json_line(const json& j) {
  std::string out;
  write_compact(j, out);
  return out;
}

std::string csv_header() { return "claim,spec,status"; }

std::string csv_row(const VerificationResult& r) {
  // specs contain commas, so the field is quoted
  return r.claim + ",\"" + r.spec + "\"," + std::string(status_name(r.status));
}

}  // namespace vtypes
