#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vtypes/graph.hpp"
#include "vtypes/polynomial.hpp"
#include "vtypes/search.hpp"
#include "vtypes/spectrum.hpp"
#include "vtypes/theorems.hpp"
#include "vtypes/vertex_types.hpp"

namespace vtypes {

/// Rounds to 12 significant digits so that printed floats are stable; -0 becomes 0.
double round_sig(double x);

nlohmann::json to_json(const Graph& g);
/// "order edges" header, then "u v" per edge, then "v label" per labelled vertex.
std::string edge_list_text(const Graph& g);

/// Coefficients as decimal strings, constant term first.
nlohmann::json to_json(const IntPolynomial& p);
nlohmann::json to_json(const AlgebraicNumber& a);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const VertexTypeReport& r, const Graph& g);
nlohmann::json to_json(const VerificationResult& r);
nlohmann::json to_json(const ChainFinding& f);
nlohmann::json to_json(const RemarkFinding& f);

/// Recursively applies round_sig to every floating value.
nlohmann::json rounded(nlohmann::json j);
/// 12 significant digits, always with a decimal point or exponent.
std::string format_number(double x);
/// One compact line, floats printed by format_number.
std::string json_line(const nlohmann::json& j);

std::string csv_header();
std::string csv_row(const VerificationResult& r);

}  // namespace vtypes
