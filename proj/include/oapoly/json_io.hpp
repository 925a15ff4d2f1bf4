#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oapoly/complexify.hpp"
#include "oapoly/lattice.hpp"
#include "oapoly/polynomial.hpp"

namespace oapoly {

// Wire formats:
//   vector      {"values": [...]}
//   complex     {"re": [...], "im": [...]}
//   tuple       array of vector / complex objects
//   polynomial  {"degree": n, "domain_dim": d, "codomain_dim": p,
//                "monomials": [{"alpha": [... d ints ...],
//                               "coeff": [... p reals ...]}, ...]}
// Malformed input raises std::invalid_argument. Duplicate alphas are
// rejected by the polynomial constructor.

nlohmann::json vector_to_json(const LatticeVector& v);
LatticeVector vector_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const ComplexLatticeVector& z);
ComplexLatticeVector complex_from_json(const nlohmann::json& j);

nlohmann::json tuple_to_json(std::span<const LatticeVector> fs);
std::vector<LatticeVector> tuple_from_json(const nlohmann::json& j);
std::vector<ComplexLatticeVector> complex_tuple_from_json(const nlohmann::json& j);

// True when j is an object with "re"/"im" keys rather than "values".
bool looks_complex(const nlohmann::json& j);

nlohmann::json polynomial_to_json(const HomogeneousPolynomial& P);
HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j);

// Parses a whole file (or stdin when path is "-").
nlohmann::json load_json(const std::string& path);

}  // namespace oapoly
