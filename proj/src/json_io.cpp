#include "oapoly/json_io.hpp"

#include <fstream>
#include <iostream>
#include <stdexcept>

namespace oapoly {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number())
      throw std::invalid_argument(std::string(what) + " must contain numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

int int_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field \"") + key +
                                "\"");
  return j.at(key).get<int>();
}

}  // namespace

nlohmann::json vector_to_json(const LatticeVector& v) {
  return {{"values", v.values()}};
}

LatticeVector vector_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("values"))
    throw std::invalid_argument("vector JSON must be {\"values\": [...]}");
  return LatticeVector(number_array(j.at("values"), "\"values\""));
}

nlohmann::json complex_to_json(const ComplexLatticeVector& z) {
  return {{"re", z.re.values()}, {"im", z.im.values()}};
}

ComplexLatticeVector complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im"))
    throw std::invalid_argument(
        "complex vector JSON must be {\"re\": [...], \"im\": [...]}");
  return {LatticeVector(number_array(j.at("re"), "\"re\"")),
          LatticeVector(number_array(j.at("im"), "\"im\""))};
}

bool looks_complex(const nlohmann::json& j) {
  return j.is_object() && j.contains("re") && j.contains("im");
}

nlohmann::json tuple_to_json(std::span<const LatticeVector> fs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& f : fs) arr.push_back(vector_to_json(f));
  return arr;
}

std::vector<LatticeVector> tuple_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("tuple JSON must be a nonempty array");
  std::vector<LatticeVector> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(vector_from_json(e));
  return out;
}

std::vector<ComplexLatticeVector> complex_tuple_from_json(
    const nlohmann::json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("tuple JSON must be a nonempty array");
  std::vector<ComplexLatticeVector> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

nlohmann::json polynomial_to_json(const HomogeneousPolynomial& P) {
  nlohmann::json monomials = nlohmann::json::array();
  for (std::size_t t = 0; t < P.term_count(); ++t) {
    auto e = P.exponents(t);
    auto c = P.coefficient(t);
    monomials.push_back(
        {{"alpha", std::vector<int>(e.begin(), e.end())},
         {"coeff", std::vector<double>(c.begin(), c.end())}});
  }
  return {{"degree", P.degree()},
          {"domain_dim", P.domain_dim()},
          {"codomain_dim", P.codomain_dim()},
          {"monomials", monomials}};
}

HomogeneousPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object())
    throw std::invalid_argument("polynomial JSON must be an object");
  const int n = int_field(j, "degree");
  const int d = int_field(j, "domain_dim");
  const int p = int_field(j, "codomain_dim");
  if (!j.contains("monomials") || !j.at("monomials").is_array())
    throw std::invalid_argument("polynomial JSON needs a \"monomials\" array");

  std::vector<HomogeneousPolynomial::Term> terms;
  for (const auto& m : j.at("monomials")) {
    if (!m.is_object() || !m.contains("alpha") || !m.contains("coeff"))
      throw std::invalid_argument(
          "each monomial must be {\"alpha\": [...], \"coeff\": [...]}");
    const auto& ja = m.at("alpha");
    if (!ja.is_array())
      throw std::invalid_argument("\"alpha\" must be an array");
    MultiIndex alpha;
    alpha.reserve(ja.size());
    for (const auto& e : ja) {
      if (!e.is_number_integer())
        throw std::invalid_argument("\"alpha\" must contain integers");
      alpha.push_back(e.get<int>());
    }
    terms.emplace_back(std::move(alpha), number_array(m.at("coeff"), "\"coeff\""));
  }
  return HomogeneousPolynomial(n, d, p, std::move(terms));
}

nlohmann::json load_json(const std::string& path) {
  try {
    if (path == "-") return nlohmann::json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace oapoly
