#include "llt/json_io.hpp"

#include <limits>

#include "llt/errors.hpp"

namespace llt {

Json qpoly_to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const BigInt& c : p.coeffs()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
      arr.push_back(c.convert_to<long long>());
    } else {
      arr.push_back(c.str());
    }
  }
  return arr;
}

QPoly qpoly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("q coefficients must be an array");
  std::vector<BigInt> cs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      cs.emplace_back(c.get<long long>());
    } else if (c.is_string()) {
      try {
        cs.emplace_back(c.get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("bad integer string in q coefficients");
      }
    } else {
      throw ParseError("q coefficients must be integers");
    }
  }
  return QPoly(std::move(cs));
}

Json poly_to_json(const XQPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exps", e}, {"q", qpoly_to_json(c)}});
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

XQPoly poly_from_json(const Json& j) {
  try {
    XQPoly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
      auto e = t.at("exps").get<Exponent>();
      if (static_cast<int>(e.size()) != p.nvars()) throw ParseError("exponent vector length differs from nvars");
      for (int x : e) {
        if (x < 0) throw ParseError("negative exponent");
      }
      p.add_term(e, qpoly_from_json(t.at("q")));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

Json expansion_to_json(const SymExpansion& e) {
  Json terms = Json::array();
  for (const auto& [la, c] : e.coeffs) {
    if (c.is_zero()) continue;
    terms.push_back(Json{{"partition", la.parts()}, {"q", qpoly_to_json(c)}});
  }
  return Json{{"basis", basis_symbol(e.basis)}, {"terms", std::move(terms)}};
}

}  // namespace llt
