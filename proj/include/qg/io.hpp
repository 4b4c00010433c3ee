#pragma once

// JSON encodings of coefficients, elements and expansions.
//
// Coefficient: [[half_exponent, "integer"], ...] sorted by exponent, or
// {"num": [...], "den": [...]} for a non-Laurent rational function.
// Element: {"presentation": {"type","rank","variant"},
//           "terms": [{"coeff": ..., "pbw": {"a","c","mu","nu"}}, ...]}

#include "canonical.hpp"
#include "rankone.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qg {

using json = nlohmann::json;

inline json laurent_to_json(const LaurentHalf &p) {
  json arr = json::array();
  for (const auto &[e, c] : p.terms())
    arr.push_back(json::array({e, c.get_str()}));
  return arr;
}

inline LaurentHalf laurent_from_json(const json &j) {
  if (!j.is_array())
    throw std::invalid_argument("coefficient must be an array of [half_exponent, \"integer\"]");
  std::vector<std::pair<int, Integer>> terms;
  for (const auto &t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
      throw std::invalid_argument("malformed coefficient term " + t.dump());
    Integer c;
    if (c.set_str(t[1].get<std::string>(), 10) != 0)
      throw std::invalid_argument("malformed integer " + t[1].dump());
    terms.emplace_back(t[0].get<int>(), c);
  }
  return LaurentHalf::from_terms(terms);
}

inline json coeff_to_json(const RatFunc &c) {
  if (c.is_laurent())
    return laurent_to_json(c.laurent());
  return json{{"num", laurent_to_json(c.num())}, {"den", laurent_to_json(c.den())}};
}

inline RatFunc coeff_from_json(const json &j) {
  if (j.is_object())
    return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
  return RatFunc(laurent_from_json(j));
}

inline json presentation_json(const AlgebraPtr &alg) {
  const CartanDatum &cd = alg->cartan();
  return json{{"type", std::string(1, cd.name()[0])},
              {"rank", cd.rank()},
              {"variant", variant_name(alg->variant())}};
}

inline json element_to_json(const Element &x) {
  json terms = json::array();
  for (const auto &[m, c] : expand_pbw(x))
    terms.push_back(
        json{{"coeff", coeff_to_json(c)},
             {"pbw", json{{"a", m.a}, {"c", m.c}, {"mu", m.mu}, {"nu", m.nu}}}});
  return json{{"presentation", presentation_json(x.algebra())}, {"terms", terms}};
}

inline Element element_from_json(const json &j) {
  const json &p = j.at("presentation");
  const AlgebraPtr alg = Algebra::get(p.at("type").get<std::string>().at(0), p.at("rank").get<int>(),
                                      parse_variant(p.at("variant").get<std::string>()));
  Element out(alg);
  for (const auto &t : j.at("terms")) {
    const json &m = t.at("pbw");
    const PBWMonomial pm{m.at("a").get<std::vector<int>>(), m.at("c").get<std::vector<int>>(),
                         m.at("mu").get<Weight>(), m.at("nu").get<Weight>()};
    out += pbw_element(alg, pm) * coeff_from_json(t.at("coeff"));
  }
  return out;
}

inline json dcb_index_json(const DCBIndex &i) {
  return json{{"alpha", i.alpha}, {"beta", i.beta}, {"a", i.a}, {"c", i.c}};
}

inline json expansion_to_json(const Expansion &e) {
  json rows = json::array();
  for (const auto &[i, c] : e.coeffs)
    rows.push_back(json{{"index", dcb_index_json(i)}, {"coeff", coeff_to_json(c)}});
  return json{{"coefficients", rows}, {"positive", e.positive}};
}

inline json ldom_json(const LDomPair &p) {
  return json{{"v", {p.v1, p.v2}}, {"w", {p.w1, p.w2}}};
}

inline json dcb_expansion_to_json(const DCBExpansion &e) {
  json rows = json::array();
  for (const auto &[p, c] : e)
    rows.push_back(json{{"pair", ldom_json(p)}, {"coeff", laurent_to_json(c)}});
  return rows;
}

} // namespace qg
