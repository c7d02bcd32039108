#pragma once

// JSON encoding of weights, cohomology results, adjoint table rows and
// polynomial forms. Terms of a polynomial on P^n x P^n are
// {"x":[e0..en],"y":[e0..en],"c":"p/q"}.

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "adjfol/adjoint.hpp"
#include "adjfol/bbw.hpp"
#include "adjfol/folforms.hpp"
#include "adjfol/rootsystem.hpp"

namespace adjfol {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Integers that fit in int64 as numbers, larger ones as decimal strings.
inline Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

inline Json to_json(const Weight& w) { return Json(w.coords()); }

inline Json to_json(const DotResult& r) {
  if (r.singular()) return Json{{"status", "singular"}};
  return Json{{"status", "regular"}, {"p", r.index_p}, {"dominant", to_json(r.dominant_weight)}};
}

inline Json to_json(const CohomologyResult& c) {
  if (c.zero()) return Json{{"kind", "all-zero"}};
  return Json{{"kind", "concentrated"}, {"degree", c.degree}, {"top_weight", to_json(c.top_weight)}, {"dim", to_json(c.dim)}};
}

inline Json to_json(const Decomposition& d) {
  Json pieces = Json::array();
  for (const auto& p : d.pieces)
    pieces.push_back(Json{{"weight", to_json(p.weight)}, {"twist", p.twist}, {"mult", p.mult}, {"dim", p.dim}});
  return Json{{"unit", to_json(d.unit)}, {"pieces", pieces}};
}

inline Json to_json(const CohomologyTable& t) {
  Json h = Json::array();
  for (const auto& [i, dim] : t.h) h.push_back(Json{{"i", i}, {"dim", to_json(dim)}});
  return Json{{"h", h}};
}

inline Json to_json(const LeviDiagram& ld) {
  Json comps = Json::array();
  for (const auto& c : ld.components) comps.push_back(c.name());
  Json map = Json::array();
  for (const auto& [amb, n] : ld.node_map)
    map.push_back(Json{{"ambient", amb}, {"component", n.component}, {"node", n.local_node}});
  return Json{{"name", ld.name()}, {"components", comps}, {"node_map", map}};
}

inline Json to_json(const H0Omega2& h) {
  Json j{{"exact", h.exact}};
  if (h.exact) {
    j["value"] = to_json(h.value);
  } else {
    j["bounds"] = Json::array({to_json(h.lower), to_json(h.upper)});
    j["note"] = h.note;
    if (h.adjudicated) j["adjudicated"] = *h.adjudicated;
  }
  j["h0_Ddual_twist"] = to_json(h.h0_sub);
  j["h1_Ddual_twist"] = to_json(h.h1_sub);
  j["h0_wedge2"] = to_json(h.h0_wedge);
  return j;
}

inline Json to_json(const AdjointData& ad) {
  return Json{{"datum", {{"type", std::string(1, ad.md.ambient().type_letter())}, {"rank", ad.md.ambient().rank()}}},
              {"adjoint_node", ad.md.marked_node()},
              {"lambda0", to_json(ad.lambda0)},
              {"dim_X", ad.dim_X},
              {"m", ad.m},
              {"D_weight", to_json(ad.D_weight)},
              {"Ddual_weight", to_json(ad.Ddual_weight)},
              {"index", ad.index},
              {"c1_D", ad.c1_D},
              {"note", ad.note}};
}

inline Json to_json(const TableRow& r, bool compare) {
  Json pieces = Json::array();
  for (const auto& p : r.pieces)
    pieces.push_back(Json{{"ambient", to_json(p.ambient)},
                          {"text", p.ambient.pretty()},
                          {"weight", to_json(p.weight)},
                          {"twist", p.twist},
                          {"mult", p.mult},
                          {"dim", p.dim},
                          {"h0", to_json(p.h0)}});
  Json j{{"type", r.type},
         {"dim_g", r.dim_g},
         {"levi", r.levi},
         {"adjoint", to_json(r.data)},
         {"wedge2_Ddual_2", pieces},
         {"dimension_identity", r.dimension_identity},
         {"c1_identity", r.c1_identity},
         {"h0_omega2_1", to_json(r.h0_k1)},
         {"h0_omega2_2", to_json(r.h0_k2)}};
  if (compare) {
    Json cmp{{"available", r.compared}};
    if (r.compared) {
      cmp["agree"] = r.agree;
      cmp["printed"] = r.printed_pieces;
      cmp["notes"] = r.notes;
    }
    j["comparison"] = cmp;
  }
  return j;
}

// ---------------------------------------------------------------------------
// Polynomials and forms

inline Json poly_to_json(const Poly& p, int n) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> ex, ey;
    for (int i = 0; i <= n; ++i) {
      ex.push_back(m[static_cast<std::size_t>(xvar(i))]);
      ey.push_back(m[static_cast<std::size_t>(yvar(n, i))]);
    }
    terms.push_back(Json{{"x", ex}, {"y", ey}, {"c", to_string(c)}});
  }
  return terms;
}

inline Json form_to_json(const Form& w) {
  if (w.degree() != 1) throw InvalidArgument("only 1-forms serialize");
  const int n = fol_n(w.nvars());
  Json dx = Json::array(), dy = Json::array();
  for (int i = 0; i <= n; ++i) {
    dx.push_back(poly_to_json(w.coeff1(xvar(i)), n));
    dy.push_back(poly_to_json(w.coeff1(yvar(n, i)), n));
  }
  Json j{{"schema", kSchemaVersion}, {"n", n}, {"dx", dx}, {"dy", dy}};
  if (auto d = form_bidegree(w)) j["bidegree"] = Json::array({d->a, d->b});
  return j;
}

namespace detail {

inline std::vector<int> exponents(const Json& j, int n, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != n + 1)
    throw ParseError(where + ": exponent vector must be an array of " + std::to_string(n + 1) + " integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() > 255)
      throw ParseError(where + ": exponents must be integers in 0..255");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace detail

inline Poly poly_from_json(const Json& j, int n, const std::string& where = "polynomial") {
  if (!j.is_array()) throw ParseError(where + ": expected an array of terms");
  Poly p(fol_nvars(n));
  std::size_t k = 0;
  for (const auto& t : j) {
    const std::string at = where + " term " + std::to_string(k++);
    if (!t.is_object() || !t.contains("x") || !t.contains("y") || !t.contains("c"))
      throw ParseError(at + ": expected {\"x\":[...],\"y\":[...],\"c\":\"p/q\"}");
    auto ex = detail::exponents(t["x"], n, at);
    auto ey = detail::exponents(t["y"], n, at);
    Rational c;
    if (t["c"].is_string()) c = parse_rational(t["c"].get<std::string>());
    else if (t["c"].is_number_integer()) c = Rational(t["c"].get<std::int64_t>());
    else throw ParseError(at + ": coefficient must be a string \"p/q\" or an integer");
    Monomial m{};
    for (int i = 0; i <= n; ++i) {
      m[static_cast<std::size_t>(xvar(i))] = static_cast<std::uint8_t>(ex[static_cast<std::size_t>(i)]);
      m[static_cast<std::size_t>(yvar(n, i))] = static_cast<std::uint8_t>(ey[static_cast<std::size_t>(i)]);
    }
    p.add_term(m, c);
  }
  return p;
}

inline Form form_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("form: expected a JSON object");
  if (j.contains("schema") && j["schema"] != kSchemaVersion) throw ParseError("form: unsupported schema version");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("form: missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || fol_nvars(n) > kMaxVars) throw ParseError("form: n must be in 1..7");
  Form w(fol_nvars(n), 1);
  for (const char* key : {"dx", "dy"}) {
    if (!j.contains(key) || !j[key].is_array() || static_cast<int>(j[key].size()) != n + 1)
      throw ParseError(std::string("form: \"") + key + "\" must list n+1 coefficient polynomials");
    for (int i = 0; i <= n; ++i) {
      const int var = key[1] == 'x' ? xvar(i) : yvar(n, i);
      w.add(Form::Mask{1} << var, poly_from_json(j[key][static_cast<std::size_t>(i)], n, std::string(key) + std::to_string(i)));
    }
  }
  return w;
}

inline Form parse_form(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("form: malformed JSON: ") + e.what());
  }
  return form_from_json(j);
}

}  // namespace adjfol
