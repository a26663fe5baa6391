#include "lkb/json_io.hpp"

#include <limits>

#include "lkb/error.hpp"

namespace lkb {

Json to_json(const LaurentPoly& p) {
  static const Integer lo = std::numeric_limits<long long>::min();
  static const Integer hi = std::numeric_limits<long long>::max();
  Json out = Json::array();
  for (const auto& term : p.terms()) {
    Json c = (term.c >= lo && term.c <= hi) ? Json(term.c.convert_to<long long>()) : Json(term.c.str());
    out.push_back(Json::array({term.m.a, term.m.b, std::move(c)}));
  }
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array of [a, b, coeff]");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
      throw ParseError("polynomial term must be [a, b, coeff]");
    Integer c;
    if (t[2].is_number_integer())
      c = t[2].get<long long>();
    else if (t[2].is_string())
      c = Integer(t[2].get<std::string>());
    else
      throw ParseError("polynomial coefficient must be an integer or a decimal string");
    terms.push_back({{t[0].get<int>(), t[1].get<int>()}, std::move(c)});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

Json to_json(const PolyMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

PolyMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix JSON must be a nonempty array of rows");
  const std::size_t cols = j[0].size();
  PolyMatrix m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw DimensionError("matrix JSON rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = laurent_from_json(j[r][c]);
  }
  return m;
}

Json to_json(const BlockMatrix& m) {
  Json out = Json::array();
  for (int i = 1; i <= m.n(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= m.n(); ++j) row.push_back(to_json(m.block(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const GroupRingElement& r) {
  Json out = Json::array();
  for (const auto& [w, c] : r.terms()) out.push_back(Json::array({format_free(w), c.str()}));
  return out;
}

namespace {

template <class Class>
Json class_json(const Class& v, const char* basis) {
  Json coeffs = Json::array();
  for (const auto& c : v.coeffs()) coeffs.push_back(to_json(c));
  Json out = {{"n", v.rank()}, {"basis", basis}, {"coefficients", std::move(coeffs)}, {"text", to_string(v)}};
  out["loop"] = v.loop() ? Json(format_free(*v.loop())) : Json(nullptr);
  return out;
}

Json braid_json(const BraidWord& b) { return format_braid(b); }

}  // namespace

Json to_json(const HomologyClassX& v) { return class_json(v, "e"); }
Json to_json(const HomologyClassY& v) { return class_json(v, "f"); }

Json to_json(const PairingValue& p) {
  return {{"symbolic", to_json(p.symbolic())},
          {"symbolic_text", to_string(p.symbolic())},
          {"evaluated", to_json(p.evaluated())},
          {"zero", p.is_zero()}};
}

Json to_json(const DetectionResult& r) {
  Json words = Json::array(), braids = Json::array();
  for (const auto& w : r.witnesses) {
    words.push_back(format_free(w.word));
    braids.push_back(braid_json(w.witness_braid));
  }
  Json out;
  out["found"] = r.found;
  out["kind"] = r.found ? Json(to_string(r.kind)) : Json(nullptr);
  out["witness_words"] = std::move(words);
  out["witness_braids"] = std::move(braids);
  out["rewritten_braid"] = r.rewritten ? braid_json(*r.rewritten) : Json(nullptr);
  out["depth_searched"] = r.depth_searched;
  return out;
}

}  // namespace lkb
