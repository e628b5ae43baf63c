#pragma once

// JSON/CSV/text rendering of families, ideals and classification results.
// JSON objects use insertion-ordered keys so output is byte-stable.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtrim/koszul.hpp"
#include "gtrim/pfaffian.hpp"

namespace gtrim {

using Json = nlohmann::ordered_json;

/// An ideal document before the coefficient type is chosen:
/// {"field": {"char": p}, "order": "grevlex", "generators": ["x^2", ...]}.
/// "field" and "order" are optional.
struct IdealDocument {
  std::optional<FieldSpec> field;
  std::optional<MonomialOrder> order;
  std::vector<std::string> generators;
};

/// Throws ParseError on malformed documents.
IdealDocument parse_ideal_document(const Json& j);
IdealDocument parse_ideal_document(const std::string& text);

template <CoefficientField K>
Ideal<K> build_ideal(const IdealDocument& doc, FieldSpec field, MonomialOrder order) {
  std::vector<Polynomial<K>> gens;
  for (const auto& g : doc.generators) gens.push_back(parse_polynomial<K>(g, field, order));
  return Ideal<K>(std::move(gens), field, order);
}

Json field_json(const FieldSpec& field);

template <CoefficientField K>
Json polys_json(const std::vector<Polynomial<K>>& polys) {
  Json a = Json::array();
  for (const auto& p : polys) a.push_back(p.to_string());
  return a;
}

template <CoefficientField K>
Json matrix_json(const PolyMatrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

template <CoefficientField K>
Json ideal_json(const Ideal<K>& ideal) {
  Json j;
  j["field"] = field_json(ideal.field());
  j["order"] = to_string(ideal.order());
  j["generators"] = polys_json(ideal.generators());
  return j;
}

/// Family document; it is also a valid ideal document for its generators.
template <CoefficientField K>
Json family_json(const PfaffianFamily<K>& fam, const FieldSpec& field, MonomialOrder order) {
  Json j;
  j["m"] = fam.m;
  j["field"] = field_json(field);
  j["order"] = to_string(order);
  j["U"] = matrix_json(fam.U);
  j["V"] = matrix_json(fam.V);
  j["d"] = fam.d.to_string();
  j["pfaffians"] = polys_json(fam.pfaffians);
  j["generators"] = polys_json(fam.canonical_gens);
  return j;
}

Json hilbert_json(const HilbertData& h);

/// Keys: mu, type, hilbert, ranks, p, q, r, class, label, class_params, gorenstein.
Json classification_json(const TorClass& cls, const HilbertData& hilbert);
std::string classification_text(const TorClass& cls, const HilbertData& hilbert);

struct TableRow {
  int m = 0;
  std::string selector;
  std::string g;
  TorClass cls;
};

Json table_json(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_text(const std::vector<TableRow>& rows);

}  // namespace gtrim
