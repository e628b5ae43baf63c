#include "gtrim/report.hpp"

#include <algorithm>
#include <sstream>

namespace gtrim {

IdealDocument parse_ideal_document(const Json& j) {
  if (!j.is_object()) throw ParseError("ideal document must be a JSON object");
  IdealDocument doc;
  if (j.contains("field")) {
    const Json& f = j.at("field");
    if (!f.is_object() || !f.contains("char") || !f.at("char").is_number_integer()) {
      throw ParseError("\"field\" must look like {\"char\": <integer>}");
    }
    const auto c = f.at("char").get<long long>();
    if (c < 0 || c > 0x7fffffffLL) throw InvalidArgument("characteristic out of range: " + std::to_string(c));
    doc.field = FieldSpec::from_characteristic(static_cast<std::uint32_t>(c));
  }
  if (j.contains("order")) {
    if (!j.at("order").is_string()) throw ParseError("\"order\" must be a string");
    doc.order = parse_order(j.at("order").get<std::string>());
  }
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw ParseError("ideal document needs a \"generators\" array");
  }
  for (const auto& g : j.at("generators")) {
    if (!g.is_string()) throw ParseError("generators must be polynomial strings");
    doc.generators.push_back(g.get<std::string>());
  }
  return doc;
}

IdealDocument parse_ideal_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return parse_ideal_document(j);
}

Json field_json(const FieldSpec& field) {
  Json j;
  j["char"] = field.characteristic;
  return j;
}

Json hilbert_json(const HilbertData& h) {
  Json a = Json::array();
  for (long c : h.coefficients) a.push_back(c);
  return a;
}

namespace {

Json class_params(const TorClass& cls) {
  const auto& inv = cls.inv;
  Json j = Json::object();
  switch (cls.tag) {
    case TorClass::Tag::G:
      j["r"] = inv.r;
      break;
    case TorClass::Tag::H:
      j["p"] = inv.p;
      j["q"] = inv.q;
      break;
    case TorClass::Tag::Gorenstein:
      j["r"] = inv.mu;
      break;
    case TorClass::Tag::Unclassified:
      j["mu"] = inv.mu;
      j["type"] = inv.type_rank;
      j["p"] = inv.p;
      j["q"] = inv.q;
      j["r"] = inv.r;
      break;
    default:
      break;
  }
  return j;
}

std::string join_ranks(const std::array<std::size_t, 4>& r, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(r[i]);
  }
  return s;
}

}  // namespace

Json classification_json(const TorClass& cls, const HilbertData& hilbert) {
  Json j;
  j["mu"] = cls.inv.mu;
  j["type"] = cls.inv.type_rank;
  j["hilbert"] = hilbert_json(hilbert);
  j["ranks"] = Json(cls.inv.ranks);
  j["p"] = cls.inv.p;
  j["q"] = cls.inv.q;
  j["r"] = cls.inv.r;
  j["class"] = cls.name();
  j["label"] = cls.label();
  j["class_params"] = class_params(cls);
  j["gorenstein"] = cls.gorenstein();
  return j;
}

std::string classification_text(const TorClass& cls, const HilbertData& hilbert) {
  std::ostringstream s;
  s << "class:   " << cls.label() << "\n";
  s << "mu:      " << cls.inv.mu << "\n";
  s << "type:    " << cls.inv.type_rank << "\n";
  s << "ranks:   " << join_ranks(cls.inv.ranks, " ") << "\n";
  s << "p q r:   " << cls.inv.p << " " << cls.inv.q << " " << cls.inv.r << "\n";
  s << "hilbert:";
  for (long c : hilbert.coefficients) s << " " << c;
  s << "\n";
  return s.str();
}

Json table_json(const std::vector<TableRow>& rows) {
  Json a = Json::array();
  for (const auto& row : rows) {
    Json j;
    j["m"] = row.m;
    j["selector"] = row.selector;
    j["g"] = row.g;
    j["mu"] = row.cls.inv.mu;
    j["type"] = row.cls.inv.type_rank;
    j["p"] = row.cls.inv.p;
    j["q"] = row.cls.inv.q;
    j["r"] = row.cls.inv.r;
    j["class"] = row.cls.label();
    a.push_back(std::move(j));
  }
  return a;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream s;
  s << "m,selector,g,mu,type,p,q,r,class\n";
  for (const auto& row : rows) {
    // Labels such as H(3,2) contain commas.
    s << row.m << "," << row.selector << ",\"" << row.g << "\"," << row.cls.inv.mu << ","
      << row.cls.inv.type_rank << "," << row.cls.inv.p << "," << row.cls.inv.q << "," << row.cls.inv.r
      << ",\"" << row.cls.label() << "\"\n";
  }
  return s.str();
}

std::string table_text(const std::vector<TableRow>& rows) {
  std::size_t gw = 1;
  for (const auto& row : rows) gw = std::max(gw, row.g.size());
  std::ostringstream s;
  auto pad = [](const std::string& t, std::size_t w) { return t + std::string(w > t.size() ? w - t.size() : 0, ' '); };
  s << pad("m", 4) << pad("sel", 5) << pad("g", gw + 2) << pad("mu", 4) << pad("type", 6) << pad("p", 3)
    << pad("q", 3) << pad("r", 4) << "class\n";
  for (const auto& row : rows) {
    s << pad(std::to_string(row.m), 4) << pad(row.selector, 5) << pad(row.g, gw + 2)
      << pad(std::to_string(row.cls.inv.mu), 4) << pad(std::to_string(row.cls.inv.type_rank), 6)
      << pad(std::to_string(row.cls.inv.p), 3) << pad(std::to_string(row.cls.inv.q), 3)
      << pad(std::to_string(row.cls.inv.r), 4) << row.cls.label() << "\n";
  }
  return s.str();
}

}  // namespace gtrim
