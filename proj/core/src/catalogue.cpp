#include "euler_pencil/catalogue.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "euler_pencil/error.hpp"
#include "json.hpp"

#ifndef EULER_PENCIL_DEFAULT_CATALOGUE
#define EULER_PENCIL_DEFAULT_CATALOGUE "data/catalogue.json"
#endif

namespace ep {

PencilParams PencilParams::parse(const std::string& csv) {
  std::vector<std::string> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw Error(ErrorKind::parse, "pencil needs three values tau,delta,Delta: '" + csv + "'");
  return {Rational::parse(parts[0]), Rational::parse(parts[1]), Rational::parse(parts[2])};
}

std::string PencilParams::str() const { return tau.str() + "," + delta.str() + "," + Delta.str(); }

WeierstrassCurve CatalogueEntry::curve() const {
  if (!model) throw Error(ErrorKind::domain, "catalogue entry " + label + " has no Weierstrass model");
  return WeierstrassCurve::from_model(*model, label);
}

Catalogue Catalogue::parse(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("catalogue is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorKind::parse, "catalogue must be a JSON array");
  std::vector<CatalogueEntry> out;
  for (const auto& item : doc) {
    CatalogueEntry e;
    try {
      e.label = item.at("label").get<std::string>();
      if (item.contains("model")) e.model = item.at("model").get<std::array<long, 5>>();
      if (item.contains("j")) {
        std::string j = item.at("j").get<std::string>();
        if (j == "inf" || j == "infinity") e.j_infinite = true;
        else e.j = Rational::parse(j);
      }
      if (item.contains("cm_discriminant")) e.cm_discriminant = item.at("cm_discriminant").get<long>();
      if (item.contains("pencil_params")) {
        auto text = item.at("pencil_params").get<std::array<std::string, 3>>();
        e.pencil_text = text;
        e.pencil_params = PencilParams{Rational::parse(text[0]), Rational::parse(text[1]), Rational::parse(text[2])};
      }
      e.source = item.value("source", "");
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorKind::parse, "malformed catalogue entry: " + std::string(ex.what()));
    }
    if (e.model && e.j && !e.j_infinite) {
      Rational computed = e.curve().invariants().j;
      if (computed != *e.j)
        throw Error(ErrorKind::parse, "catalogue entry " + e.label + ": stored j " + e.j->str() +
                                          " differs from model j " + computed.str());
    }
    out.push_back(std::move(e));
  }
  return Catalogue(std::move(out));
}

Catalogue Catalogue::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open catalogue " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::string Catalogue::default_path() {
  if (const char* env = std::getenv("EULER_PENCIL_CATALOGUE"); env && *env) return env;
  return EULER_PENCIL_DEFAULT_CATALOGUE;
}

Catalogue Catalogue::load_default() { return load(default_path()); }

const CatalogueEntry* Catalogue::find(const std::string& label) const {
  for (const auto& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

const CatalogueEntry& Catalogue::at(const std::string& label) const {
  if (const auto* e = find(label)) return *e;
  throw Error(ErrorKind::parse, "unknown catalogue label '" + label + "'");
}

std::vector<const CatalogueEntry*> Catalogue::with_models() const {
  std::vector<const CatalogueEntry*> out;
  for (const auto& e : entries_)
    if (e.model) out.push_back(&e);
  return out;
}

}  // namespace ep
