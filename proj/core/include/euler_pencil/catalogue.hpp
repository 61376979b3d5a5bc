#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "euler_pencil/curves.hpp"
#include "euler_pencil/rational.hpp"

namespace ep {

struct PencilParams {
  Rational tau, delta, Delta;

  static PencilParams canonical() { return {2, 0, 2}; }
  /// "tau,delta,Delta" with decimals read exactly.
  static PencilParams parse(const std::string& csv);
  std::string str() const;
};

struct CatalogueEntry {
  std::string label;
  std::optional<std::array<long, 5>> model;
  std::optional<Rational> j;
  bool j_infinite = false;
  std::optional<long> cm_discriminant;
  std::optional<PencilParams> pencil_params;
  std::optional<std::array<std::string, 3>> pencil_text;
  std::string source;

  bool has_model() const { return model.has_value(); }
  WeierstrassCurve curve() const;
};

class Catalogue {
 public:
  Catalogue() = default;
  explicit Catalogue(std::vector<CatalogueEntry> entries) : entries_(std::move(entries)) {}

  static Catalogue parse(const std::string& json_text);
  static Catalogue load(const std::string& path);
  /// EULER_PENCIL_CATALOGUE if set, else the shipped seed file.
  static Catalogue load_default();
  static std::string default_path();

  const std::vector<CatalogueEntry>& entries() const { return entries_; }
  const CatalogueEntry* find(const std::string& label) const;
  const CatalogueEntry& at(const std::string& label) const;
  std::vector<const CatalogueEntry*> with_models() const;

 private:
  std::vector<CatalogueEntry> entries_;
};

}  // namespace ep
