#ifndef CATSIZE_MATERIALS_HPP
#define CATSIZE_MATERIALS_HPP

#include <string>
#include <vector>

#include "catsize/estimators.hpp"
#include "catsize/toml.hpp"

namespace catsize::est {

Material lif_material();

// Built-in material table, optionally extended (or overridden by name) from
// the TOML file the CATSIZE_MATERIALS environment variable points at.
class MaterialRegistry {
 public:
  static MaterialRegistry builtin();
  // Reads the environment and merges the user table when present.
  static MaterialRegistry from_environment();

  void add(Material material);  // replaces any existing entry with the same name
  const Material* find(const std::string& name) const;
  const Material& get(const std::string& name) const;  // throws UnknownMaterial
  const std::vector<Material>& all() const { return materials_; }

  // Parses a material table document (a [[materials]] array); throws
  // ScenarioError subtypes on malformed or incomplete entries.
  void merge_from_toml(const std::string& text);
  // Merges the [[materials]] array of an already-parsed document, if present.
  void merge_from_value(const toml::Value& root);

 private:
  std::vector<Material> materials_;
};

}  // namespace catsize::est

#endif  // CATSIZE_MATERIALS_HPP
