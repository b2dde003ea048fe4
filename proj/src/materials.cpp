#include "catsize/materials.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "catsize/toml.hpp"

namespace catsize::est {

Material lif_material() {
  Material m;
  m.name = "LiF";
  m.mass_density = 2.635;
  m.molar_mass = 25.939;
  m.electrons_per_formula_unit = 12;
  m.nucleons_per_formula_unit = 26;
  m.cell_dimension_a = 4.03e-8;
  m.nuclei = {{"Li", 7, 1}, {"F", 19, 1}};
  return m;
}

MaterialRegistry MaterialRegistry::builtin() {
  MaterialRegistry registry;
  registry.add(lif_material());
  return registry;
}

MaterialRegistry MaterialRegistry::from_environment() {
  MaterialRegistry registry = builtin();
  const char* path = std::getenv("CATSIZE_MATERIALS");
  if (path == nullptr || *path == '\0') return registry;
  std::ifstream in(path);
  if (!in) throw InvalidValue("CATSIZE_MATERIALS", std::string("cannot open '") + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  registry.merge_from_toml(text.str());
  return registry;
}

void MaterialRegistry::add(Material material) {
  for (Material& existing : materials_) {
    if (existing.name == material.name) {
      existing = std::move(material);
      return;
    }
  }
  materials_.push_back(std::move(material));
}

const Material* MaterialRegistry::find(const std::string& name) const {
  for (const Material& m : materials_) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const Material& MaterialRegistry::get(const std::string& name) const {
  const Material* m = find(name);
  if (m == nullptr) throw UnknownMaterial("unknown material '" + name + "'");
  return *m;
}

namespace {

double require_positive_number(const toml::Value& table, const std::string& path,
                               const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) throw MissingField(path + "." + key, table.line());
  if (!v->is_number()) throw InvalidValue(path + "." + key, "must be a number", v->line());
  double out = v->as_number();
  if (out <= 0.0) throw InvalidValue(path + "." + key, "must be positive", v->line());
  return out;
}

int require_positive_integer(const toml::Value& table, const std::string& path,
                             const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) throw MissingField(path + "." + key, table.line());
  if (!v->is_integer()) throw InvalidValue(path + "." + key, "must be an integer", v->line());
  auto out = v->as_integer();
  if (out <= 0) throw InvalidValue(path + "." + key, "must be positive", v->line());
  return static_cast<int>(out);
}

std::string require_string(const toml::Value& table, const std::string& path,
                           const std::string& key) {
  const toml::Value* v = table.find(key);
  if (v == nullptr) throw MissingField(path + "." + key, table.line());
  if (!v->is_string()) throw InvalidValue(path + "." + key, "must be a string", v->line());
  return v->as_string();
}

}  // namespace

void MaterialRegistry::merge_from_toml(const std::string& text) {
  toml::Value root = toml::parse(text);
  if (root.find("materials") == nullptr) throw MissingField("materials");
  merge_from_value(root);
}

void MaterialRegistry::merge_from_value(const toml::Value& root) {
  const toml::Value* list = root.find("materials");
  if (list == nullptr) return;
  if (!list->is_array()) {
    throw InvalidValue("materials", "must be an array of tables", list->line());
  }

  int index = 0;
  for (const toml::Value& entry : list->as_array()) {
    const std::string path = "materials[" + std::to_string(index++) + "]";
    if (!entry.is_table()) throw InvalidValue(path, "must be a table", entry.line());

    Material m;
    m.name = require_string(entry, path, "name");
    m.mass_density = require_positive_number(entry, path, "mass_density_g_cm3");
    m.molar_mass = require_positive_number(entry, path, "molar_mass_g_mol");
    m.electrons_per_formula_unit = require_positive_integer(entry, path, "electrons_per_formula_unit");
    m.nucleons_per_formula_unit = require_positive_integer(entry, path, "nucleons_per_formula_unit");
    m.cell_dimension_a = require_positive_number(entry, path, "cell_dimension_a_cm");

    if (const toml::Value* nuclei = entry.find("nucleus")) {
      if (!nuclei->is_array()) {
        throw InvalidValue(path + ".nucleus", "must be an array of tables", nuclei->line());
      }
      int sum = 0;
      int j = 0;
      for (const toml::Value& nucleus : nuclei->as_array()) {
        const std::string npath = path + ".nucleus[" + std::to_string(j++) + "]";
        if (!nucleus.is_table()) throw InvalidValue(npath, "must be a table", nucleus.line());
        NucleusKind kind;
        kind.name = require_string(nucleus, npath, "name");
        kind.mass_number = require_positive_integer(nucleus, npath, "mass_number");
        kind.count_per_formula_unit =
            require_positive_integer(nucleus, npath, "count_per_formula_unit");
        sum += kind.mass_number * kind.count_per_formula_unit;
        m.nuclei.push_back(std::move(kind));
      }
      if (sum != m.nucleons_per_formula_unit) {
        throw InvalidValue(path + ".nucleus",
                           "mass numbers sum to " + std::to_string(sum) +
                               " but nucleons_per_formula_unit is " +
                               std::to_string(m.nucleons_per_formula_unit),
                           nuclei->line());
      }
    }
    add(std::move(m));
  }
}

}  // namespace catsize::est
