#ifndef CATSIZE_TOML_HPP
#define CATSIZE_TOML_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "catsize/errors.hpp"

namespace catsize::toml {

// Minimal TOML reader covering the subset the scenario and material file
// schemas use: bare/quoted/dotted keys, [table] and [[array-of-table]]
// headers, strings (basic and literal), integers, floats, booleans, and
// (possibly multi-line) arrays. Date-times, inline tables and multi-line
// strings are rejected with a SyntaxError. Every value remembers the
// source line it started on so that validation errors can point back at
// the file.
class Value {
 public:
  enum class Type { Integer, Float, Boolean, String, Array, Table };

  using Array = std::vector<Value>;
  // Insertion-ordered; scenario documents are small enough for linear lookup.
  using Table = std::vector<std::pair<std::string, Value>>;

  static Value make_integer(std::int64_t v, int line);
  static Value make_float(double v, int line);
  static Value make_boolean(bool v, int line);
  static Value make_string(std::string v, int line);
  static Value make_array(int line);
  static Value make_table(int line);

  Type type() const { return type_; }
  int line() const { return line_; }

  bool is_integer() const { return type_ == Type::Integer; }
  bool is_float() const { return type_ == Type::Float; }
  bool is_number() const { return is_integer() || is_float(); }
  bool is_boolean() const { return type_ == Type::Boolean; }
  bool is_string() const { return type_ == Type::String; }
  bool is_array() const { return type_ == Type::Array; }
  bool is_table() const { return type_ == Type::Table; }

  std::int64_t as_integer() const;
  // Accepts both Integer and Float values.
  double as_number() const;
  bool as_boolean() const;
  const std::string& as_string() const;
  const Array& as_array() const;
  Array& as_array();
  const Table& as_table() const;
  Table& as_table();

  // Table lookup; nullptr when the key is absent or this is not a table.
  const Value* find(const std::string& key) const;
  Value* find(const std::string& key);
  // Inserts and returns the new entry; the key must not already exist.
  Value& insert(const std::string& key, Value v);

  static const char* type_name(Type t);

 private:
  explicit Value(Type t, int line) : type_(t), line_(line) {}

  Type type_;
  int line_ = 0;
  std::int64_t int_ = 0;
  double float_ = 0.0;
  bool bool_ = false;
  std::string string_;
  Array array_;
  Table table_;
};

// Parses a complete document; returns the root table.
// Throws SyntaxError with a 1-based line number on malformed input.
Value parse(const std::string& text);

}  // namespace catsize::toml

#endif  // CATSIZE_TOML_HPP
