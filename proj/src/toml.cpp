#include "catsize/toml.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>

namespace catsize::toml {

Value Value::make_integer(std::int64_t v, int line) {
  Value out(Type::Integer, line);
  out.int_ = v;
  return out;
}

Value Value::make_float(double v, int line) {
  Value out(Type::Float, line);
  out.float_ = v;
  return out;
}

Value Value::make_boolean(bool v, int line) {
  Value out(Type::Boolean, line);
  out.bool_ = v;
  return out;
}

Value Value::make_string(std::string v, int line) {
  Value out(Type::String, line);
  out.string_ = std::move(v);
  return out;
}

Value Value::make_array(int line) { return Value(Type::Array, line); }

Value Value::make_table(int line) { return Value(Type::Table, line); }

const char* Value::type_name(Type t) {
  switch (t) {
    case Type::Integer: return "integer";
    case Type::Float: return "float";
    case Type::Boolean: return "boolean";
    case Type::String: return "string";
    case Type::Array: return "array";
    case Type::Table: return "table";
  }
  return "unknown";
}

namespace {
[[noreturn]] void wrong_type(const char* want, Value::Type got) {
  throw Error(std::string("toml value is ") + Value::type_name(got) + ", wanted " + want);
}
}  // namespace

std::int64_t Value::as_integer() const {
  if (type_ != Type::Integer) wrong_type("integer", type_);
  return int_;
}

double Value::as_number() const {
  if (type_ == Type::Integer) return static_cast<double>(int_);
  if (type_ == Type::Float) return float_;
  wrong_type("number", type_);
}

bool Value::as_boolean() const {
  if (type_ != Type::Boolean) wrong_type("boolean", type_);
  return bool_;
}

const std::string& Value::as_string() const {
  if (type_ != Type::String) wrong_type("string", type_);
  return string_;
}

const Value::Array& Value::as_array() const {
  if (type_ != Type::Array) wrong_type("array", type_);
  return array_;
}

Value::Array& Value::as_array() {
  if (type_ != Type::Array) wrong_type("array", type_);
  return array_;
}

const Value::Table& Value::as_table() const {
  if (type_ != Type::Table) wrong_type("table", type_);
  return table_;
}

Value::Table& Value::as_table() {
  if (type_ != Type::Table) wrong_type("table", type_);
  return table_;
}

const Value* Value::find(const std::string& key) const {
  if (type_ != Type::Table) return nullptr;
  for (const auto& [k, v] : table_) {
    if (k == key) return &v;
  }
  return nullptr;
}

Value* Value::find(const std::string& key) {
  if (type_ != Type::Table) return nullptr;
  for (auto& [k, v] : table_) {
    if (k == key) return &v;
  }
  return nullptr;
}

Value& Value::insert(const std::string& key, Value v) {
  table_.emplace_back(key, std::move(v));
  return table_.back().second;
}

namespace {

bool is_bare_key_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

class Parser {
 public:
  explicit Parser(const std::string& text) : src_(text) {}

  Value run() {
    Value root = Value::make_table(1);
    Value* current = &root;
    std::string current_path;

    for (;;) {
      skip_trivia(true);
      if (eof()) break;
      if (peek() == '[') {
        current = parse_header(root, current_path);
      } else {
        parse_key_value(*current, current_path);
        expect_line_end();
      }
    }
    return root;
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char peek_at(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }

  char advance() {
    char c = src_[pos_++];
    if (c == '\n') ++line_;
    return c;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, what); }

  // Skips spaces and tabs; also comments and newlines when requested.
  void skip_trivia(bool across_lines) {
    while (!eof()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == '\n' && across_lines) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect_line_end() {
    skip_trivia(false);
    if (eof()) return;
    if (peek() != '\n') fail(std::string("unexpected character '") + peek() + "' after value");
    advance();
  }

  std::string parse_key_segment() {
    if (eof()) fail("expected a key");
    char c = peek();
    if (c == '"' || c == '\'') return parse_string_value();
    if (!is_bare_key_char(c)) fail(std::string("expected a key, found '") + c + "'");
    std::string key;
    while (!eof() && is_bare_key_char(peek())) key += advance();
    return key;
  }

  std::vector<std::string> parse_dotted_key() {
    std::vector<std::string> parts{parse_key_segment()};
    for (;;) {
      skip_trivia(false);
      if (!eof() && peek() == '.') {
        advance();
        skip_trivia(false);
        parts.push_back(parse_key_segment());
      } else {
        break;
      }
    }
    return parts;
  }

  static std::string join(const std::vector<std::string>& parts, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
      if (i) out += '.';
      out += parts[i];
    }
    return out;
  }

  // [a.b] or [[a.b]]. Returns the table new key-values bind to and updates
  // the printable path used in duplicate-key diagnostics.
  Value* parse_header(Value& root, std::string& current_path) {
    const int header_line = line_;  // expect_line_end moves past the header
    const auto fail_here = [header_line](const std::string& what) -> void {
      throw SyntaxError(header_line, what);
    };
    advance();  // '['
    bool array_of_tables = !eof() && peek() == '[';
    if (array_of_tables) advance();

    skip_trivia(false);
    std::vector<std::string> parts = parse_dotted_key();
    skip_trivia(false);
    if (eof() || peek() != ']') fail("expected ']' to close table header");
    advance();
    if (array_of_tables) {
      if (eof() || peek() != ']') fail("expected ']]' to close array-of-tables header");
      advance();
    }
    expect_line_end();

    const std::string full = join(parts, parts.size());
    Value* node = &root;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      node = descend(*node, parts[i], join(parts, i + 1));
    }

    const std::string& leaf = parts.back();
    Value* existing = node->find(leaf);
    if (array_of_tables) {
      if (existing == nullptr) {
        existing = &node->insert(leaf, Value::make_array(line_));
        arrays_of_tables_.insert(full);
      } else if (!existing->is_array() || arrays_of_tables_.count(full) == 0) {
        fail_here("key '" + full + "' is not an array of tables");
      }
      Value& element = existing->as_array().emplace_back(Value::make_table(line_));
      current_path = full;
      return &element;
    }

    if (existing == nullptr) {
      existing = &node->insert(leaf, Value::make_table(line_));
    } else if (!existing->is_table()) {
      fail_here("key '" + full + "' is already defined and is not a table");
    } else if (explicit_tables_.count(full) > 0) {
      fail_here("table '" + full + "' is already defined");
    }
    explicit_tables_.insert(full);
    current_path = full;
    return existing;
  }

  // Walks one segment of a header path, creating tables as needed and
  // descending into the last element of arrays of tables.
  Value* descend(Value& node, const std::string& key, const std::string& path_so_far) {
    Value* next = node.find(key);
    if (next == nullptr) return &node.insert(key, Value::make_table(line_));
    if (next->is_table()) return next;
    if (next->is_array() && arrays_of_tables_.count(path_so_far) > 0) {
      if (next->as_array().empty()) fail("array of tables '" + path_so_far + "' is empty");
      return &next->as_array().back();
    }
    fail("key '" + path_so_far + "' is not a table");
  }

  void parse_key_value(Value& table, const std::string& table_path) {
    std::vector<std::string> parts = parse_dotted_key();
    skip_trivia(false);
    if (eof() || peek() != '=') fail("expected '=' after key");
    advance();
    skip_trivia(false);

    Value* node = &table;
    std::string path = table_path;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
      path = path.empty() ? parts[i] : path + "." + parts[i];
      Value* next = node->find(parts[i]);
      if (next == nullptr) {
        next = &node->insert(parts[i], Value::make_table(line_));
      } else if (!next->is_table()) {
        fail("key '" + path + "' is not a table");
      }
      node = next;
    }

    const std::string& leaf = parts.back();
    path = path.empty() ? leaf : path + "." + leaf;
    if (node->find(leaf) != nullptr) fail("duplicate key '" + path + "'");
    node->insert(leaf, parse_value());
  }

  Value parse_value() {
    if (eof()) fail("expected a value");
    char c = peek();
    int line = line_;
    if (c == '"' || c == '\'') return Value::make_string(parse_string_value(), line);
    if (c == '[') return parse_array_value();
    if (c == '{') fail("inline tables are not supported");
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '+' || c == '-' ||
        std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return parse_scalar();
    }
    fail(std::string("unexpected character '") + c + "' in value");
  }

  std::string parse_string_value() {
    char quote = advance();
    if (!eof() && peek() == quote && peek_at(1) == quote) {
      fail("multi-line strings are not supported");
    }
    std::string out;
    while (!eof()) {
      char c = advance();
      if (c == quote) return out;
      if (c == '\n') fail("unterminated string");
      if (quote == '"' && c == '\\') {
        if (eof()) fail("unterminated escape sequence");
        char e = advance();
        switch (e) {
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          default: fail(std::string("unsupported escape sequence '\\") + e + "'");
        }
      } else {
        out += c;
      }
    }
    fail("unterminated string");
  }

  Value parse_array_value() {
    int line = line_;
    advance();  // '['
    Value arr = Value::make_array(line);
    skip_trivia(true);
    if (!eof() && peek() == ']') {
      advance();
      return arr;
    }
    for (;;) {
      skip_trivia(true);
      arr.as_array().push_back(parse_value());
      skip_trivia(true);
      if (eof()) fail("unterminated array");
      if (peek() == ',') {
        advance();
        skip_trivia(true);
        if (!eof() && peek() == ']') {  // trailing comma
          advance();
          return arr;
        }
      } else if (peek() == ']') {
        advance();
        return arr;
      } else {
        fail("expected ',' or ']' in array");
      }
    }
  }

  Value parse_scalar() {
    int line = line_;
    std::string token;
    while (!eof()) {
      char c = peek();
      if (is_bare_key_char(c) || c == '+' || c == '-' || c == '.') {
        token += advance();
      } else {
        break;
      }
    }
    if (token == "true") return Value::make_boolean(true, line);
    if (token == "false") return Value::make_boolean(false, line);

    std::string body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
      negative = body[0] == '-';
      body = body.substr(1);
    }
    if (body == "inf") {
      return Value::make_float(negative ? -std::numeric_limits<double>::infinity()
                                        : std::numeric_limits<double>::infinity(),
                               line);
    }
    if (body == "nan") return Value::make_float(std::numeric_limits<double>::quiet_NaN(), line);
    if (body.size() > 1 && body[0] == '0' &&
        (body[1] == 'x' || body[1] == 'o' || body[1] == 'b')) {
      fail("non-decimal integers are not supported");
    }

    // Strip digit-separating underscores before handing off to from_chars.
    std::string digits;
    digits.reserve(token.size());
    for (std::size_t i = 0; i < token.size(); ++i) {
      if (token[i] == '_') {
        bool between = i > 0 && i + 1 < token.size() &&
                       std::isdigit(static_cast<unsigned char>(token[i - 1])) &&
                       std::isdigit(static_cast<unsigned char>(token[i + 1]));
        if (!between) fail("misplaced underscore in number '" + token + "'");
        continue;
      }
      digits += token[i];
    }
    if (digits.empty() || digits == "+" || digits == "-") fail("expected a value");

    bool is_float = digits.find_first_of(".eE") != std::string::npos;
    if (!is_float) {
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) {
        fail("invalid number '" + token + "'");
      }
      return Value::make_integer(v, line);
    }
    double v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail("invalid number '" + token + "'");
    }
    return Value::make_float(v, line);
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::set<std::string> explicit_tables_;
  std::set<std::string> arrays_of_tables_;
};

}  // namespace

Value parse(const std::string& text) { return Parser(text).run(); }

}  // namespace catsize::toml
