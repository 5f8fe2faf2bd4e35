#include "qcount/toml_lite.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcount::toml_lite {

namespace {

using nlohmann::json;

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("TOML parse error at line " + std::to_string(line) + ": " + what);
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  char take() {
    char c = text[pos++];
    if (c == '\n') ++line;
    return c;
  }
  void skip_ws_inline() {
    while (!done() && (peek() == ' ' || peek() == '\t')) ++pos;
  }
  void skip_ws_and_comments() {
    while (!done()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        take();
      } else if (c == '#') {
        while (!done() && peek() != '\n') ++pos;
      } else {
        break;
      }
    }
  }
};

json parse_value(Cursor& c);

std::string parse_string(Cursor& c) {
  c.take();  // opening quote
  std::string out;
  while (!c.done() && c.peek() != '"') {
    char ch = c.take();
    if (ch == '\\') {
      if (c.done()) c.fail("unterminated escape");
      char esc = c.take();
      switch (esc) {
        case 'n': out += '\n'; break;
        case 't': out += '\t'; break;
        case '"': out += '"'; break;
        case '\\': out += '\\'; break;
        default: c.fail("unsupported escape sequence");
      }
    } else {
      out += ch;
    }
  }
  if (c.done()) c.fail("unterminated string");
  c.take();  // closing quote
  return out;
}

json parse_array(Cursor& c) {
  c.take();  // '['
  json arr = json::array();
  while (true) {
    c.skip_ws_and_comments();
    if (c.done()) c.fail("unterminated array");
    if (c.peek() == ']') {
      c.take();
      return arr;
    }
    arr.push_back(parse_value(c));
    c.skip_ws_and_comments();
    if (!c.done() && c.peek() == ',') {
      c.take();
    } else if (!c.done() && c.peek() == ']') {
      c.take();
      return arr;
    } else if (c.done()) {
      c.fail("unterminated array");
    } else {
      c.fail("expected ',' or ']' in array");
    }
  }
}

json parse_scalar(Cursor& c) {
  std::string token;
  while (!c.done()) {
    char ch = c.peek();
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '_' ||
        ch == '.' || ch == '/') {
      token += c.take();
    } else {
      break;
    }
  }
  if (token.empty()) c.fail("expected a value");
  if (token == "true") return json(true);
  if (token == "false") return json(false);
  try {
    size_t used = 0;
    long long v = std::stoll(token, &used);
    if (used == token.size()) return json(v);
  } catch (...) {
  }
  // Bare tokens (e.g. rationals like 1/2) fall back to strings.
  return json(token);
}

json parse_value(Cursor& c) {
  c.skip_ws_inline();
  if (c.done()) c.fail("expected a value");
  char ch = c.peek();
  if (ch == '"') return json(parse_string(c));
  if (ch == '[') return parse_array(c);
  return parse_scalar(c);
}

std::string parse_key(Cursor& c) {
  c.skip_ws_inline();
  std::string key;
  if (!c.done() && c.peek() == '"') return parse_string(c);
  while (!c.done()) {
    char ch = c.peek();
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-') {
      key += c.take();
    } else {
      break;
    }
  }
  if (key.empty()) c.fail("expected a key");
  return key;
}

}  // namespace

nlohmann::json parse(const std::string& text) {
  Cursor c{text};
  json root = json::object();
  json* current = &root;

  while (true) {
    c.skip_ws_and_comments();
    if (c.done()) break;

    if (c.peek() == '[') {
      c.take();
      std::string name = parse_key(c);
      c.skip_ws_inline();
      if (c.done() || c.peek() != ']') c.fail("expected ']' after table name");
      c.take();
      root[name] = json::object();
      current = &root[name];
      continue;
    }

    std::string key = parse_key(c);
    c.skip_ws_inline();
    if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + key + "'");
    c.take();
    (*current)[key] = parse_value(c);
    c.skip_ws_inline();
    if (!c.done() && c.peek() == '#')
      while (!c.done() && c.peek() != '\n') c.take();
    if (!c.done() && c.peek() != '\n' && c.peek() != '\r') c.fail("unexpected trailing characters");
  }
  return root;
}

}  // namespace qcount::toml_lite
