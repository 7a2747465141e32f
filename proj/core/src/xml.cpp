#include "pncube/xml.hpp"

#include <cctype>

namespace pncube {

const std::string* XmlNode::attr(std::string_view name) const {
  for (const auto& [key, value] : attrs) {
    if (key == name) return &value;
  }
  return nullptr;
}

const XmlNode* XmlNode::child(std::string_view name) const {
  for (const auto& c : children) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

struct Parser {
  std::string_view input;
  std::size_t pos = 0;
  std::string error;
  std::size_t error_offset = 0;

  bool fail(std::size_t at, std::string message) {
    if (error.empty()) {
      error = std::move(message);
      error_offset = at;
    }
    return false;
  }

  bool eof() const { return pos >= input.size(); }
  char peek() const { return input[pos]; }
  bool starts_with(std::string_view s) const { return input.substr(pos, s.size()) == s; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  bool skip_until(std::string_view terminator, const char* what) {
    auto at = input.find(terminator, pos);
    if (at == std::string_view::npos)
      return fail(pos, std::string("unterminated ") + what);
    pos = at + terminator.size();
    return true;
  }

  // Comments, processing instructions, doctype. Returns false on error,
  // sets skipped=false when the cursor points at something else.
  bool skip_misc(bool* skipped) {
    *skipped = true;
    if (starts_with("<!--")) return skip_until("-->", "comment");
    if (starts_with("<?")) return skip_until("?>", "processing instruction");
    if (starts_with("<!DOCTYPE") || starts_with("<!doctype")) return skip_until(">", "doctype");
    *skipped = false;
    return true;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == ':';
  }

  bool parse_name(std::string* out) {
    std::size_t start = pos;
    while (!eof() && name_char(peek())) ++pos;
    if (pos == start) return fail(pos, "expected a name");
    std::string name(input.substr(start, pos - start));
    // Strip a namespace prefix.
    auto colon = name.rfind(':');
    if (colon != std::string::npos) name = name.substr(colon + 1);
    *out = std::move(name);
    return true;
  }

  bool decode_entities(std::string_view raw, std::size_t at, std::string* out) {
    out->clear();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] != '&') {
        out->push_back(raw[i]);
        continue;
      }
      auto end = raw.find(';', i);
      if (end == std::string_view::npos) return fail(at + i, "unterminated entity");
      std::string_view entity = raw.substr(i + 1, end - i - 1);
      if (entity == "amp") {
        out->push_back('&');
      } else if (entity == "lt") {
        out->push_back('<');
      } else if (entity == "gt") {
        out->push_back('>');
      } else if (entity == "quot") {
        out->push_back('"');
      } else if (entity == "apos") {
        out->push_back('\'');
      } else if (!entity.empty() && entity[0] == '#') {
        int base = 10;
        std::string_view digits = entity.substr(1);
        if (!digits.empty() && (digits[0] == 'x' || digits[0] == 'X')) {
          base = 16;
          digits = digits.substr(1);
        }
        unsigned long code = 0;
        try {
          code = std::stoul(std::string(digits), nullptr, base);
        } catch (...) {
          return fail(at + i, "bad character reference");
        }
        if (code == 0 || code > 0x10FFFF) return fail(at + i, "bad character reference");
        // UTF-8 encode.
        if (code < 0x80) {
          out->push_back(static_cast<char>(code));
        } else if (code < 0x800) {
          out->push_back(static_cast<char>(0xC0 | (code >> 6)));
          out->push_back(static_cast<char>(0x80 | (code & 0x3F)));
        } else if (code < 0x10000) {
          out->push_back(static_cast<char>(0xE0 | (code >> 12)));
          out->push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
          out->push_back(static_cast<char>(0x80 | (code & 0x3F)));
        } else {
          out->push_back(static_cast<char>(0xF0 | (code >> 18)));
          out->push_back(static_cast<char>(0x80 | ((code >> 12) & 0x3F)));
          out->push_back(static_cast<char>(0x80 | ((code >> 6) & 0x3F)));
          out->push_back(static_cast<char>(0x80 | (code & 0x3F)));
        }
      } else {
        return fail(at + i, "unknown entity: " + std::string(entity));
      }
      i = end;
    }
    return true;
  }

  bool parse_attrs(XmlNode* node) {
    while (true) {
      skip_ws();
      if (eof()) return fail(pos, "unexpected end inside tag");
      if (peek() == '>' || peek() == '/' || peek() == '?') return true;
      std::string key;
      if (!parse_name(&key)) return false;
      skip_ws();
      if (eof() || peek() != '=') return fail(pos, "expected '=' after attribute name");
      ++pos;
      skip_ws();
      if (eof() || (peek() != '"' && peek() != '\'')) return fail(pos, "expected quoted value");
      char quote = peek();
      ++pos;
      std::size_t start = pos;
      auto end = input.find(quote, pos);
      if (end == std::string_view::npos) return fail(start, "unterminated attribute value");
      std::string value;
      if (!decode_entities(input.substr(start, end - start), start, &value)) return false;
      pos = end + 1;
      node->attrs.emplace_back(std::move(key), std::move(value));
    }
  }

  static void append_trimmed(std::string_view raw, std::string* text) {
    std::size_t begin = 0, end = raw.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(raw[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(raw[end - 1]))) --end;
    if (begin == end) return;
    if (!text->empty()) text->push_back(' ');
    text->append(raw.substr(begin, end - begin));
  }

  bool parse_element(XmlNode* node) {
    node->offset = pos;
    if (eof() || peek() != '<') return fail(pos, "expected '<'");
    ++pos;
    if (!parse_name(&node->name)) return false;
    if (!parse_attrs(node)) return false;
    if (peek() == '/') {
      ++pos;
      if (eof() || peek() != '>') return fail(pos, "expected '>' after '/'");
      ++pos;
      return true;
    }
    if (peek() != '>') return fail(pos, "expected '>'");
    ++pos;

    while (true) {
      std::size_t text_start = pos;
      auto lt = input.find('<', pos);
      if (lt == std::string_view::npos) return fail(node->offset, "unterminated element: " + node->name);
      std::string chunk;
      if (!decode_entities(input.substr(text_start, lt - text_start), text_start, &chunk))
        return false;
      append_trimmed(chunk, &node->text);
      pos = lt;
      if (starts_with("</")) {
        pos += 2;
        std::string closing;
        std::size_t at = pos;
        if (!parse_name(&closing)) return false;
        skip_ws();
        if (eof() || peek() != '>') return fail(pos, "expected '>' in closing tag");
        ++pos;
        if (closing != node->name)
          return fail(at, "mismatched closing tag: expected </" + node->name + ">, got </" +
                              closing + ">");
        return true;
      }
      if (starts_with("<![CDATA[")) {
        std::size_t start = pos + 9;
        auto end = input.find("]]>", start);
        if (end == std::string_view::npos) return fail(pos, "unterminated CDATA");
        append_trimmed(input.substr(start, end - start), &node->text);
        pos = end + 3;
        continue;
      }
      bool skipped = false;
      if (!skip_misc(&skipped)) return false;
      if (skipped) continue;
      XmlNode child;
      if (!parse_element(&child)) return false;
      node->children.push_back(std::move(child));
    }
  }

  XmlResult run() {
    // Byte-order mark.
    if (starts_with("\xEF\xBB\xBF")) pos += 3;
    while (true) {
      skip_ws();
      if (eof()) return {std::nullopt, "no root element", pos};
      bool skipped = false;
      if (!skip_misc(&skipped)) return {std::nullopt, error, error_offset};
      if (!skipped) break;
    }
    XmlNode root;
    if (!parse_element(&root)) return {std::nullopt, error, error_offset};
    skip_ws();
    bool skipped = true;
    while (skipped && !eof()) {
      if (!skip_misc(&skipped)) return {std::nullopt, error, error_offset};
      skip_ws();
    }
    if (!eof()) return {std::nullopt, "unexpected content after root element", pos};
    return {std::move(root), "", 0};
  }
};

}  // namespace

XmlResult parse_xml(std::string_view input) {
  Parser parser{input};
  return parser.run();
}

}  // namespace pncube
