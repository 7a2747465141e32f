#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pncube {

/// Element tree of a small XML subset: elements, attributes, character data,
/// comments, CDATA, processing instructions and a doctype line. Namespace
/// prefixes are stripped from element and attribute names. Enough for PNML.
struct XmlNode {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attrs;
  std::vector<XmlNode> children;
  /// Concatenated character data, whitespace-trimmed.
  std::string text;
  /// Byte offset of the element's opening '<'.
  std::size_t offset = 0;

  const std::string* attr(std::string_view name) const;
  const XmlNode* child(std::string_view name) const;
};

struct XmlResult {
  std::optional<XmlNode> root;
  std::string error;
  std::size_t error_offset = 0;

  bool ok() const { return root.has_value(); }
};

XmlResult parse_xml(std::string_view input);

}  // namespace pncube
