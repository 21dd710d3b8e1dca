#ifndef MODSPRINGER_GROUPSPEC_HPP
#define MODSPRINGER_GROUPSPEC_HPP

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "modspringer/orbits.hpp"

namespace modspringer {

/// `Sp <2n>`, `SO <m>`, `Spin <m>`, `GL <n>`, `SL <n>`, `E8`, joined by `x`. Whitespace separates tokens.
inline GroupForm parse_group(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw std::invalid_argument("empty group description");

  auto number = [&](std::size_t& i, const std::string& name) {
    if (++i >= tokens.size()) throw std::invalid_argument(name + " needs a size");
    const auto& t = tokens[i];
    if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw std::invalid_argument(name + ": expected a size, got '" + t + "'");
    return std::stoi(t);
  };

  std::vector<GroupForm> parts;
  bool expect_factor = true;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (!expect_factor) {
      if (t != "x") throw std::invalid_argument("expected 'x' between factors, got '" + t + "'");
      expect_factor = true;
      continue;
    }
    if (t == "Sp") parts.push_back(GroupForm::sp(number(i, t)));
    else if (t == "SO") parts.push_back(GroupForm::so(number(i, t)));
    else if (t == "Spin") parts.push_back(GroupForm::spin(number(i, t)));
    else if (t == "GL") parts.push_back(GroupForm::gl(number(i, t)));
    else if (t == "SL") parts.push_back(GroupForm::sl(number(i, t)));
    else if (t == "E8") parts.push_back(GroupForm::simply_connected(RootType::E8, 8));
    else throw std::invalid_argument("unknown group '" + t + "'");
    expect_factor = false;
  }
  if (expect_factor) throw std::invalid_argument("group description ends with 'x'");
  return parts.size() == 1 ? parts.front() : GroupForm::product(parts);
}

}  // namespace modspringer

#endif  // MODSPRINGER_GROUPSPEC_HPP
