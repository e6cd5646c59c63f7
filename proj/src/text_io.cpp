#include "monoclosure/text_io.hpp"

#include <algorithm>
#include <cctype>

#include "monoclosure/rational.hpp"

namespace monoclosure {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return parts;
}

Exponent parse_exponent(std::string_view s, std::string_view context) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw InputError("malformed exponent in '" + std::string(context) + "'");
  }
  if (s.size() > 18) throw InputError("exponent too large in '" + std::string(context) + "'");
  return std::stoull(std::string(s));
}

}  // namespace

std::vector<std::string> split_names(std::string_view csv) {
  std::vector<std::string> names;
  for (auto part : split(csv, ',')) {
    if (part.empty() || !is_name_start(part[0]) ||
        !std::all_of(part.begin(), part.end(), is_name_char)) {
      throw InputError("malformed variable name '" + std::string(part) + "'");
    }
    if (std::find(names.begin(), names.end(), part) != names.end()) {
      throw InputError("duplicate variable name '" + std::string(part) + "'");
    }
    names.emplace_back(part);
  }
  return names;
}

std::vector<std::string> variables_in(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (is_name_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      std::string name(text.substr(i, j - i));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
      i = j;
    } else {
      ++i;
    }
  }
  return names;
}

ExponentVector parse_monomial(std::string_view text, const std::vector<std::string>& vars) {
  std::string_view body = trim(text);
  if (body.empty()) throw InputError("empty monomial");
  ExponentVector m(vars.size());
  if (body == "1") return m;
  for (auto factor : split(body, '*')) {
    if (factor.empty()) throw InputError("malformed monomial '" + std::string(text) + "'");
    std::string_view name = factor;
    Exponent e = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      name = trim(factor.substr(0, caret));
      e = parse_exponent(trim(factor.substr(caret + 1)), text);
    }
    if (name == "1") continue;
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) {
      throw InputError("unknown variable '" + std::string(name) + "' in '" + std::string(text) + "'");
    }
    auto idx = static_cast<std::size_t>(it - vars.begin());
    if (__builtin_add_overflow(m[idx], e, &m[idx])) throw InputError("exponent overflow");
  }
  return m;
}

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::vector<std::string>> vars) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')') throw InputError("unbalanced parentheses in '" + std::string(text) + "'");
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<std::string> names = vars ? *vars : variables_in(body);
  if (body.empty() || body == "0") return MonomialIdeal::zero(names);
  std::vector<ExponentVector> gens;
  for (auto part : split(body, ',')) gens.push_back(parse_monomial(part, names));
  return MonomialIdeal(names, std::move(gens));
}

std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_ideal(const MonomialIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < I.size(); ++k) {
    if (k) out += ", ";
    out += format_monomial(I.generators()[k], I.vars());
  }
  return out + ")";
}

}  // namespace monoclosure
