#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monoclosure/monomial.hpp"

namespace monoclosure {

/// Parses `u*v*x^2`, `x`, `1` against a fixed variable list.
ExponentVector parse_monomial(std::string_view text, const std::vector<std::string>& vars);

/// Parses `(x^2, y^2)`, `x^2,y^2`, `(0)` or `(1)`. Variables are taken from
/// `vars` when given, otherwise in order of first appearance.
MonomialIdeal parse_ideal(std::string_view text,
                          std::optional<std::vector<std::string>> vars = std::nullopt);

/// Variable names in order of first appearance in a monomial or ideal text.
std::vector<std::string> variables_in(std::string_view text);

std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& vars);
std::string format_ideal(const MonomialIdeal& I);

std::vector<std::string> split_names(std::string_view csv);

}  // namespace monoclosure
