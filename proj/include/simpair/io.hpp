#pragma once

#include <string>
#include <string_view>

#include "simpair/core.hpp"

namespace simpair {

/// Canonical pair text: {"n":N,"E":[[...],...],"F":[[...],...]} with no whitespace.
std::string serialize_pair(const FinPair& p);
/// Accepts any whitespace and block order; rejects extra or missing keys.
/// Throws ParseError (with line/column) or the validation errors of validate_pair.
FinPair parse_pair(std::string_view text);

/// {"mode":"reduction|embedding|isomorphism","map":[...]}
std::string serialize_witness(const Witness& w);
Witness parse_witness(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace simpair
