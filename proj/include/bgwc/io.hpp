#pragma once

#include <string>
#include <vector>

#include "bgwc/arrays.hpp"
#include "bgwc/bgw.hpp"
#include "bgwc/cwcode.hpp"

namespace bgwc::io {

/// Canonical JSON: fixed key order, one matrix row per line, LF endings.
/// Symbols are null for Zero and the exponent e for ω^e.
std::string to_json(const GMatrix& W);
std::string to_json(const Code& C);
std::string to_json(const SymbolArray& A);
std::string to_json(const LatinSquare& L);
std::string to_json(const std::vector<LatinSquare>& system);

/// Value of the "kind" key; throws std::invalid_argument on malformed JSON.
std::string kind_of(const std::string& json_text);

GMatrix gmatrix_from_json(const std::string& json_text);
Code code_from_json(const std::string& json_text);
SymbolArray array_from_json(const std::string& json_text);
LatinSquare latin_from_json(const std::string& json_text);
std::vector<LatinSquare> msls_from_json(const std::string& json_text);

/// Space-separated grid, "." for Zero and the exponent otherwise.
std::string text_grid(const std::vector<Word>& rows);
/// "0" for Zero, "1" for ω^0, "w" for ω^1, "w^e" otherwise; for g = 2 the
/// signed form "+", "-", "0".
std::string pretty_grid(const std::vector<Word>& rows, std::uint32_t g);

std::vector<Word> rows_of(const GMatrix& W);
std::vector<Word> rows_of(const SymbolArray& A);
std::vector<Word> rows_of(const LatinSquare& L);

} // namespace bgwc::io
