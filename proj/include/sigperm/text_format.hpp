#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sigperm/colored.hpp"
#include "sigperm/cycle_notation.hpp"
#include "sigperm/signed_permutation.hpp"

namespace sigperm {

// Grammar (whitespace allowed between tokens):
//   one-line : '[' [ entry { ',' entry } ] ']'
//   cycles   : '(' entry { ',' entry } ')' { '(' ... ')' }   or the lone "()" for n = 0
//   entry    : ['+'|'-'] digits          (colored: digits ['^' digits])
// Syntax errors throw ParseError with the offset; semantic errors throw
// MalformedNotation.

SignedPermutation parse_one_line(std::string_view text);

// Magnitudes missing from the text become fixed points when `degree` is given.
CycleNotation parse_cycles(std::string_view text, std::optional<int> degree = std::nullopt);

// Either form, chosen by the first non-blank character.
SignedPermutation parse_permutation(std::string_view text, std::optional<int> degree = std::nullopt);

// Colored entries w^c; the color of an image defaults to 0. In cycle form the
// color on a_{i+1} is the color of omega(a_i).
ColoredPermutation parse_colored(std::string_view text, int r,
                                 std::optional<int> degree = std::nullopt);

std::string format_one_line(const SignedPermutation& sigma);

// `pretty` drops fixed points, i.e. positive cycles of length 1.
std::string format_cycles(const CycleNotation& c, bool pretty = false);
std::string format_cycles(const SignedPermutation& sigma, bool pretty = false);

std::string format_colored(const ColoredPermutation& p);

}  // namespace sigperm
