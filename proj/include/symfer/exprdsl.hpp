// Copyright 2026 The symfer Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file exprdsl.hpp
 * @brief Text syntax for states and correlator queries.
 *
 *   query      := "corr(" domain ";" scalar ";" "[" insertion ("," insertion)* "]" ")"
 *   insertion  := state "@" complex
 *   state      := ["+"|"-"] term (("+"|"-") term)*
 *   term       := [rational "*"] factorchain
 *   factorchain:= (gen "(" int ")" "*")* (name | "|omega>")   e.g. eta(-2)*chi(-1)|omega>
 *   domain     := "disk" | "halfplane" | "quadrant"
 *               | "mobius:" domain ":" scalar "," scalar "," scalar "," scalar
 *   complex    := real ("+"|"-") real "i"          scalar := complex | real
 *
 * A generator may also be joined to the terminal without "*", as in eta(-1)|omega>.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "symfer/correlators.hpp"
#include "symfer/fockspace.hpp"
#include "symfer/geometry.hpp"

namespace symfer {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line, std::size_t column);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_, line_, column_;
};

State parse_state(std::string_view text, const FockSpace& space = FockSpace{});
CorrelatorQuery parse_query(std::string_view text, const FockSpace& space = FockSpace{});
Domain parse_domain(std::string_view text);
/// A single mode literal such as "chibar(-2)".
Generator parse_generator(std::string_view text);
/// A point literal; the imaginary part is mandatory.
Complex parse_complex(std::string_view text);

std::string render(const BasisWord& w);
std::string render(const State& s);
std::string render(const CorrelatorQuery& q);

}  // namespace symfer
