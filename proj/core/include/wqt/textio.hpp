#pragma once

#include <string>

#include "wqt/scalar.hpp"

namespace wqt {

/// Parse the canonical text form emitted by Scalar::to_string():
///   Sum | "(" Sum ")" { " / (" Sum ")" }
///   Sum  := ["-"] term { " + " term | " - " term }
///   term := rational | [rational "*"] "x^(" exponent ")"
///   exponent := poly | "(" poly ")/(" poly ")"
///   poly := signed monomials in r with rational coefficients, no spaces.
/// Round-trip stable: parse_scalar(s.to_string()).to_string() == s.to_string().
/// Throws std::invalid_argument on malformed input.
Scalar parse_scalar(const std::string& text);

ExponentFn parse_exponent(const std::string& text);

}  // namespace wqt
