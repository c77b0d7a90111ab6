#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spinchain/pulse.hpp"

namespace spinchain {

/// Syntax or validation failure with the 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct ParsedSequence {
  ChainConfig config;
  PulseSequence sequence;
  double default_rabi = 0.0;  ///< header omega; 0 when absent
  std::vector<std::string> warnings;
};

/// Parses the line-oriented sequence format:
///
///   # comment
///   n=4
///   larmor=100,200,400,800
///   J=10
///   J2=0.4
///   omega=0.1
///   pulse <qubit> <mu> <nu> <theta> <phi> [omega]
///
/// Angles accept rational multiples of pi (pi, pi/2, -pi/2, 3pi/4, ...)
/// or plain decimals. Header keys must precede the first pulse line; n,
/// larmor and J are required, J2 defaults to 0, omega is required only
/// when some pulse omits its own. The config and every pulse are
/// validated; failures throw ParseError with the offending position.
ParsedSequence parse_sequence_file(std::string_view text);

/// Inverse of parse_sequence_file: parsing the returned text yields an
/// identical config and pulse list.
std::string serialize_sequence(const ParsedSequence& parsed);

}  // namespace spinchain
