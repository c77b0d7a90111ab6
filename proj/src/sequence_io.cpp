#include "spinchain/sequence_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>

namespace spinchain {

namespace {

std::string position_message(int line, int column, const std::string& message) {
  std::ostringstream out;
  out << "line " << line << ", column " << column << ": " << message;
  return out.str();
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

double parse_number(const Token& token, int line) {
  const char* begin = token.text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw ParseError(line, token.column, "expected a number, got '" + token.text + "'");
  return value;
}

long parse_integer(const Token& token, int line) {
  const char* begin = token.text.c_str();
  char* end = nullptr;
  const long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw ParseError(line, token.column, "expected an integer, got '" + token.text + "'");
  return value;
}

// Angle grammar: [-]<int>pi[/<int>] | [-]pi[/<int>] | decimal.
double parse_angle(const Token& token, int line) {
  const std::string& s = token.text;
  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) return parse_number(token, line);

  const auto fail = [&]() -> double {
    throw ParseError(line, token.column, "malformed angle '" + s + "'");
  };

  long num = 1;
  std::size_t begin = 0;
  bool negative = false;
  if (begin < s.size() && (s[begin] == '-' || s[begin] == '+')) {
    negative = s[begin] == '-';
    ++begin;
  }
  if (begin < pi_pos) {
    char* end = nullptr;
    num = std::strtol(s.c_str() + begin, &end, 10);
    if (end != s.c_str() + pi_pos) return fail();
  }
  if (negative) num = -num;

  long den = 1;
  std::size_t rest = pi_pos + 2;
  if (rest < s.size()) {
    if (s[rest] != '/') return fail();
    char* end = nullptr;
    den = std::strtol(s.c_str() + rest + 1, &end, 10);
    if (end != s.c_str() + s.size() || den <= 0) return fail();
  }
  return static_cast<double>(num) * std::numbers::pi / static_cast<double>(den);
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

// Prefer the pi-rational spelling when it reproduces the exact double.
std::string format_angle(double value) {
  for (long den : {1, 2, 3, 4, 6, 8, 12}) {
    const double scaled = value * static_cast<double>(den) / std::numbers::pi;
    const long num = std::lround(scaled);
    if (num == 0 || std::llabs(num) > 64) continue;
    if (static_cast<double>(num) * std::numbers::pi / static_cast<double>(den) == value) {
      std::string head = (num == 1) ? "" : (num == -1) ? "-" : std::to_string(num);
      std::string tail = (den == 1) ? "" : "/" + std::to_string(den);
      return head + "pi" + tail;
    }
  }
  return format_number(value);
}

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error(position_message(line, column, message)), line_(line), column_(column) {}

ParsedSequence parse_sequence_file(std::string_view text) {
  ParsedSequence parsed;
  std::optional<int> n;
  std::optional<std::vector<double>> larmor;
  std::optional<double> j1, j2, omega;
  bool config_bound = false;

  const auto bind_config = [&](int line, int column) {
    if (config_bound) return;
    if (!n) throw ParseError(line, column, "missing header key 'n'");
    if (!larmor) throw ParseError(line, column, "missing header key 'larmor'");
    if (!j1) throw ParseError(line, column, "missing header key 'J'");
    parsed.config.n = *n;
    parsed.config.larmor = *larmor;
    parsed.config.j1 = *j1;
    parsed.config.j2 = j2.value_or(0.0);
    try {
      auto warnings = validate_config(parsed.config);
      parsed.warnings.insert(parsed.warnings.end(), warnings.begin(), warnings.end());
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, column, e.what());
    }
    parsed.sequence.config = parsed.config;
    config_bound = true;
  };

  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    if (const std::size_t hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::vector<Token> tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (tokens[0].text == "pulse") {
      bind_config(line_number, tokens[0].column);
      if (tokens.size() != 6 && tokens.size() != 7)
        throw ParseError(line_number, tokens[0].column,
                         "pulse lines take 5 or 6 fields: pulse <qubit> <mu> <nu> <theta> "
                         "<phi> [omega]");
      Pulse pulse;
      pulse.qubit = static_cast<int>(parse_integer(tokens[1], line_number));
      pulse.mu = static_cast<int>(parse_integer(tokens[2], line_number));
      pulse.nu = static_cast<int>(parse_integer(tokens[3], line_number));
      pulse.theta = parse_angle(tokens[4], line_number);
      pulse.phi = parse_angle(tokens[5], line_number);
      if (tokens.size() == 7) {
        pulse.rabi = parse_number(tokens[6], line_number);
      } else {
        if (!omega)
          throw ParseError(line_number, tokens[0].column,
                           "pulse has no omega and the header does not set one");
        pulse.rabi = *omega;
      }
      try {
        validate_pulse(parsed.config, pulse);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_number, tokens[0].column, e.what());
      }
      parsed.sequence.pulses.push_back(pulse);
      continue;
    }

    // header line: key=value (spaces around '=' allowed)
    std::string joined;
    for (const Token& token : tokens) joined += token.text;
    const std::size_t eq = joined.find('=');
    if (eq == std::string::npos)
      throw ParseError(line_number, tokens[0].column,
                       "expected 'key=value' or a pulse line, got '" + tokens[0].text + "'");
    if (config_bound)
      throw ParseError(line_number, tokens[0].column, "header keys must precede pulse lines");
    const std::string key = joined.substr(0, eq);
    const std::string value = joined.substr(eq + 1);
    const Token value_token{value, tokens[0].column};
    if (value.empty())
      throw ParseError(line_number, tokens[0].column, "empty value for key '" + key + "'");

    if (key == "n") {
      n = static_cast<int>(parse_integer(value_token, line_number));
    } else if (key == "larmor") {
      std::vector<double> values;
      std::size_t start = 0;
      while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string::npos) comma = value.size();
        values.push_back(
            parse_number({value.substr(start, comma - start), tokens[0].column}, line_number));
        start = comma + 1;
      }
      larmor = std::move(values);
    } else if (key == "J") {
      j1 = parse_number(value_token, line_number);
    } else if (key == "J2") {
      j2 = parse_number(value_token, line_number);
    } else if (key == "omega") {
      omega = parse_number(value_token, line_number);
      if (!(*omega > 0.0))
        throw ParseError(line_number, tokens[0].column, "omega must be positive");
    } else {
      throw ParseError(line_number, tokens[0].column, "unknown header key '" + key + "'");
    }
  }

  bind_config(line_number + 1, 1);
  parsed.default_rabi = omega.value_or(0.0);
  return parsed;
}

std::string serialize_sequence(const ParsedSequence& parsed) {
  std::ostringstream out;
  out << "n=" << parsed.config.n << "\n";
  out << "larmor=";
  for (int k = 0; k < parsed.config.n; ++k)
    out << (k ? "," : "") << format_number(parsed.config.larmor[k]);
  out << "\n";
  out << "J=" << format_number(parsed.config.j1) << "\n";
  out << "J2=" << format_number(parsed.config.j2) << "\n";
  if (parsed.default_rabi > 0.0) out << "omega=" << format_number(parsed.default_rabi) << "\n";
  for (const Pulse& pulse : parsed.sequence.pulses) {
    out << "pulse " << pulse.qubit << " " << pulse.mu << " " << pulse.nu << " "
        << format_angle(pulse.theta) << " " << format_angle(pulse.phi);
    if (pulse.rabi != parsed.default_rabi) out << " " << format_number(pulse.rabi);
    out << "\n";
  }
  return out.str();
}

}  // namespace spinchain
