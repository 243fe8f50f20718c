#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mildem/emss.hpp"
#include "mildem/operadic.hpp"
#include "mildem/staralg.hpp"

namespace mildem {

struct Value;
using ValueList = std::vector<Value>;

/// Text holds printed results that have no literal form (reports, verdicts).
struct Text {
  std::string s;
  friend bool operator==(const Text&, const Text&) = default;
};

struct Value {
  std::variant<Int, bool, Text, UPSet, PAPInj, InjN, MElt, Simplex, StarSimplex, OperadicClass, TruncEMSS, ValueList> v;
};

/// Parses and evaluates one expression. Throws ParseError with the column of
/// the offending character, or the error of the operation that failed.
Value eval(std::string_view expr);
/// Parses a literal or expression that must produce the given alternative.
Simplex parse_simplex(std::string_view text);
OperadicClass parse_class(std::string_view text);
StarSimplex parse_star(std::string_view text);
TruncEMSS parse_family(std::string_view text);
std::vector<Simplex> parse_simplex_list(std::string_view text);

/// Canonical printed form; literals print so that eval reads them back.
std::string to_string(const Value& v);
std::string type_name(const Value& v);
std::string family_literal(const TruncEMSS& x);

/// Names accepted by eval, with a one-line signature each.
const std::vector<std::pair<std::string, std::string>>& eval_functions();

}  // namespace mildem
