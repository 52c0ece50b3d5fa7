#include <regex>

#include "dtcert/signature.hpp"

namespace dtcert {

std::string to_string(const Rational& x) { return x.str(); }

Rational parse_rational(const std::string& text) {
  static const std::regex form(R"(\s*-?\d+(/\d+)?\s*)");
  if (!std::regex_match(text, form)) throw InvalidInput("not a rational number: '" + text + "'");
  Rational r(text);
  return r;
}

}  // namespace dtcert
