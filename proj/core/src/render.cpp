#include "render.hpp"

namespace dop::detail {

std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str();
      out += "*";
      out += mono;
    }
  }
  return out;
}

std::string power_text(char var, long exponent) {
  if (exponent == 0) return {};
  std::string s(1, var);
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

}  // namespace dop::detail
