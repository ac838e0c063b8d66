#include "heisenweyl/format.hpp"

namespace heisenweyl {

namespace {

// A coefficient prints with a leading minus when it is a single negative term.
bool negative_looking(const Scalar& c) {
  return c.is_laurent() && c.num().size() == 1 && c.num().terms().begin()->second.is_negative_looking();
}

}  // namespace

std::string format_power(const std::string& base, int exponent) {
  if (exponent == 0) return {};
  if (exponent == 1) return base;
  return base + "^" + std::to_string(exponent);
}

std::string format_sum(const std::vector<std::pair<std::string, Scalar>>& terms, const VariableNames& names) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms) {
    bool neg = negative_looking(coeff);
    Scalar mag = neg ? -coeff : coeff;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (mono.empty()) {
      bool wrap = mag.needs_parens() && terms.size() > 1;
      out += wrap ? "(" + mag.to_string(names) + ")" : mag.to_string(names);
    } else if (mag.is_one()) {
      out += mono;
    } else {
      std::string c = mag.to_string(names);
      out += (mag.needs_parens() ? "(" + c + ")" : c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace heisenweyl
