#include "f4/quaternion.hpp"

namespace f4 {

std::string to_string(const Quat& q) {
  return "(" + q[0].str() + ", " + q[1].str() + ", " + q[2].str() + ", " + q[3].str() + ")";
}

std::string pretty(const Quat& q) {
  static const char* units[] = {"", "e1", "e2", "e3"};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (q[i].is_zero()) continue;
    std::string c = q[i].pretty();
    const bool sum = !q[i].is_rational() && sgn(q[i].rat()) != 0;
    if (i > 0) {
      if (sum) {
        c = "(" + c + ")";
      } else if (c == "1") {
        c.clear();
      } else if (c == "-1") {
        c = "-";
      }
    }
    if (!out.empty() && (c.empty() || c.front() != '-')) out += "+";
    out += c + units[i];
  }
  return out.empty() ? "0" : out;
}

std::size_t hash_value(const Quat& q) {
  std::size_t h = 0x51ed270b;
  for (int i = 0; i < 4; ++i) h = h * 1000003u ^ hash_value(q[i]);
  return h;
}

}  // namespace f4
