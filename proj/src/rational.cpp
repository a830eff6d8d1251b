#include "combsyz/rational.hpp"

#include <stdexcept>

#include "combsyz/errors.hpp"

namespace combsyz {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ValidationError("rational: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw ValidationError("not a rational number: \"" + text + "\"");
  }
}

std::string rat_string(const Rat& value) { return value.get_str(); }

std::string int_string(const Int& value) { return value.get_str(); }

}  // namespace combsyz
