#include "simplex_forge/numbers.hpp"

#include "simplex_forge/errors.hpp"

namespace simplex_forge {

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& z) { return z.str(); }

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InvalidInput("not a rational number: '" + text + "'");
  BigInt d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw InvalidInput("zero denominator in '" + text + "'");
  return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
}

}  // namespace simplex_forge
