#include "tropcrit/rational.hpp"

namespace tropcrit {

std::string rational_to_string(const Rational& r) {
  Integer num = boost::multiprecision::numerator(r);
  Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + s + "\"");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a rational: \"" + s + "\"");
  }
}

std::string RationalVector::to_string() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ", ";
    s += rational_to_string(values_[static_cast<size_t>(i)]);
  }
  return s + ")";
}

RationalVector with_zero_at_origin(const RationalVector& x) {
  if (x.first_index() != 1)
    throw Error(ErrorCode::IndexOutOfRange, "expected a vector on [1,n]");
  std::vector<Rational> vals;
  vals.reserve(static_cast<size_t>(x.size()) + 1);
  vals.emplace_back(0);
  for (const Rational& v : x.values()) vals.push_back(v);
  return RationalVector(0, std::move(vals));
}

}  // namespace tropcrit
