#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "tropcrit/errors.hpp"

namespace tropcrit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; plain "p" when the denominator is 1. Never floating
// point.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Exact rational coordinates indexed by a contiguous ground set
// {first, ..., first+size-1}. The two grounds in play are [0,n] and [1,n].
class RationalVector {
 public:
  RationalVector() = default;
  RationalVector(int first_index, std::vector<Rational> values)
      : first_(first_index), values_(std::move(values)) {}

  static RationalVector zeros(int first_index, int size) {
    return RationalVector(first_index, std::vector<Rational>(static_cast<size_t>(size)));
  }
  static RationalVector from_ints(int first_index, const std::vector<long long>& v) {
    std::vector<Rational> vals(v.begin(), v.end());
    return RationalVector(first_index, std::move(vals));
  }

  int first_index() const { return first_; }
  int size() const { return static_cast<int>(values_.size()); }
  // Index of one past the last element.
  int end_index() const { return first_ + size(); }

  const Rational& at(int element) const {
    if (element < first_ || element >= end_index())
      throw Error(ErrorCode::IndexOutOfRange,
                  "element " + std::to_string(element) + " outside vector ground");
    return values_[static_cast<size_t>(element - first_)];
  }
  Rational& at(int element) {
    if (element < first_ || element >= end_index())
      throw Error(ErrorCode::IndexOutOfRange,
                  "element " + std::to_string(element) + " outside vector ground");
    return values_[static_cast<size_t>(element - first_)];
  }

  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const RationalVector& a, const RationalVector& b) = default;

  std::string to_string() const;

 private:
  int first_ = 0;
  std::vector<Rational> values_;
};

// (0, x): prepend a zero coordinate at index 0 to a vector on [1,n].
RationalVector with_zero_at_origin(const RationalVector& x);

}  // namespace tropcrit
