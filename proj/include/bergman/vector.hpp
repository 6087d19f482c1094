#pragma once

#include <vector>

#include "bergman/element_set.hpp"
#include "bergman/error.hpp"
#include "bergman/rational.hpp"

namespace bergman {

// Dense vector over Q, one coordinate per ground set element.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(int dim) : c_(dim) {}
  explicit RationalVector(std::vector<Rational> c) : c_(std::move(c)) {}

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int i) const { return c_[i]; }
  Rational& operator[](int i) { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  RationalVector& operator+=(const RationalVector& o);
  RationalVector& operator-=(const RationalVector& o);
  RationalVector& operator*=(const Rational& s);

  bool operator==(const RationalVector&) const = default;

 private:
  std::vector<Rational> c_;
};

RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);
RationalVector operator*(const Rational& s, RationalVector v);

// 0/1 vector of a subset
RationalVector indicator(ElementSet s, int dim);

// coordinatewise min(a + x_e, b + y_e), the tropical line through x and y
// in min-plus convention
RationalVector tropical_combine(const Rational& a, const RationalVector& x,
                                const Rational& b, const RationalVector& y);

}  // namespace bergman
