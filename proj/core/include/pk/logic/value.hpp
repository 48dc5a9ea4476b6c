#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "pk/logic/number.hpp"

namespace pk::logic {

enum class Sort : std::uint8_t { Bool, Int, Real };

std::string_view to_string(Sort s);
inline bool is_numeric(Sort s) { return s != Sort::Bool; }

/// A ground value of some sort. Int and Real payloads are both held as exact
/// rationals; an Int value always has denominator 1.
class Value {
 public:
  Value() = default;

  static Value boolean(bool b);
  static Value integer(Integer n);
  static Value real(Rational q);
  /// The default value used to complete partial models: false, 0 or 0.
  static Value default_of(Sort s);

  Sort sort() const { return sort_; }
  bool as_bool() const { return flag_; }
  const Rational& as_rational() const { return number_; }
  Integer as_integer() const { return numerator(number_); }

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b)
  {
    if (a.sort_ != b.sort_) return false;
    return a.sort_ == Sort::Bool ? a.flag_ == b.flag_ : a.number_ == b.number_;
  }
  friend bool operator<(const Value& a, const Value& b)
  {
    if (a.sort_ != b.sort_) return a.sort_ < b.sort_;
    return a.sort_ == Sort::Bool ? a.flag_ < b.flag_ : a.number_ < b.number_;
  }

 private:
  Sort sort_ = Sort::Bool;
  bool flag_ = false;
  Rational number_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace pk::logic
