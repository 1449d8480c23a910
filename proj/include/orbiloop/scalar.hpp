#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "orbiloop/error.hpp"

namespace orbiloop {

using Rational = boost::multiprecision::cpp_rational;

// Coefficient field: the rationals (characteristic 0) or F_p.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws InputError unless p is prime.
  static Field prime(std::uint32_t p);
  // 0 selects the rationals.
  static Field of_characteristic(std::uint32_t p) { return p == 0 ? rationals() : prime(p); }
  // Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  std::string name() const;

  friend bool operator==(Field a, Field b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

// An exact field element. Residues are kept in [0, p).
class Scalar {
 public:
  Scalar() : p_(0), v_(Rational(0)) {}
  Scalar(Field f, std::int64_t value);
  Scalar(Field f, const Rational& value);

  // Parses an integer "n" or fraction "a/b"; over F_p the fraction is a*b^-1.
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return Field::of_characteristic(p_); }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.p_ == b.p_ && a.v_ == b.v_; }

  std::string to_string() const;

 private:
  void check_same_field(const Scalar& o) const;

  std::uint32_t p_;
  std::variant<std::uint64_t, Rational> v_;  // residue when p_ > 0
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace orbiloop
