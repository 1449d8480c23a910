#include "orbiloop/scalar.hpp"

#include <charconv>
#include <ostream>

namespace orbiloop {

namespace {

std::uint64_t reduce(std::int64_t v, std::uint32_t p) {
  const std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

boost::multiprecision::cpp_int parse_integer(std::string_view s) {
  s = trim(s);
  std::string_view digits = s;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw InputError("malformed scalar '" + std::string(s) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("malformed scalar '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return boost::multiprecision::cpp_int(std::string(s));
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  if (p > (1u << 31)) throw InputError("field characteristic " + std::to_string(p) + " too large");
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint32_t p = 0;
    auto rest = text.substr(3);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw InputError("malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw InputError("unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Scalar::Scalar(Field f, std::int64_t value) : p_(f.characteristic()) {
  if (p_ == 0) {
    v_ = Rational(value);
  } else {
    v_ = reduce(value, p_);
  }
}

Scalar::Scalar(Field f, const Rational& value) : p_(f.characteristic()) {
  if (p_ == 0) {
    v_ = value;
    return;
  }
  using boost::multiprecision::cpp_int;
  const cpp_int num = boost::multiprecision::numerator(value) % p_;
  const cpp_int den = boost::multiprecision::denominator(value) % p_;
  if (den == 0) throw InputError("denominator vanishes in " + f.name());
  const auto n = static_cast<std::int64_t>(num);
  const auto d = static_cast<std::int64_t>(den);
  v_ = reduce(n, p_) * pow_mod(reduce(d, p_), p_ - 2, p_) % p_;
}

Scalar Scalar::parse(Field f, std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(f, Rational(parse_integer(text)));
  const auto num = parse_integer(text.substr(0, slash));
  const auto den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in scalar '" + std::string(text) + "'");
  return Scalar(f, Rational(num, den));
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) {
    throw InputError("scalar field mismatch: " + Field::of_characteristic(p_).name() + " vs " +
                     Field::of_characteristic(o.p_).name());
  }
}

bool Scalar::is_zero() const {
  if (p_) return std::get<std::uint64_t>(v_) == 0;
  return std::get<Rational>(v_) == 0;
}

bool Scalar::is_one() const {
  if (p_) return std::get<std::uint64_t>(v_) == 1 % p_;
  return std::get<Rational>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (p_) {
    r.v_ = (std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_)) % p_;
  } else {
    r.v_ = std::get<Rational>(v_) + std::get<Rational>(o.v_);
  }
  return r;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_) {
    r.v_ = (p_ - std::get<std::uint64_t>(v_)) % p_;
  } else {
    r.v_ = Rational(-std::get<Rational>(v_));
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  Scalar r = *this;
  if (p_) {
    r.v_ = std::get<std::uint64_t>(v_) * std::get<std::uint64_t>(o.v_) % p_;
  } else {
    r.v_ = std::get<Rational>(v_) * std::get<Rational>(o.v_);
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero scalar");
  Scalar r = *this;
  if (p_) {
    r.v_ = pow_mod(std::get<std::uint64_t>(v_), p_ - 2, p_);
  } else {
    r.v_ = Rational(1 / std::get<Rational>(v_));
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

std::string Scalar::to_string() const {
  if (p_) return std::to_string(std::get<std::uint64_t>(v_));
  return std::get<Rational>(v_).str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace orbiloop
