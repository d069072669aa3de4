#include "gw/scalar.hpp"

#include <cctype>
#include <cstdio>
#include <sstream>

namespace gw {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotCompactSemisimple: return "NotCompactSemisimple";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::UnknownSpace: return "UnknownSpace";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::UnsupportedSpace: return "UnsupportedSpace";
    case ErrorCode::InvalidMetric: return "InvalidMetric";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  const auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::InvalidInput, "malformed rational '" + s + "'");
  }
  if (num.front() == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

NumberLiteral parse_number(std::string_view text) {
  if (text.find_first_of(".eE") == std::string_view::npos) return parse_rational(text);
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "malformed number '" + s + "'");
  }
  if (used != s.size()) throw Error(ErrorCode::InvalidInput, "malformed number '" + s + "'");
  return v;
}

std::string to_string(const Rational& x) { return x.get_str(); }

std::string ScalarTraits<double>::str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

QuadraticSurd::QuadraticSurd(Rational a, Rational b, long radicand)
    : rational_(std::move(a)), surd_(std::move(b)), radicand_(radicand) {
  if (radicand_ < 1) throw Error(ErrorCode::InvalidInput, "radicand must be positive");
  if (radicand_ == 1) {
    rational_ += surd_;
    surd_ = 0;
  }
  if (sgn(surd_) == 0) radicand_ = 1;
}

long QuadraticSurd::common_radicand(const QuadraticSurd& o) const {
  if (is_rational()) return o.radicand_;
  if (o.is_rational()) return radicand_;
  if (radicand_ != o.radicand_) {
    throw Error(ErrorCode::InvalidInput, "mixing sqrt(" + std::to_string(radicand_) + ") and sqrt(" +
                                             std::to_string(o.radicand_) + ")");
  }
  return radicand_;
}

int QuadraticSurd::sign() const {
  const int sa = sgn(rational_);
  const int sb = sgn(surd_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Rational a2 = rational_ * rational_;
  const Rational b2d = surd_ * surd_ * radicand_;
  return a2 > b2d ? sa : sb;
}

double QuadraticSurd::to_double() const {
  return rational_.get_d() + surd_.get_d() * std::sqrt(static_cast<double>(radicand_));
}

std::string QuadraticSurd::str() const {
  if (is_rational()) return to_string(rational_);
  std::ostringstream os;
  if (sgn(rational_) != 0) os << to_string(rational_) << (sgn(surd_) > 0 ? "+" : "");
  os << to_string(surd_) << "*sqrt(" << radicand_ << ")";
  return os.str();
}

QuadraticSurd QuadraticSurd::operator-() const {
  QuadraticSurd r = *this;
  r.rational_ = -r.rational_;
  r.surd_ = -r.surd_;
  return r;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  radicand_ = common_radicand(o);
  rational_ += o.rational_;
  surd_ += o.surd_;
  if (sgn(surd_) == 0) radicand_ = 1;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) { return *this += -o; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
  const long d = common_radicand(o);
  Rational a = rational_ * o.rational_ + surd_ * o.surd_ * d;
  Rational b = rational_ * o.surd_ + surd_ * o.rational_;
  rational_ = std::move(a);
  surd_ = std::move(b);
  radicand_ = sgn(surd_) == 0 ? 1 : d;
  return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  const long d = common_radicand(o);
  const Rational norm = o.rational_ * o.rational_ - o.surd_ * o.surd_ * d;
  QuadraticSurd conj(o.rational_ / norm, -o.surd_ / norm, d);
  return *this *= conj;
}

QuadraticSurd sqrt_rational(const Rational& r) {
  if (sgn(r) < 0) throw Error(ErrorCode::InvalidInput, "square root of negative rational " + to_string(r));
  if (sgn(r) == 0) return QuadraticSurd();
  // sqrt(n/m) = sqrt(n*m)/m; split n*m = f^2 * d with d square-free.
  Integer rest = r.get_num() * r.get_den();
  Integer f = 1;
  Integer d = 1;
  for (Integer p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      f *= p;
    }
    if (rest % p == 0) {
      rest /= p;
      d *= p;
    }
  }
  d *= rest;
  if (!d.fits_slong_p()) throw Error(ErrorCode::InvalidInput, "radicand too large");
  Rational coeff(f, r.get_den());
  coeff.canonicalize();
  return QuadraticSurd(0, coeff, d.get_si());
}

}  // namespace gw
