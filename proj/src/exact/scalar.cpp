#include "gaprig/exact/scalar.hpp"

#include <ostream>
#include <regex>

#include "gaprig/error.hpp"

namespace gaprig {

Scalar Scalar::frac(long num, long den, long inum, long iden) {
  if (den == 0 || iden == 0) throw DomainError("zero denominator");
  mpq_class re(num, den), im(inum, iden);
  re.canonicalize();
  im.canonicalize();
  return Scalar(re, im);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  mpq_class d = o.norm2();
  *this *= o.conj();
  re_ /= d;
  im_ /= d;
  return *this;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
  if (sgn(a.im_) == 0 && sgn(b.im_) == 0) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string Scalar::str() const {
  return re_.get_str() + " + (" + im_.get_str() + ")i";
}

namespace {

mpq_class parse_q(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  static const std::regex full(R"(^\s*([-+]?\d+(?:/\d+)?)\s*\+\s*\(\s*([-+]?\d+(?:/\d+)?)\s*\)\s*i\s*$)");
  static const std::regex real(R"(^\s*([-+]?\d+(?:/\d+)?)\s*$)");
  static const std::regex imag(R"(^\s*\(\s*([-+]?\d+(?:/\d+)?)\s*\)\s*i\s*$)");
  std::smatch m;
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (std::regex_match(text, m, full))
    return Scalar(parse_q(strip_plus(m[1])), parse_q(strip_plus(m[2])));
  if (std::regex_match(text, m, real)) return Scalar(parse_q(strip_plus(m[1])));
  if (std::regex_match(text, m, imag)) return Scalar(mpq_class(0), parse_q(strip_plus(m[1])));
  throw ParseError("bad scalar: " + text);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace gaprig
