#include "solvcohom/exact/gaussian_rational.hpp"

#include <ostream>
#include <stdexcept>

#include "solvcohom/errors.hpp"
#include "term_parser.hpp"

namespace solvcohom {

GaussianRational GaussianRational::parse(std::string_view text) {
  GaussianRational out;
  for (const auto& t : detail::parse_terms(text)) {
    if (t.symbol) {
      throw ParseError("offset " + std::to_string(t.position),
                       "unexpected symbol '" + *t.symbol + "' in a Gaussian rational");
    }
    if (t.times_i)
      out.im_ += t.coeff;
    else
      out.re_ += t.coeff;
  }
  return out;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

int compare(const GaussianRational& a, const GaussianRational& b) {
  if (int c = cmp(a.re_, b.re_); c != 0) return c < 0 ? -1 : 1;
  int c = cmp(a.im_, b.im_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string coefficient_prefix(const mpq_class& c) {
  if (c == 1) return "";
  if (c == -1) return "-";
  return c.get_str() + "*";
}

std::string GaussianRational::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    std::string term = coefficient_prefix(im_) + "i";
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace solvcohom
