#include "bratteli/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace bratteli {

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
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) {
    throw std::domain_error("GaussianRational: division by zero");
  }
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational denom = o.norm_squared();
  *this *= o.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (is_real()) {
    return re_.get_str();
  }
  std::ostringstream os;
  if (sgn(re_) != 0) {
    os << re_.get_str();
    if (sgn(im_) > 0) os << '+';
  }
  if (im_ == 1) {
    os << 'i';
  } else if (im_ == -1) {
    os << "-i";
  } else {
    os << im_.get_str() << 'i';
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
  return os << z.to_string();
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const BigInt& num = q.get_num();
  const BigInt& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt rn = sqrt(num);
  BigInt rd = sqrt(den);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<std::size_t> to_size(const BigInt& value, std::size_t limit) {
  if (sgn(value) < 0 || !value.fits_ulong_p()) return std::nullopt;
  unsigned long v = value.get_ui();
  if (v > limit) return std::nullopt;
  return static_cast<std::size_t>(v);
}

}  // namespace bratteli
