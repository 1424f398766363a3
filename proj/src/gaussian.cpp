// Copyright 2026 The mixedgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mixedgraph/gaussian.hpp"

#include <ostream>
#include <stdexcept>

namespace mixedgraph {

GaussianInt GaussianInt::unit_power(std::int64_t k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
  BigInt re = re_ * o.re_ - im_ * o.im_;
  BigInt im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianInt GaussianInt::exact_div(const GaussianInt& divisor) const {
  BigInt n = divisor.norm_sq();
  if (n.is_zero()) throw std::domain_error("GaussianInt: division by zero");
  // x / y = x * conj(y) / |y|^2
  GaussianInt num = *this * divisor.conj();
  BigInt qr, rr, qi, ri;
  boost::multiprecision::divide_qr(num.re_, n, qr, rr);
  boost::multiprecision::divide_qr(num.im_, n, qi, ri);
  if (!rr.is_zero() || !ri.is_zero()) {
    throw std::domain_error("GaussianInt: inexact division " + to_string() + " / " +
                            divisor.to_string());
  }
  return {std::move(qr), std::move(qi)};
}

std::string GaussianInt::to_string() const {
  if (im_.is_zero()) return re_.str();
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = im_.str() + "i";
  }
  if (re_.is_zero()) return imag;
  if (imag[0] != '-') imag = "+" + imag;
  return re_.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianInt& z) { return os << z.to_string(); }

BigInt pow2(unsigned k) {
  BigInt r = 1;
  r <<= k;
  return r;
}

}  // namespace mixedgraph
