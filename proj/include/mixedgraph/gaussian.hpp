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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixedgraph {

using BigInt = boost::multiprecision::cpp_int;

// Element a + bi of Z[i] with arbitrary-precision parts.
class GaussianInt {
 public:
  GaussianInt() = default;
  GaussianInt(std::int64_t re, std::int64_t im = 0) : re_(re), im_(im) {}
  GaussianInt(BigInt re, BigInt im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianInt i() { return {0, 1}; }
  // i^k for any integer k.
  static GaussianInt unit_power(std::int64_t k);

  const BigInt& re() const { return re_; }
  const BigInt& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianInt conj() const { return {re_, -im_}; }
  BigInt norm_sq() const { return re_ * re_ + im_ * im_; }

  GaussianInt& operator+=(const GaussianInt& o);
  GaussianInt& operator-=(const GaussianInt& o);
  GaussianInt& operator*=(const GaussianInt& o);

  friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
  friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
  friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
  friend GaussianInt operator-(const GaussianInt& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // Quotient when `divisor` divides *this exactly in Z[i]; throws
  // std::domain_error otherwise (including division by zero).
  GaussianInt exact_div(const GaussianInt& divisor) const;

  // "3", "-i", "2+3i", "1-i".
  std::string to_string() const;

 private:
  BigInt re_;
  BigInt im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& z);

// 2^k as a BigInt.
BigInt pow2(unsigned k);

}  // namespace mixedgraph
