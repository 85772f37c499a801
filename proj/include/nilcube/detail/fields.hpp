#pragma once

// Field policies used by the elimination kernels. Values are plain
// std::uint32_t residues or mpq_class rationals so that the hot loops never
// go through Scalar.

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>

#include "nilcube/coeffs.hpp"

namespace nilcube::detail {

struct PrimeField {
  using value_type = std::uint32_t;

  std::uint32_t p;

  explicit PrimeField(std::uint32_t modulus) : p(modulus) {}

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  [[nodiscard]] bool is_zero(value_type a) const { return a == 0; }
  [[nodiscard]] value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  [[nodiscard]] value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p - b);
  }
  [[nodiscard]] value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  [[nodiscard]] value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p);
  }
  // a - c*b
  void submul(value_type& a, value_type c, value_type b) const {
    a = sub(a, mul(c, b));
  }
  [[nodiscard]] value_type inv(value_type a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    // Extended Euclid on signed 64-bit values.
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<value_type>(t);
  }
  // Every residue inversion is harmless; only rational runs track the flag.
  [[nodiscard]] bool ring_inverse(value_type) const { return true; }
  [[nodiscard]] Scalar to_scalar(value_type a) const {
    return Scalar(FieldSpec(p), static_cast<long>(a));
  }
  [[nodiscard]] value_type from_scalar(const Scalar& s) const {
    return s.residue();
  }
};

struct RationalField {
  using value_type = mpq_class;

  [[nodiscard]] value_type zero() const { return 0; }
  [[nodiscard]] value_type one() const { return 1; }
  [[nodiscard]] value_type from_int(long long v) const {
    return mpq_class(mpz_class(static_cast<long>(v)));
  }
  [[nodiscard]] bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  [[nodiscard]] value_type add(const value_type& a, const value_type& b) const {
    return a + b;
  }
  [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const {
    return a - b;
  }
  [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
  [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const {
    return a * b;
  }
  void submul(value_type& a, const value_type& c, const value_type& b) const {
    a -= c * b;
  }
  [[nodiscard]] value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw std::domain_error("division by zero in Q");
    return 1 / a;
  }
  // True when 1/a stays inside Z[1/2, 1/3].
  [[nodiscard]] bool ring_inverse(const value_type& a) const {
    mpz_class n = abs(a.get_num());
    while (n % 2 == 0) n /= 2;
    while (n % 3 == 0) n /= 3;
    return n == 1;
  }
  [[nodiscard]] Scalar to_scalar(const value_type& a) const {
    return Scalar(FieldSpec(0), a);
  }
  [[nodiscard]] value_type from_scalar(const Scalar& s) const {
    return s.rational();
  }
};

}  // namespace nilcube::detail
