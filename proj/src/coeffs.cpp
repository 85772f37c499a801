#include "nilcube/coeffs.hpp"

#include <stdexcept>

#include "nilcube/detail/fields.hpp"

namespace nilcube {

bool is_prime(unsigned n) noexcept {
  if (n < 2) return false;
  for (unsigned q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(unsigned p) : p_(p) {
  if (p != 0 && (!is_prime(p) || p >= (1U << 31))) {
    throw std::invalid_argument("characteristic must be 0 or a prime below "
                                "2^31, got " +
                                std::to_string(p));
  }
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = detail::PrimeField(field.characteristic()).from_int(value);
  }
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const detail::PrimeField f(field.characteristic());
  mpz_class p = field.characteristic();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw std::domain_error("denominator vanishes mod p");
  if (num < 0) num += p;
  value_ = f.mul(static_cast<std::uint32_t>(num.get_ui()),
                 f.inv(static_cast<std::uint32_t>(den.get_ui())));
}

Scalar Scalar::parse(FieldSpec field, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw std::invalid_argument("bad scalar '" + text + "'");
  }
  if (q.get_den() == 0) throw std::domain_error("zero denominator");
  q.canonicalize();
  return {field, q};
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw std::logic_error("residue() on a rational");
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw std::logic_error("rational() on a residue");
  return std::get<mpq_class>(value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) {
    return std::to_string(*r);
  }
  return std::get<mpq_class>(value_).get_str();
}

namespace {

void check_same(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw std::invalid_argument("mixed fields: " + a.field().to_string() +
                                " and " + b.field().to_string());
  }
}

}  // namespace

Scalar Scalar::inverse() const {
  if (field_.is_rational()) {
    return {field_, detail::RationalField{}.inv(rational())};
  }
  const detail::PrimeField f(field_.characteristic());
  return {field_, static_cast<long>(f.inv(residue()))};
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return {field_, mpq_class(-rational())};
  const detail::PrimeField f(field_.characteristic());
  return {field_, static_cast<long>(f.neg(residue()))};
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.field().is_rational()) {
    return {a.field(), mpq_class(a.rational() + b.rational())};
  }
  const detail::PrimeField f(a.field().characteristic());
  return {a.field(), static_cast<long>(f.add(a.residue(), b.residue()))};
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.field().is_rational()) {
    return {a.field(), mpq_class(a.rational() - b.rational())};
  }
  const detail::PrimeField f(a.field().characteristic());
  return {a.field(), static_cast<long>(f.sub(a.residue(), b.residue()))};
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (a.field().is_rational()) {
    return {a.field(), mpq_class(a.rational() * b.rational())};
  }
  const detail::PrimeField f(a.field().characteristic());
  return {a.field(), static_cast<long>(f.mul(a.residue(), b.residue()))};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("division by zero");
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::vector<unsigned long> prime_support(const mpz_class& n) {
  std::vector<unsigned long> out;
  mpz_class m = abs(n);
  for (unsigned long q = 2; m > 1; ++q) {
    if (mpz_class(q) * q > m) {
      if (m.fits_ulong_p()) {
        out.push_back(m.get_ui());
      } else {
        throw std::overflow_error("prime factor does not fit in 64 bits");
      }
      break;
    }
    if (m % q == 0) {
      out.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  return out;
}

std::vector<unsigned long> denominator_support(const Scalar& a) {
  if (!a.field().is_rational()) {
    throw std::invalid_argument(
        "denominator_support needs characteristic 0");
  }
  return prime_support(a.rational().get_den());
}

}  // namespace nilcube
