#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace minrank {

inline bool is_prime_u32(std::uint32_t q) {
  if (q < 2) return false;
  for (std::uint32_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Modular inverse by extended Euclid; a must be a nonzero residue mod q.
inline std::uint32_t field_inverse(std::uint32_t q, std::uint32_t a) {
  if (a % q == 0) throw std::domain_error("field_inverse: no inverse of zero");
  std::int64_t r0 = q, r1 = a % q, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t quo = r0 / r1;
    r0 -= quo * r1;
    std::swap(r0, r1);
    t0 -= quo * t1;
    std::swap(t0, t1);
  }
  return static_cast<std::uint32_t>((t0 % q + q) % q);
}

// Prime field GF(q), q <= 2^16, elements stored as canonical residues.
struct GF {
  using Scalar = std::uint32_t;
  static constexpr bool exact = true;

  std::uint32_t q;

  explicit GF(std::uint32_t q_) : q(q_) {
    if (!is_prime_u32(q_)) throw std::invalid_argument("GF: q must be prime");
    if (q_ > (1u << 16)) throw std::invalid_argument("GF: q too large");
  }

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long v) const {
    long r = v % static_cast<long>(q);
    return static_cast<Scalar>(r < 0 ? r + q : r);
  }
  Scalar add(Scalar a, Scalar b) const { return (a + b) % q; }
  Scalar sub(Scalar a, Scalar b) const { return (a + q - b) % q; }
  Scalar mul(Scalar a, Scalar b) const {
    return static_cast<Scalar>(std::uint64_t(a) * b % q);
  }
  Scalar neg(Scalar a) const { return a == 0 ? 0 : q - a; }
  Scalar inv(Scalar a) const { return field_inverse(q, a); }
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  bool is_zero(Scalar a) const { return a == 0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }
  std::string to_string(Scalar a) const { return std::to_string(a); }
  bool operator==(const GF& o) const { return q == o.q; }
};

// Exact rationals backed by GMP; values kept in lowest terms with
// positive denominator (mpq_class canonicalizes).
struct Rationals {
  using Scalar = mpq_class;
  static constexpr bool exact = true;

  Scalar zero() const { return mpq_class(0); }
  Scalar one() const { return mpq_class(1); }
  Scalar from_int(long v) const { return mpq_class(v); }
  Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
  Scalar sub(const Scalar& a, const Scalar& b) const { return a - b; }
  Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
  Scalar neg(const Scalar& a) const { return -a; }
  Scalar inv(const Scalar& a) const {
    if (a == 0) throw std::domain_error("Rationals: no inverse of zero");
    return 1 / a;
  }
  Scalar div(const Scalar& a, const Scalar& b) const { return a / inv_check(b); }
  bool is_zero(const Scalar& a) const { return a == 0; }
  bool eq(const Scalar& a, const Scalar& b) const { return a == b; }
  std::string to_string(const Scalar& a) const { return a.get_str(); }
  bool operator==(const Rationals&) const { return true; }

 private:
  static const Scalar& inv_check(const Scalar& b) {
    if (b == 0) throw std::domain_error("Rationals: division by zero");
    return b;
  }
};

// binary64 floats; only tolerance-based operations are defined on this
// domain, exact elimination rejects it.
struct Reals {
  using Scalar = double;
  static constexpr bool exact = false;

  Scalar zero() const { return 0.0; }
  Scalar one() const { return 1.0; }
  Scalar from_int(long v) const { return static_cast<double>(v); }
  Scalar add(Scalar a, Scalar b) const { return a + b; }
  Scalar sub(Scalar a, Scalar b) const { return a - b; }
  Scalar mul(Scalar a, Scalar b) const { return a * b; }
  Scalar neg(Scalar a) const { return -a; }
  Scalar div(Scalar a, Scalar b) const { return a / b; }
  bool is_zero(Scalar a) const { return a == 0.0; }
  bool eq(Scalar a, Scalar b) const { return a == b; }
  std::string to_string(Scalar a) const { return std::to_string(a); }
  bool operator==(const Reals&) const { return true; }
};

}  // namespace minrank
