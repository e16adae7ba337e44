#ifndef MALCEV_FIELD_HPP
#define MALCEV_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "malcev/errors.hpp"

namespace malcev {

/// Field descriptor: the rationals, or a prime field GF(p) with p >= 5.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field gf(std::uint64_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t prime() const { return p_; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const {
    return is_rational() ? "rational" : "gf " + std::to_string(p_);
  }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;  // 0 encodes the rationals
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element: arbitrary-precision rational or residue mod p.
/// Rationals are kept canonical (lowest terms, positive denominator) by GMP.
class Scalar {
 public:
  struct ModP {
    std::uint64_t r;
    std::uint64_t p;
    bool operator==(const ModP& o) const { return r == o.r && p == o.p; }
  };

  Scalar() : v_(mpq_class(0)) {}
  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of_int(const Field& f, long long n);
  static Scalar rational(const mpq_class& q);
  static Scalar rational(long num, long den);
  static Scalar modp(std::uint64_t r, std::uint64_t p);

  /// Parses "n", "-n" or "n/d" in the given field (integers only over GF(p)).
  static Scalar parse(const Field& f, const std::string& text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  Scalar operator/(const Scalar& o) const { return *this * o.inv(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const mpq_class& rat() const { return std::get<mpq_class>(v_); }
  std::uint64_t residue() const { return std::get<ModP>(v_).r; }

  /// "2/3", "-1", or "4 mod 7".
  std::string str() const;
  /// Bare literal without the field suffix ("2/3", "4").
  std::string literal() const;

  /// Total order used for reproducible canonical representatives.
  static int cmp(const Scalar& a, const Scalar& b);

 private:
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(ModP m) : v_(m) {}
  void check_same(const Scalar& o) const;

  std::variant<mpq_class, ModP> v_;
};

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p);

}  // namespace malcev

#endif
