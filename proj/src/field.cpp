#include "malcev/field.hpp"

namespace malcev {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  for (std::uint64_t d = 11; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, b, p);
    b = mulmod_u64(b, b, p);
    e >>= 1;
  }
  return acc;
}

Field Field::gf(std::uint64_t p) {
  if (p == 2 || p == 3) throw BadFieldChar(p);
  if (p >= (1ull << 31))
    throw FieldNotAllowed("prime too large (must fit in 31 bits)");
  if (!is_prime_u64(p)) throw FieldNotAllowed(std::to_string(p) + " is not prime");
  return Field(p);
}

Scalar Scalar::zero(const Field& f) {
  if (f.is_rational()) return Scalar(mpq_class(0));
  return Scalar(ModP{0, f.prime()});
}

Scalar Scalar::one(const Field& f) {
  if (f.is_rational()) return Scalar(mpq_class(1));
  return Scalar(ModP{1, f.prime()});
}

Scalar Scalar::of_int(const Field& f, long long n) {
  if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(n)));
  const std::uint64_t p = f.prime();
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return Scalar(ModP{static_cast<std::uint64_t>(r), p});
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(std::move(c));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::modp(std::uint64_t r, std::uint64_t p) {
  Field f = Field::gf(p);
  return Scalar(ModP{r % p, f.prime()});
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  const auto slash = text.find('/');
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw Error("bad rational literal '" + text + "'");
    if (slash != std::string::npos && mpq_class(q.get_den()) == 0)
      throw DivisionByZero();
    q.canonicalize();
    return Scalar(std::move(q));
  }
  if (slash != std::string::npos)
    throw Error("fractional literal '" + text + "' not allowed over " + f.str());
  mpz_class z;
  if (z.set_str(text, 10) != 0) throw Error("bad integer literal '" + text + "'");
  mpz_class r = z % static_cast<unsigned long>(f.prime());
  if (r < 0) r += static_cast<unsigned long>(f.prime());
  return Scalar(ModP{r.get_ui(), f.prime()});
}

Field Scalar::field() const {
  if (std::holds_alternative<mpq_class>(v_)) return Field::rationals();
  return Field::gf(std::get<ModP>(v_).p);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 0;
  return std::get<ModP>(v_).r == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
  return std::get<ModP>(v_).r == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (v_.index() != o.v_.index()) throw FieldMismatch();
  if (auto* m = std::get_if<ModP>(&v_)) {
    if (m->p != std::get<ModP>(o.v_).p) throw FieldMismatch();
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_))
    return Scalar(mpq_class(*q + std::get<mpq_class>(o.v_)));
  const ModP a = std::get<ModP>(v_), b = std::get<ModP>(o.v_);
  std::uint64_t s = a.r + b.r;
  if (s >= a.p) s -= a.p;
  return Scalar(ModP{s, a.p});
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_))
    return Scalar(mpq_class(*q - std::get<mpq_class>(o.v_)));
  const ModP a = std::get<ModP>(v_), b = std::get<ModP>(o.v_);
  return Scalar(ModP{a.r >= b.r ? a.r - b.r : a.r + a.p - b.r, a.p});
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (auto* q = std::get_if<mpq_class>(&v_))
    return Scalar(mpq_class(*q * std::get<mpq_class>(o.v_)));
  const ModP a = std::get<ModP>(v_), b = std::get<ModP>(o.v_);
  return Scalar(ModP{mulmod_u64(a.r, b.r, a.p), a.p});
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(-*q));
  const ModP a = std::get<ModP>(v_);
  return Scalar(ModP{a.r == 0 ? 0 : a.p - a.r, a.p});
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (auto* q = std::get_if<mpq_class>(&v_)) return Scalar(mpq_class(1 / *q));
  const ModP a = std::get<ModP>(v_);
  return Scalar(ModP{powmod_u64(a.r, a.p - 2, a.p), a.p});
}

bool Scalar::operator==(const Scalar& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q == std::get<mpq_class>(o.v_);
  return std::get<ModP>(v_) == std::get<ModP>(o.v_);
}

std::string Scalar::str() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  const ModP a = std::get<ModP>(v_);
  return std::to_string(a.r) + " mod " + std::to_string(a.p);
}

std::string Scalar::literal() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
  return std::to_string(std::get<ModP>(v_).r);
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (auto* q = std::get_if<mpq_class>(&a.v_)) {
    return mpq_cmp(q->get_mpq_t(), std::get<mpq_class>(b.v_).get_mpq_t());
  }
  const std::uint64_t x = std::get<ModP>(a.v_).r, y = std::get<ModP>(b.v_).r;
  return x < y ? -1 : (x > y ? 1 : 0);
}

}  // namespace malcev
