#include "trialg/exactlin/scalar.hpp"

#include <charconv>
#include <stdexcept>

#include "trialg/error.hpp"

namespace trialg {
namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce(long long v, std::uint64_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

bool parse_integer(std::string_view text, mpz_class& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p == 2) {
    throw InvalidParameter("characteristic 2 is not supported");
  }
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidParameter("field modulus must be an odd prime below 2^31, got " +
                           std::to_string(p));
  }
  return Field(p);
}

Scalar Field::zero() const { return Scalar(*this, 0); }
Scalar Field::one() const { return Scalar(*this, 1); }
Scalar Field::from_int(long long v) const { return Scalar(*this, v); }

Scalar Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw InvalidParameter("zero denominator");
  return Scalar(*this, num) / Scalar(*this, den);
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  mpz_class num, den = 1;
  bool ok = slash == std::string_view::npos
                ? parse_integer(text, num)
                : parse_integer(text.substr(0, slash), num) &&
                      parse_integer(text.substr(slash + 1), den);
  if (!ok || den == 0) {
    throw InvalidParameter("malformed scalar '" + std::string(text) + "'");
  }
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::from_rational(std::move(q));
  }
  mpz_class pm = static_cast<unsigned long>(p_);
  mpz_class n = num % pm;
  if (n < 0) n += pm;
  mpz_class d = den % pm;
  if (d < 0) d += pm;
  if (d == 0) {
    throw InvalidParameter("denominator vanishes modulo " + std::to_string(p_));
  }
  return Scalar(*this, static_cast<long long>(n.get_ui())) /
         Scalar(*this, static_cast<long long>(d.get_ui()));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(Field field, long long value) : p_(field.characteristic()) {
  if (p_ == 0) {
    q_ = static_cast<long>(value);
  } else {
    v_ = reduce(value, p_);
  }
}

Scalar Scalar::from_rational(mpq_class value) {
  Scalar s;
  s.q_ = std::move(value);
  s.q_.canonicalize();
  return s;
}

Field Scalar::field() const noexcept {
  return Field(p_);
}

bool Scalar::is_zero() const noexcept { return p_ == 0 ? sgn(q_) == 0 : v_ == 0; }

bool Scalar::is_one() const noexcept { return p_ == 0 ? q_ == 1 : v_ == 1; }

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalars from different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (p_ == 0) {
    r.q_ = 1 / q_;
  } else {
    r.v_ = pow_mod(v_, p_ - 2, p_);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ += o.q_;
  } else {
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ -= o.q_;
  } else {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (p_ == 0) {
    q_ *= o.q_;
  } else {
    v_ = v_ * o.v_ % p_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) {
    r.q_ = -q_;
  } else if (v_ != 0) {
    r.v_ = p_ - v_;
  }
  return r;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (p_ == 0) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ += t;
  } else {
    v_ = (v_ + a.v_ * b.v_) % p_;
  }
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  if (p_ == 0) {
    if (sgn(a.q_) == 0 || sgn(b.q_) == 0) return;
    mpq_class t;
    mpq_mul(t.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    q_ -= t;
  } else {
    std::uint64_t t = a.v_ * b.v_ % p_;
    v_ = v_ >= t ? v_ - t : v_ + p_ - t;
  }
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0) throw std::logic_error("rational_value on a prime-field scalar");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (p_ == 0) throw std::logic_error("residue on a rational scalar");
  return v_;
}

std::string Scalar::to_string() const {
  if (p_ != 0) return std::to_string(v_);
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) return false;
  return a.p_ == 0 ? a.q_ == b.q_ : a.v_ == b.v_;
}

}  // namespace trialg
