#include "coxfold/surd.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "coxfold/errors.hpp"

namespace coxfold {

namespace {

constexpr std::array<int, Surd::kDimension> kRadicands = {1, 2, 3, 6, 5, 10, 15, 30};

// Print order 1, √2, √3, √5, √6, √10, √15, √30 expressed as masks.
constexpr std::array<int, Surd::kDimension> kPrintOrder = {0, 1, 2, 4, 3, 5, 6, 7};

const Rational& zero_rational() {
  static const Rational zero(0);
  return zero;
}

int popcount_parity(int x) { return __builtin_popcount(static_cast<unsigned>(x)) & 1; }

// Interval [lo, lo + 1/scale] around √n.
std::pair<Rational, Rational> sqrt_bracket(int n, const mpz_class& scale) {
  mpz_class target = scale * scale * n;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), target.get_mpz_t());
  Rational lo(root, scale);
  lo.canonicalize();
  Rational hi(root + 1, scale);
  hi.canonicalize();
  return {lo, hi};
}

}  // namespace

Surd::Surd(const Surd& other) : rational_(other.rational_) {
  if (other.surds_) surds_ = std::make_unique<Irrational>(*other.surds_);
}

Surd& Surd::operator=(const Surd& other) {
  if (this == &other) return *this;
  rational_ = other.rational_;
  if (other.surds_) {
    if (surds_)
      *surds_ = *other.surds_;
    else
      surds_ = std::make_unique<Irrational>(*other.surds_);
  } else {
    surds_.reset();
  }
  return *this;
}

int Surd::radicand(int mask) { return kRadicands.at(static_cast<size_t>(mask)); }

Surd Surd::radical(int n) {
  for (int mask = 0; mask < kDimension; ++mask) {
    if (kRadicands[static_cast<size_t>(mask)] == n) {
      std::array<Rational, kDimension> coords;
      coords[static_cast<size_t>(mask)] = 1;
      return from_masked(coords);
    }
  }
  throw Error("radical: " + std::to_string(n) + " is not a squarefree divisor of 30");
}

Surd Surd::from_masked(const std::array<Rational, kDimension>& coords) {
  Surd out(coords[0]);
  out.surds_ = std::make_unique<Irrational>();
  for (int mask = 1; mask < kDimension; ++mask)
    (*out.surds_)[static_cast<size_t>(mask - 1)] = coords[static_cast<size_t>(mask)];
  out.normalize();
  return out;
}

const Rational& Surd::coefficient(int mask) const {
  if (mask == 0) return rational_;
  if (!surds_) return zero_rational();
  return (*surds_)[static_cast<size_t>(mask - 1)];
}

std::array<Rational, Surd::kDimension> Surd::masked_coordinates() const {
  std::array<Rational, kDimension> coords;
  coords[0] = rational_;
  if (surds_)
    for (int mask = 1; mask < kDimension; ++mask)
      coords[static_cast<size_t>(mask)] = (*surds_)[static_cast<size_t>(mask - 1)];
  return coords;
}

void Surd::normalize() {
  if (!surds_) return;
  for (const Rational& q : *surds_)
    if (sgn(q) != 0) return;
  surds_.reset();
}

Surd& Surd::operator+=(const Surd& other) {
  rational_ += other.rational_;
  if (other.surds_) {
    if (!surds_) surds_ = std::make_unique<Irrational>();
    for (size_t i = 0; i < surds_->size(); ++i) (*surds_)[i] += (*other.surds_)[i];
    normalize();
  }
  return *this;
}

Surd& Surd::operator-=(const Surd& other) {
  rational_ -= other.rational_;
  if (other.surds_) {
    if (!surds_) surds_ = std::make_unique<Irrational>();
    for (size_t i = 0; i < surds_->size(); ++i) (*surds_)[i] -= (*other.surds_)[i];
    normalize();
  }
  return *this;
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.is_rational() && b.is_rational()) return Surd(Rational(a.rational_ * b.rational_));
  if (a.is_rational() || b.is_rational()) {
    const Surd& scalar = a.is_rational() ? a : b;
    Surd out = a.is_rational() ? b : a;
    out.rational_ *= scalar.rational_;
    for (Rational& q : *out.surds_) q *= scalar.rational_;
    out.normalize();
    return out;
  }
  const auto x = a.masked_coordinates();
  const auto y = b.masked_coordinates();
  std::array<Rational, Surd::kDimension> product;
  for (int i = 0; i < Surd::kDimension; ++i) {
    if (sgn(x[static_cast<size_t>(i)]) == 0) continue;
    for (int j = 0; j < Surd::kDimension; ++j) {
      if (sgn(y[static_cast<size_t>(j)]) == 0) continue;
      product[static_cast<size_t>(i ^ j)] +=
          x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] * Surd::radicand(i & j);
    }
  }
  return Surd::from_masked(product);
}

Surd& Surd::operator*=(const Surd& other) {
  *this = *this * other;
  return *this;
}

Surd operator-(const Surd& a) {
  Surd out(a);
  out.rational_ = -out.rational_;
  if (out.surds_)
    for (Rational& q : *out.surds_) q = -q;
  return out;
}

bool operator==(const Surd& a, const Surd& b) {
  if (a.rational_ != b.rational_) return false;
  if (!a.surds_ || !b.surds_) return !a.surds_ && !b.surds_;
  return *a.surds_ == *b.surds_;
}

std::strong_ordering Surd::lex_compare(const Surd& a, const Surd& b) {
  for (int mask = 0; mask < kDimension; ++mask) {
    const int c = cmp(a.coefficient(mask), b.coefficient(mask));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Surd Surd::conjugate(int flip) const {
  Surd out(*this);
  if (out.surds_)
    for (int mask = 1; mask < kDimension; ++mask)
      if (popcount_parity(mask & flip)) {
        Rational& q = (*out.surds_)[static_cast<size_t>(mask - 1)];
        q = -q;
      }
  return out;
}

Surd Surd::inverse() const {
  if (is_zero()) throw Error("Surd::inverse: division by zero");
  if (is_rational()) return Surd(Rational(1 / rational_));
  // Multiplying by the conjugate over each prime in turn clears that prime; after
  // three rounds the running product is rational.
  Surd numerator(1);
  Surd running(*this);
  for (int prime_bit : {1, 2, 4}) {
    Surd c = running.conjugate(prime_bit);
    numerator *= c;
    running *= c;
  }
  if (!running.is_rational())
    throw InvariantViolation("Surd::inverse: norm is not rational");
  numerator *= Surd(Rational(1 / running.rational_));
  return numerator;
}

Surd& Surd::operator/=(const Surd& other) {
  *this = *this * other.inverse();
  return *this;
}

std::pair<Rational, Rational> Surd::enclosure(const mpz_class& scale) const {
  Rational lo = rational_;
  Rational hi = rational_;
  if (surds_) {
    for (int mask = 1; mask < kDimension; ++mask) {
      const Rational& c = (*surds_)[static_cast<size_t>(mask - 1)];
      if (sgn(c) == 0) continue;
      auto [r_lo, r_hi] = sqrt_bracket(radicand(mask), scale);
      if (sgn(c) > 0) {
        lo += c * r_lo;
        hi += c * r_hi;
      } else {
        lo += c * r_hi;
        hi += c * r_lo;
      }
    }
  }
  return {lo, hi};
}

Sign Surd::sign() const {
  if (!surds_) {
    const int s = sgn(rational_);
    return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero);
  }
  // Uniformly signed coordinates decide immediately.
  bool any_pos = sgn(rational_) > 0;
  bool any_neg = sgn(rational_) < 0;
  for (const Rational& q : *surds_) {
    any_pos |= sgn(q) > 0;
    any_neg |= sgn(q) < 0;
  }
  if (any_pos && !any_neg) return Sign::positive;
  if (any_neg && !any_pos) return Sign::negative;
  // Nonzero here (normalized, mixed signs), so the loop terminates: the enclosure
  // shrinks geometrically around a value bounded away from zero.
  mpz_class scale = 1000;
  for (;;) {
    auto [lo, hi] = enclosure(scale);
    if (sgn(lo) > 0) return Sign::positive;
    if (sgn(hi) < 0) return Sign::negative;
    scale *= 2;
  }
}

double Surd::to_double() const {
  double value = rational_.get_d();
  if (surds_)
    for (int mask = 1; mask < kDimension; ++mask)
      value += (*surds_)[static_cast<size_t>(mask - 1)].get_d() *
               std::sqrt(static_cast<double>(radicand(mask)));
  return value;
}

std::string Surd::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int mask : kPrintOrder) {
    const Rational& c = coefficient(mask);
    if (sgn(c) == 0) continue;
    Rational magnitude = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mask == 0) {
      os << magnitude.get_str();
    } else {
      if (magnitude != 1) os << magnitude.get_str();
      os << "√" << radicand(mask);
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.to_string(); }

}  // namespace coxfold
