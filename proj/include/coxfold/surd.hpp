#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace coxfold {

using Rational = mpq_class;

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact element of the field Q(√2, √3, √5).
///
/// Coordinates live in the basis {√r : r squarefree, r | 30}. Internally a basis
/// element is addressed by a bitmask over the primes (bit 0 = 2, bit 1 = 3, bit 2 = 5),
/// so the product of two basis elements is the XOR of their masks times the radicand
/// of the common bits. Values with no irrational part, the common case for simply
/// laced graphs, carry a single rational and no heap block for the surd part.
class Surd {
 public:
  static constexpr int kDimension = 8;

  Surd() = default;
  Surd(int value) : rational_(value) {}  // NOLINT: implicit so Eigen literals work
  Surd(long value) : rational_(value) {}  // NOLINT
  Surd(const Rational& value) : rational_(value) {}  // NOLINT
  Surd(const Surd& other);
  Surd(Surd&&) noexcept = default;
  Surd& operator=(const Surd& other);
  Surd& operator=(Surd&&) noexcept = default;
  ~Surd() = default;

  /// √n for n in {1, 2, 3, 5, 6, 10, 15, 30}.
  static Surd radical(int n);
  /// Builds a value from coordinates indexed by prime bitmask.
  static Surd from_masked(const std::array<Rational, kDimension>& coords);

  /// Radicand of the basis element with the given bitmask.
  static int radicand(int mask);

  const Rational& coefficient(int mask) const;
  std::array<Rational, kDimension> masked_coordinates() const;

  bool is_zero() const { return !surds_ && sgn(rational_) == 0; }
  bool is_rational() const { return !surds_; }
  const Rational& rational_part() const { return rational_; }

  Sign sign() const;

  /// Image under the field automorphism negating √p for every prime bit in `flip`.
  Surd conjugate(int flip) const;
  Surd inverse() const;

  /// Closed rational interval containing the value; each radical is bracketed to
  /// within 1/`scale`.
  std::pair<Rational, Rational> enclosure(const mpz_class& scale) const;

  /// Approximation for display only; decisions never read it.
  double to_double() const;
  std::string to_string() const;

  Surd& operator+=(const Surd& other);
  Surd& operator-=(const Surd& other);
  Surd& operator*=(const Surd& other);
  Surd& operator/=(const Surd& other);

  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }
  friend Surd operator-(const Surd& a);

  friend bool operator==(const Surd& a, const Surd& b);

  /// Ordering by value (exact sign of the difference).
  friend bool operator<(const Surd& a, const Surd& b) { return (a - b).sign() == Sign::negative; }
  friend bool operator>(const Surd& a, const Surd& b) { return b < a; }
  friend bool operator<=(const Surd& a, const Surd& b) { return !(b < a); }
  friend bool operator>=(const Surd& a, const Surd& b) { return !(a < b); }

  /// Total order on coordinates, used for exact dictionary keys. Not the numeric order.
  static std::strong_ordering lex_compare(const Surd& a, const Surd& b);

 private:
  using Irrational = std::array<Rational, kDimension - 1>;  // masks 1..7

  void normalize();

  Rational rational_;
  std::unique_ptr<Irrational> surds_;
};

std::ostream& operator<<(std::ostream& os, const Surd& x);

inline Sign sign(const Surd& x) { return x.sign(); }

}  // namespace coxfold
