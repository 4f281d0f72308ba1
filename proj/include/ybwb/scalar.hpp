#ifndef YBWB_SCALAR_HPP
#define YBWB_SCALAR_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ybwb {

/// Exact rational scalar. GMP keeps values canonical (lowest terms,
/// positive denominator), which is what every golden-value comparison
/// in this project relies on.
using Scalar = mpq_class;

inline Scalar rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

/// Parses "num", "-num" or "num/den". Throws on malformed input.
Scalar parse_rational(const std::string& s);

/// Canonical form: "num" or "num/den" with den > 1.
std::string to_string(const Scalar& x);

/// Polynomial in a formal parameter t with rational coefficients,
/// indexed by degree. Trailing zero coefficients are stripped; the zero
/// polynomial has degree -1.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(const Scalar& c) {
    if (!ybwb::is_zero(c)) coeffs_.push_back(c);
  }
  TPoly(std::initializer_list<Scalar> cs) : coeffs_(cs) { normalize(); }

  static TPoly t(int degree = 1, const Scalar& c = Scalar(1)) {
    TPoly p;
    if (ybwb::is_zero(c) || degree < 0) return p;
    p.coeffs_.assign(static_cast<size_t>(degree) + 1, Scalar(0));
    p.coeffs_.back() = c;
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Scalar(0);
    return coeffs_[static_cast<size_t>(d)];
  }

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  TPoly operator-() const;
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(const TPoly& a, const Scalar& c);
  friend TPoly operator*(const Scalar& c, const TPoly& a) { return a * c; }
  /// Exact division by a nonzero rational; used by the factorials in the
  /// nilpotent exponential.
  friend TPoly operator/(const TPoly& a, const Scalar& c);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }

 private:
  void normalize() {
    while (!coeffs_.empty() && ybwb::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

inline bool is_zero(const TPoly& p) { return p.is_zero(); }

std::string to_string(const TPoly& p);

/// Converts a rational constant into ring R (R = Scalar or TPoly).
template <class R>
R from_rational(const Scalar& c);

template <>
inline Scalar from_rational<Scalar>(const Scalar& c) { return c; }
template <>
inline TPoly from_rational<TPoly>(const Scalar& c) { return TPoly(c); }

/// Deterministic generator of small-height nonzero rationals for
/// randomized identity checks and Frobenius probing.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : rng_(seed) {}

  Scalar nonzero(int max_height = 9) {
    long num = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(max_height));
    long den = 1 + static_cast<long>(rng_() % static_cast<std::uint64_t>(max_height));
    if (rng_() % 2) num = -num;
    return rational(num, den);
  }
  Scalar any(int max_height = 9) {
    if (rng_() % 4 == 0) return Scalar(0);
    return nonzero(max_height);
  }
  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ybwb

#endif
