#include "ybwb/scalar.hpp"

#include <cctype>

namespace ybwb {

Scalar parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
              (c == '-' && (i == 0 || s[i - 1] == '/'));
    if (!ok) throw std::invalid_argument("parse_rational: bad character in '" + s + "'");
  }
  Scalar q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) { return x.get_str(); }

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (is_zero(a.coeffs_[i])) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

TPoly operator*(const TPoly& a, const Scalar& c) {
  TPoly r;
  if (is_zero(c)) return r;
  r.coeffs_.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) r.coeffs_.push_back(x * c);
  r.normalize();
  return r;
}

TPoly operator/(const TPoly& a, const Scalar& c) {
  if (is_zero(c)) throw std::domain_error("TPoly: division by zero");
  TPoly r;
  r.coeffs_.reserve(a.coeffs_.size());
  for (const auto& x : a.coeffs_) r.coeffs_.push_back(x / c);
  return r;
}

std::string to_string(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    Scalar c = p.coeff(d);
    if (is_zero(c)) continue;
    if (!out.empty()) out += sgn(c) > 0 ? " + " : " - ";
    else if (sgn(c) < 0) out += "-";
    Scalar a = abs(c);
    if (d == 0) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += d == 1 ? "t" : "t^" + std::to_string(d);
    }
  }
  return out;
}

}  // namespace ybwb
