#ifndef YBWB_STRINGS_HPP
#define YBWB_STRINGS_HPP

#include <vector>

#include "ybwb/boundary.hpp"

namespace ybwb {

/// The string combinatorics of (n,i) with gcd(i,n) = 1: the sequence
/// i, 2i, ..., (n-1)i reduced mod n, split into maximal increasing
/// runs, with the raising/lowering elements they generate.
struct StringData {
  int n = 0, i = 0;
  std::vector<int> order;                  // length n-1
  std::vector<std::vector<int>> strings;   // exactly i runs
  std::vector<QMatrix> e_of_s;             // for strings 1..i-1
  std::vector<QMatrix> eprime_of_s;        // for strings 2..i
  Subalgebra l_plus, l_minus, l, l_zero;
  Subalgebra radical;
  MatSpan radical_plus, radical_minus;
};

StringData strings(int n, int i);

/// X = sum_{j=1}^{n-i} floor((n-j)/i) e_{j,j+i}.
QMatrix conj61_generator(int n, int i);

/// Descriptive checker for the string conjecture: the ad-relations of X
/// on the string algebra, abelianness of the radical, and the orbit
/// step in both the constant-z and t-scaled-z readings. Nothing is
/// asserted; every outcome lands in the report.
Report conj61_check(int n, int i, std::uint64_t seed);

}  // namespace ybwb

#endif
