#ifndef YBWB_TRIPLES_HPP
#define YBWB_TRIPLES_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ybwb/tensor.hpp"

namespace ybwb {

/// Positive root of sl(n) spanning simple roots a..b-1; root vector
/// e_ab, opposite root vector e_ba.
struct PositiveRoot {
  int a = 0, b = 0;  // 1 <= a < b <= n
};

/// A triple (Pi1, Pi2, T) over simple-root indices {1,..,n-1}. Validity
/// is a checked predicate, not a construction invariant.
struct Triple {
  int n = 0;
  std::set<int> pi1;
  std::set<int> pi2;
  std::map<int, int> T;  // bijection pi1 -> pi2

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleReport {
  bool valid = false;
  std::vector<std::string> violations;
};

/// Checks the structural constraints, preservation of the A_{n-1}
/// Cartan pairing (adjacency both ways), and nilpotency of T (every
/// element eventually leaves pi1 under iteration).
TripleReport validate_triple(const Triple& t);

/// The generalized Cremmer-Gervais triple: pi1 omits n-i, pi2 omits i,
/// T(j) = j+i mod n. Throws if gcd(i,n) != 1.
Triple cg_triple(int n, int i);

/// Brute-force enumeration of all valid triples whose pi1 omits exactly
/// one simple root. Guarded by max n (default 9, raised by
/// YBWB_GUARD_N).
std::vector<Triple> enumerate_one_omitted(int n);

/// gamma = sum_{a<b} e_ab /\ e_ba.
QTensor2 gamma_term(int n);

/// Closed-form beta for the generalized Cremmer-Gervais triple:
/// sum_{p<q} b_pq e_pp /\ e_qq with b_pq = (n-2s)/n where q-p = s*i
/// mod n.
QTensor2 beta_cg(int n, int i);

struct BetaSolution {
  QTensor2 particular;
  std::vector<QTensor2> nullspace;
};

/// Solves the defining linear system for beta in h /\ h: for every pi
/// in pi1, (1 (x) (T(pi) - pi)) beta = (h_T(pi) + h_pi)/2, together with
/// the trace conditions that keep beta inside sl /\ sl.
BetaSolution solve_beta(const Triple& t);

/// Checks the defining equation of beta for one simple root pi in pi1.
bool beta_equation_holds(const QTensor2& beta, int n, int pi, int t_pi);

/// alpha = 2 sum_{pi < rho} x_pi /\ x_{-rho}, iterating T over the
/// positive roots with all simple constituents in pi1. Root vectors of
/// composite roots are taken with unit coefficients, which is exact for
/// maps preserving the order within each segment (every one-omitted
/// triple is of this kind); maps reversing a segment would need signed
/// root-vector lifts and are caught by assemble_r's postcondition.
QTensor2 alpha_term(const Triple& t);

/// gamma + beta + alpha; the result is asserted to satisfy the modified
/// equation (a failure signals a construction bug or an order-reversing
/// segment map, see alpha_term).
QTensor2 assemble_r(const Triple& t, const QTensor2& beta);

/// Closed form of the Cremmer-Gervais solution (i = 1) for any n >= 2.
QTensor2 r_cg_closed(int n);

/// Reads guard overrides from YBWB_GUARD_N.
int guard_limit(int default_limit);

}  // namespace ybwb

#endif
