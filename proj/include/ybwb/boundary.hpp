#ifndef YBWB_BOUNDARY_HPP
#define YBWB_BOUNDARY_HPP

#include <optional>
#include <set>
#include <vector>

#include "ybwb/report.hpp"
#include "ybwb/tensor.hpp"
#include "ybwb/triples.hpp"

namespace ybwb {

/// exp(A).r split by t-degree. base is the degree-0 part (which equals
/// r only when A has no constant term).
struct OrbitExpansion {
  QTensor2 base;
  std::vector<QTensor2> coefficients;  // degrees 1..m, top coefficient nonzero

  int degree() const { return static_cast<int>(coefficients.size()); }
  const QTensor2& top() const;
};

/// Conjugates r by exp(A) for nilpotent polynomial-entry A and splits
/// the result by t-degree.
OrbitExpansion orbit_expand(const PMatrix& a, const QTensor2& r);

/// Reassembles the polynomial tensor (for invariant checks).
PTensor2 reassemble(const OrbitExpansion& e);

/// Top coefficient of the expansion; the result is asserted to satisfy
/// the classical equation.
QTensor2 extract_boundary(const OrbitExpansion& e);

/// Closed form of the boundary solution attached to the Cremmer-Gervais
/// solution: (sum_p d_p /\ e_{p,p+1})
///   + sum_{i<j} sum_m e_{i,j-m+1} /\ e_{j,i+m}.
QTensor2 b_cg_closed(int n);

/// d_p = ((n-p)/n)(e_11+..+e_pp) - (p/n)(e_{p+1,p+1}+..+e_nn).
QMatrix b_cg_diag(int n, int p);

/// ad of the full raising element E = sum (n-j) e_{j,j+1} maps the
/// Cremmer-Gervais solution onto this multiple of the boundary
/// solution: ad_E(r_cg) = AD_E_R_CG_SCALE * b_cg.
extern const int AD_E_R_CG_SCALE;  // -2, validated in the test suite

/// A linear functional represented by its values on ambient matrix
/// units: f(M) = sum f_uv M_uv.
using Functional = std::map<std::pair<int, int>, Scalar>;

Scalar apply_functional(const Functional& f, const QMatrix& m);

struct CarrierAnalysis {
  Subalgebra carrier;
  Mat r_in_carrier;                     ///< skew coefficient matrix of r in the carrier basis
  Mat cocycle;                          ///< its inverse F
  std::optional<Functional> frobenius;  ///< f with f([x,y]) = F(x,y), if one exists
};

/// Largest subalgebra on which a skew solution is non-degenerate,
/// computed as the span of all single-slot contractions. Asserts
/// bracket closure, r in carrier /\ carrier, invertibility of the
/// restriction, and the 2-cocycle identity of the inverse.
CarrierAnalysis carrier(const QTensor2& r);

/// Does f make (x,y) -> f([x,y]) a non-degenerate form on s?
bool frobenius_witness(const Subalgebra& s, const Functional& f);

/// For solutions with carrier s: checks that f([x,y]) equals
/// lambda * F(x,y) for a single scalar lambda; returns lambda.
std::optional<Scalar> functional_matches_cocycle(const CarrierAnalysis& ca, const Functional& f);

/// Parabolic subalgebra of sl(n): Cartan, all positive root vectors,
/// and the negative root vectors e_ba not crossing an omitted wall.
Subalgebra parabolic(int n, const std::set<int>& omitted);

enum class FrobeniusVerdict { Frobenius, ProbablyNot };

/// Random-functional probe: any non-degenerate sample is a certificate;
/// all-degenerate over `trials` samples yields ProbablyNot.
struct FrobeniusResult {
  FrobeniusVerdict verdict;
  std::optional<Functional> witness;
};
FrobeniusResult frobenius_probe(const Subalgebra& s, int trials, std::uint64_t seed);

/// dim H^2(S; k) by ranks of the Chevalley-Eilenberg differentials.
/// Guarded by basis dimension (default 24, raised by YBWB_GUARD_N).
int lie_h2(const Subalgebra& s);

struct PrincipalSl2 {
  QMatrix e, f, h;
};

/// E = sum (n-j) e_{j,j+1}, F = sigma(E), H = [E,F]; the sl(2) relations
/// are asserted.
PrincipalSl2 principal_sl2(int n);

/// Full verification pipeline for the sl(5), i=2 construction. Records
/// every checked identity; see the individual identity names in the
/// report. `literal_carrier_dim` and `scaled_carrier_dim` expose the two
/// readings of the final orbit step.
struct Sl5Report {
  Report report;
  QTensor2 r2;                    // assembled solution
  QTensor2 omega_literal;         // t-coefficient of exp(tX + eta).r2
  QTensor2 omega_scaled;          // t-coefficient of exp(t(X + eta)).r2
  int literal_carrier_dim = 0;
  int scaled_carrier_dim = 0;
};
Sl5Report sl5_i2_pipeline();

/// Boundary solution family from gamma and a = sum lambda_p
/// e_{p,n-p+1}: the top orbit coefficient, with carrier shape checks.
struct GgsResult {
  QTensor2 boundary;
  Subalgebra carrier_algebra;
  Report report;
};
GgsResult ggs_family(int n, const std::vector<Scalar>& lambdas);

/// Boundary solution of the one-generator construction exp(-t e_1n) on
/// gamma: (e_11 - e_nn) /\ e_1n + 2 sum e_1i /\ e_in.
QTensor2 heisenberg_boundary(int n);

/// Abelian block W = span{e_ij : i <= floor(n/2) < j}; reports
/// dimensions against the component bound (n^2-1) + C(n-1,2) and checks
/// random elements of W /\ W solve the classical equation.
struct WReport {
  int w_dim = 0;
  int wedge_dim = 0;
  int component_bound = 0;
  bool abelian = false;
  bool random_elements_cybe = false;
};
WReport nonboundary_W(int n, int samples = 5, std::uint64_t seed = 1);

}  // namespace ybwb

#endif
