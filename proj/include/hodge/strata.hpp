#pragma once

#include "hodge/params.hpp"
#include "hodge/spaces.hpp"

namespace hodge {

enum class StratumLabel { W1, WEPlusWEPrime, WSE, WSEPrime, GeneralE };

/// Identifies one stratum of the n-k = 2 stratification, or a general
/// type-(n1, n-k-n1) stratum with its degree split.
struct StratumSpec {
    StratumLabel label = StratumLabel::W1;
    int n1 = 0; // GeneralE only
    int d1 = 0; // GeneralE only

    /// For GeneralE: 0 < n1 < n-k, n1 != (n-k)/2 and equal slopes
    /// d1/n1 = (d-d1)/(n-k-n1). Throws SlopeMismatch / PreconditionError.
    void validate(const ModuliParams& p) const;
};

/// Open stratum: Grassmann fibration over the stable rank-2 moduli space.
/// gauss(k, d+2(g-1)) times hd_m2_odd(g) or hd_m2_even(g) by parity of d.
BiPoly hd_w1(const ModuliParams& p);

/// Sum of the two nonsplit strata. Both fiber over a space of nonsplit
/// line-bundle extensions with fiber the Grassmannian complement of the
/// Schubert strata from mu >= ceil(k/2); the equal-summand stratum carries a
/// residual unipotent automorphism of the quotient bundle, which reduces its
/// fiber by one affine factor:
///   (J^2 - J) P^{g-2} (gauss - Sigma)  +  J P^{g-1} (gauss - Sigma)/t.
BiPoly hd_wE_plus_wEprime(const ModuliParams& p);

/// Split stratum with nonisomorphic summands. Unordered pairs of line
/// bundles split into a plain sector and a pair-swap twisted sector, and the
/// residual torus of the split bundle acts freely on the good locus:
///   (1/2) [ (J^2 - J) (gauss - 2 Sigma [+ gr^2]) / (t - 1)
///         + (T - J)   (gauss [- gr(t^2)]) / (1 + t) ],
/// with T = J(-u^2, -v^2) and gr = gauss(k/2, j) for k even.
BiPoly hd_wSE(const ModuliParams& p);

/// Split stratum with both summands equal: a fibration over the Jacobian
/// whose fiber is the locus of admissible k-planes modulo the residual
/// PGL_2 of the rank-2 trivial-type bundle. Closed forms are implemented
/// for k = 1 and k = 2j-1 (the fiber is Gr(2, j)) and for even k with
/// j = 2 (the fiber is empty); other shapes throw NotApplicable.
BiPoly hd_wSEprime(const ModuliParams& p);

/// Disjoint-union sum of the strata: d odd leaves only the open stratum.
BiPoly hd_strata_sum(const ModuliParams& p);

/// Hodge-Poincare polynomial of a general type-(n1, n-k-n1) stratum.
/// hpM1, hpM2 are the caller-supplied HP polynomials of M(n1, d1) and
/// M(n-k-n1, d-d1). Throws SlopeMismatch when d1(n-k-n1) != (d-d1) n1.
BiPoly hp_stratum_general(int n, int d, int k, int g, int n1, int d1,
                          const BiPoly& hpM1, const BiPoly& hpM2);

/// The bracketed Grassmannian-complement factor of the general stratum
/// formula, exposed for the duality cross-check: gauss(k, N) minus the
/// dualized strata with the threshold mu >= ceil(k(1 - n1/(n-k))).
BiPoly hp_schubert_complement_dualized(int k, int N, int j, int mu_min);

/// ceil(k * (nk - n1) / nk) as exact integer arithmetic; the boundary value
/// is included since the defining condition is >=.
int mu_threshold_general(int k, int nk, int n1);

/// Substitute t -> t^2 in a pure-t polynomial (the trace of the swap on a
/// product of two copies of a cohomologically even space).
BiPoly pure_t_square(const BiPoly& p);

} // namespace hodge
