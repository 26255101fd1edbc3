#pragma once

#include "hodge/bipoly.hpp"

namespace hodge {

/// Parameters of one determinantal (Schubert) stratum inside Gr(k, N):
/// the k-planes meeting a fixed j-dimensional subspace in dimension mu.
struct SchubertParams {
    int k = 0;
    int N = 0;
    int j = 0;
    int mu = 0;

    /// Throws BadRange unless 0 <= k <= N, 0 <= j <= N and
    /// max(0, k+j-N) <= mu <= min(k, j).
    void validate() const;
};

/// Hodge-Deligne polynomial of affine space C^m: (uv)^m.
BiPoly hd_affine(int m);

/// Hodge-Deligne polynomial of P^n: 1 + uv + ... + (uv)^n.
BiPoly hd_projective(int n);

/// Hodge-Deligne polynomial of Gr(k, N); the Gaussian binomial in t = uv.
BiPoly hd_grassmannian(int k, int N);

/// Hodge-Deligne polynomial of a Jacobian of a genus-g curve:
/// (1+u)^g (1+v)^g, for any degree.
BiPoly hd_jacobian(int g);

/// Hodge-Deligne polynomial of the rank-2 odd-degree moduli space M(2, d):
/// (1+u)^g(1+v)^g ((1+u^2 v)^g (1+u v^2)^g - u^g v^g (1+u)^g (1+v)^g)
///   / ((1-uv)(1-u^2 v^2)).
BiPoly hd_m2_odd(int g);

/// Hodge-Deligne polynomial of the rank-2 even-degree stable moduli M(2, d).
/// Halving happens after the polynomial division so every intermediate
/// stays integral.
BiPoly hd_m2_even(int g);

/// Hodge-Deligne polynomial of the symmetric square (M x M)/(Z/2):
/// (p^2 + p(-u^2, -v^2)) / 2. Caller guarantees p comes from a smooth
/// projective variety.
BiPoly hd_sym2(const BiPoly& p);

/// Hodge-Deligne polynomial of one Schubert stratum:
/// Gr(k-mu, N-j) x Gr(mu, j) fibration with affine fiber C^{(j-mu)(k-mu)}.
BiPoly hd_schubert_stratum(const SchubertParams& sp);

/// gauss(k, N) minus the strata with mu >= mu_min. The empty sum
/// (mu_min > min(k, j)) leaves gauss(k, N) untouched.
/// Requires mu_min >= max(0, k+j-N).
BiPoly hd_schubert_complement(int k, int N, int j, int mu_min);

/// Sum of hd_schubert_stratum(k, N, j, mu) for mu in [mu_min, min(k, j)];
/// zero when the range is empty.
BiPoly schubert_mu_sum(int k, int N, int j, int mu_min);

/// Poincare duality on a smooth variety of complex dimension dim:
/// HP(u, v) = (uv)^dim HD(1/u, 1/v). Throws NonPolynomialResult if the
/// transform leaves the polynomial ring (wrong dimension or bad input).
BiPoly hp_from_hd_smooth(const BiPoly& p, int dim);

/// Inverse of hp_from_hd_smooth (the same transform).
BiPoly hd_from_hp_smooth(const BiPoly& p, int dim);

} // namespace hodge
