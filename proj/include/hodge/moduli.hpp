#pragma once

#include "hodge/report.hpp"
#include "hodge/strata.hpp"

namespace hodge {

/// beta(n, d, k) = n^2(g-1) + 1 - k(k - d + n(g-1)), the dimension of
/// G_L(n, d, k). Accepts k = 0 (the bare moduli-space dimension) for tests.
long long beta_dim(int n, int d, int k, int g);
long long beta_dim(const ModuliParams& p);

/// Non-emptiness of G_L(n, d, k): d > 0, k <= n + (d-n)/g in exact rational
/// arithmetic, and (n, d, k) != (n, n, n).
bool is_nonempty(const ModuliParams& p);

/// Closed formula for gcd(2, d) = 1: the rank-2 odd moduli polynomial times
/// the Grassmannian factor, assembled in the displayed division form and
/// cross-checked against the product form.
BiPoly hd_GL_coprime(const ModuliParams& p);

/// Verbatim transcription of the closed non-coprime formula, by parity of k.
/// Kept distinct from the strata sum so the two can be diffed.
BiPoly hd_GL_noncoprime_closed(const ModuliParams& p);

/// Dispatch: d odd goes through the coprime closed form, d even through the
/// strata sum (the authoritative path).
BiPoly hd_GL(const ModuliParams& p);

/// diag(hd_GL). `genuine` records whether gcd(n, d, k) = 1; when it is not,
/// the output is only the virtual Poincare polynomial.
struct PoincarePoly {
    UniPoly poly;
    bool genuine = false;
};
PoincarePoly poincare_GL(const ModuliParams& p);

/// Term-level diff of the closed non-coprime formula against the strata sum.
/// Requires n - k = 2 and d even. Failures are data, not errors.
CheckReport compare_closed_vs_sum(const ModuliParams& p);

} // namespace hodge
