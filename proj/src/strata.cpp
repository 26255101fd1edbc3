#include "hodge/strata.hpp"

#include <sstream>

namespace hodge {

std::string ModuliParams::str() const {
    std::ostringstream s;
    s << "(n=" << n << ", d=" << d << ", k=" << k << ", g=" << g << ")";
    return s.str();
}

void ModuliParams::validate_basic() const {
    if (g < 2) throw PreconditionError("ModuliParams" + str() + ": genus must be >= 2");
    if (k <= 0 || k >= n)
        throw PreconditionError("ModuliParams" + str() + ": need 0 < k < n");
    if (d <= 0) throw PreconditionError("ModuliParams" + str() + ": d > 0 required");
}

void ModuliParams::validate_rank2(bool require_d_even) const {
    validate_basic();
    if (n - k != 2)
        throw PreconditionError("ModuliParams" + str() + ": needs n - k = 2");
    if (require_d_even && d % 2 != 0)
        throw PreconditionError("ModuliParams" + str() + ": needs d even");
}

void StratumSpec::validate(const ModuliParams& p) const {
    if (label == StratumLabel::GeneralE) {
        const int nk = p.n - p.k;
        if (n1 <= 0 || n1 >= nk)
            throw PreconditionError("StratumSpec: need 0 < n1 < n-k");
        if (2 * n1 == nk)
            throw PreconditionError("StratumSpec: n1 = (n-k)/2 not admitted here");
        if (static_cast<long long>(d1) * (nk - n1) !=
            static_cast<long long>(p.d - d1) * n1)
            throw SlopeMismatch("StratumSpec: d1/n1 != (d-d1)/(n-k-n1)");
        return;
    }
    p.validate_rank2(label != StratumLabel::W1);
}

BiPoly pure_t_square(const BiPoly& p) {
    BiPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e.u != e.v) throw NotPureT("pure_t_square: mixed term");
        out.add_term({2 * e.u, 2 * e.v}, c);
    }
    return out;
}

namespace {

int ceil_div(long long a, long long b) {
    // b > 0; works for a of either sign.
    long long q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return static_cast<int>(q);
}

struct Rank2Frame {
    int N;       // h^1(F*) = d + 2(g-1)
    int j;       // h^1 of one line-bundle summand = (g-1) + d/2
    int mu_min;  // ceil(k/2)
    BiPoly jac;  // (1+u)^g (1+v)^g
};

Rank2Frame rank2_frame(const ModuliParams& p) {
    Rank2Frame f;
    f.N = 2 * (p.g - 1) + p.d;
    f.j = (p.g - 1) + p.d / 2;
    f.mu_min = (p.k + 1) / 2;
    f.jac = hd_jacobian(p.g);
    return f;
}

} // namespace

int mu_threshold_general(int k, int nk, int n1) {
    return ceil_div(static_cast<long long>(k) * (nk - n1), nk);
}

BiPoly hd_w1(const ModuliParams& p) {
    p.validate_rank2(false);
    const BiPoly m2 = (p.d % 2 != 0) ? hd_m2_odd(p.g) : hd_m2_even(p.g);
    return gauss(p.k, p.d + 2 * (p.g - 1)) * m2;
}

BiPoly hd_wE_plus_wEprime(const ModuliParams& p) {
    p.validate_rank2(true);
    const auto f = rank2_frame(p);
    // Bases: projective bundles over Jac x Jac minus the diagonal (fiber
    // P^{g-2}) and over Jac (fiber P^{g-1}).
    const BiPoly base_e = (f.jac * f.jac - f.jac) * hd_projective(p.g - 2);
    const BiPoly base_eprime = f.jac * hd_projective(p.g - 1);
    const BiPoly fiber = hd_schubert_complement(p.k, f.N, f.j, f.mu_min);
    // The self-extension bundle keeps a one-parameter unipotent automorphism
    // group; it acts freely on the admissible k-planes, so the fiber of the
    // second stratum is the quotient by one affine line.
    return base_e * fiber + base_eprime * div_exact(fiber, BiPoly::t(1));
}

BiPoly hd_wSE(const ModuliParams& p) {
    p.validate_rank2(true);
    const auto f = rank2_frame(p);
    const BiPoly one(1);
    const BiPoly t1 = BiPoly::t(1);
    const BiPoly jac2 = f.jac * f.jac;
    const BiPoly tw = twist_sym(f.jac); // (1-u^2)^g (1-v^2)^g

    // Plain sector: unordered pairs of distinct summands; inclusion-exclusion
    // on the two determinantal loci, then the free residual torus.
    BiPoly plain_fiber = gauss(p.k, f.N) -
                         Int(2) * schubert_mu_sum(p.k, f.N, f.j, f.mu_min);
    // Twisted sector: the pair-swap form. The swap acts trivially on the
    // Grassmannian cohomology and exchanges the two determinantal loci, so
    // only their intersection survives in the trace; the residual torus
    // becomes the norm-one torus of class 1 + t.
    BiPoly twisted_fiber = gauss(p.k, f.N);
    if (p.k % 2 == 0) {
        const BiPoly half_gr = gauss(p.k / 2, f.j);
        plain_fiber += half_gr * half_gr;
        twisted_fiber -= pure_t_square(half_gr);
    }
    return half_exact((jac2 - f.jac) * div_exact(plain_fiber, t1 - one) +
                      (tw - f.jac) * div_exact(twisted_fiber, one + t1));
}

namespace {

// Admissible k-planes in C^2 (x) W modulo the residual PGL_2 of the
// trivial-type rank-2 bundle. Closed forms cover the shapes the moduli
// grid reaches; the remaining middle cases have no derived form here.
BiPoly wseprime_fiber_quotient(int k, int j) {
    if (k == 1 || k == 2 * j - 1) {
        // k = 1: a line spanned by a nondegenerate pair is a frame of the
        // 2-plane it generates, and frames are a single free orbit, so the
        // quotient is Gr(2, j). k = 2j-1 reduces to k = 1 by orthogonal
        // complement inside C^2 (x) W.
        return gauss(2, j);
    }
    if (k % 2 == 0 && j == 2) {
        // Every k-plane meets the rank-one cone in dimension >= k-1 >= k/2,
        // so no admissible plane exists.
        return BiPoly();
    }
    std::ostringstream msg;
    msg << "hd_wSEprime: no closed form for the PGL2 fiber quotient at (k="
        << k << ", j=" << j << ")";
    throw NotApplicable(msg.str());
}

} // namespace

BiPoly hd_wSEprime(const ModuliParams& p) {
    p.validate_rank2(true);
    const auto f = rank2_frame(p);
    return f.jac * wseprime_fiber_quotient(p.k, f.j);
}

BiPoly hd_strata_sum(const ModuliParams& p) {
    p.validate_rank2(false);
    if (p.d % 2 != 0) return hd_w1(p);
    return hd_w1(p) + hd_wE_plus_wEprime(p) + hd_wSE(p) + hd_wSEprime(p);
}

BiPoly hp_schubert_complement_dualized(int k, int N, int j, int mu_min) {
    if (k < 0 || k > N || j < 0 || j > N)
        throw BadRange("hp_schubert_complement_dualized: need 0 <= k, j <= N");
    if (mu_min < std::max(0, k + j - N))
        throw BadRange("hp_schubert_complement_dualized: mu_min below max(0, k+j-N)");
    BiPoly out = gauss(k, N);
    for (int mu = mu_min; mu <= std::min(k, j); ++mu) {
        out -= BiPoly::t(mu * (N - k - j + mu)) * gauss(k - mu, N - j) * gauss(mu, j);
    }
    return out;
}

BiPoly hp_stratum_general(int n, int d, int k, int g, int n1, int d1,
                          const BiPoly& hpM1, const BiPoly& hpM2) {
    const ModuliParams p{n, d, k, g};
    p.validate_basic();
    const int nk = n - k;
    if (nk < 2) throw PreconditionError("hp_stratum_general: needs n - k >= 2");
    StratumSpec spec{StratumLabel::GeneralE, n1, d1};
    spec.validate(p);

    const int N = d + nk * (g - 1);
    const int j = (d - d1) + (nk - n1) * (g - 1);
    const int thr = mu_threshold_general(k, nk, n1);
    const BiPoly bracket = hp_schubert_complement_dualized(k, N, j, thr);
    return hpM1 * hpM2 * hd_projective(n1 * (nk - n1) * (g - 1) - 1) * bracket;
}

} // namespace hodge
