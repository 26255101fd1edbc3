#include "hodge/spaces.hpp"

#include <sstream>

namespace hodge {

void SchubertParams::validate() const {
    std::ostringstream msg;
    msg << "SchubertParams(k=" << k << ", N=" << N << ", j=" << j
        << ", mu=" << mu << ")";
    if (k < 0 || k > N) throw BadRange(msg.str() + ": need 0 <= k <= N");
    if (j < 0 || j > N) throw BadRange(msg.str() + ": need 0 <= j <= N");
    const int lo = std::max(0, k + j - N);
    const int hi = std::min(k, j);
    if (mu < lo || mu > hi)
        throw BadRange(msg.str() + ": mu outside [max(0,k+j-N), min(k,j)]");
}

BiPoly hd_affine(int m) {
    if (m < 0) throw BadRange("hd_affine: m must be >= 0");
    return BiPoly::t(m);
}

BiPoly hd_projective(int n) {
    if (n < 0) throw BadRange("hd_projective: n must be >= 0");
    return geometric_sum_t(n + 1);
}

BiPoly hd_grassmannian(int k, int N) { return gauss(k, N); }

BiPoly hd_jacobian(int g) {
    if (g < 0) throw BadRange("hd_jacobian: g must be >= 0");
    const BiPoly one(1);
    return (one + BiPoly::u()).pow(g) * (one + BiPoly::v()).pow(g);
}

BiPoly hd_m2_odd(int g) {
    if (g < 2) throw BadRange("hd_m2_odd: needs genus g >= 2");
    const BiPoly one(1);
    const BiPoly jac = hd_jacobian(g);
    const BiPoly twisted =
        (one + BiPoly::monomial(1, 2, 1)).pow(g) * (one + BiPoly::monomial(1, 1, 2)).pow(g);
    const BiPoly numerator = jac * (twisted - BiPoly::monomial(1, g, g) * jac);
    const BiPoly denominator = (one - BiPoly::t(1)) * (one - BiPoly::t(2));
    return div_exact(numerator, denominator);
}

BiPoly hd_m2_even(int g) {
    if (g < 2) throw BadRange("hd_m2_even: needs genus g >= 2");
    const BiPoly one(1);
    const BiPoly jac = hd_jacobian(g);
    const BiPoly jac2 = jac * jac; // (1+u)^{2g} (1+v)^{2g}
    const BiPoly twisted =
        (one + BiPoly::monomial(1, 2, 1)).pow(g) * (one + BiPoly::monomial(1, 1, 2)).pow(g);
    const BiPoly sym = twist_sym(jac); // (1-u^2)^g (1-v^2)^g
    const BiPoly bracket =
        Int(2) * (jac * twisted)
        - jac2 * (one + Int(2) * BiPoly::monomial(1, g + 1, g + 1) - BiPoly::t(2))
        - sym * (one - BiPoly::t(1)).pow(2);
    const BiPoly denominator = (one - BiPoly::t(1)) * (one - BiPoly::t(2));
    return half_exact(div_exact(bracket, denominator));
}

BiPoly hd_sym2(const BiPoly& p) { return half_exact(p * p + twist_sym(p)); }

BiPoly hd_schubert_stratum(const SchubertParams& sp) {
    sp.validate();
    return gauss(sp.k - sp.mu, sp.N - sp.j) * gauss(sp.mu, sp.j) *
           hd_affine((sp.j - sp.mu) * (sp.k - sp.mu));
}

BiPoly schubert_mu_sum(int k, int N, int j, int mu_min) {
    BiPoly sum;
    for (int mu = mu_min; mu <= std::min(k, j); ++mu)
        sum += hd_schubert_stratum({k, N, j, mu});
    return sum;
}

BiPoly hd_schubert_complement(int k, int N, int j, int mu_min) {
    if (k < 0 || k > N || j < 0 || j > N)
        throw BadRange("hd_schubert_complement: need 0 <= k, j <= N");
    if (mu_min < std::max(0, k + j - N))
        throw BadRange("hd_schubert_complement: mu_min below max(0, k+j-N)");
    return gauss(k, N) - schubert_mu_sum(k, N, j, mu_min);
}

BiPoly hp_from_hd_smooth(const BiPoly& p, int dim) {
    BiPoly out = dual_transform(p, dim);
    assert_polynomial(out, "hp_from_hd_smooth");
    return out;
}

BiPoly hd_from_hp_smooth(const BiPoly& p, int dim) {
    BiPoly out = dual_transform(p, dim);
    assert_polynomial(out, "hd_from_hp_smooth");
    return out;
}

} // namespace hodge
