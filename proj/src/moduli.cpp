#include "hodge/moduli.hpp"

#include <numeric>
#include <sstream>

namespace hodge {

CheckReport diff_report(const std::string& name, const BiPoly& a, const BiPoly& b) {
    CheckReport report;
    report.name = name;
    for (const auto& [e, ca] : a.terms()) {
        const Int cb = b.coeff(e.u, e.v);
        if (ca != cb) report.diff.push_back({e.u, e.v, ca, cb});
    }
    for (const auto& [e, cb] : b.terms()) {
        if (a.coeff(e.u, e.v) == 0 && cb != 0)
            report.diff.push_back({e.u, e.v, Int(0), cb});
    }
    report.passed = report.diff.empty();
    return report;
}

long long beta_dim(int n, int d, int k, int g) {
    const long long nn = n, dd = d, kk = k, gg = g;
    return nn * nn * (gg - 1) + 1 - kk * (kk - dd + nn * (gg - 1));
}

long long beta_dim(const ModuliParams& p) { return beta_dim(p.n, p.d, p.k, p.g); }

bool is_nonempty(const ModuliParams& p) {
    if (p.d <= 0) return false;
    if (p.d == p.n && p.k == p.n) return false;
    // k <= n + (d - n)/g  <=>  g(k - n) <= d - n, exactly.
    return static_cast<long long>(p.g) * (p.k - p.n) <= p.d - p.n;
}

namespace {

// prod_{i=1..k} (1 - t^{N-k+i})  /  prod_{i=1..k} (1 - t^i), as displayed.
BiPoly grassmann_division_form(int k, int N) {
    const BiPoly one(1);
    BiPoly num(1), den(1);
    for (int i = 1; i <= k; ++i) {
        num *= one - BiPoly::t(N - k + i);
        den *= one - BiPoly::t(i);
    }
    return div_exact(num, den);
}

void require_nonempty(const ModuliParams& p) {
    if (!is_nonempty(p))
        throw PreconditionError("G_L" + p.str() + " is empty");
}

// The mu-sum of the closed statement: the summand carries the exponent
// mu(d/2 + (g-1) - k + mu) rather than the fibration twist (j-mu)(k-mu).
BiPoly closed_statement_mu_sum(const ModuliParams& p, int mu_min) {
    const int j = (p.g - 1) + p.d / 2;
    const BiPoly one(1);
    BiPoly sum;
    for (int mu = mu_min; mu <= std::min(p.k, j); ++mu) {
        BiPoly num1(1), den1(1);
        for (int i = 1; i <= p.k - mu; ++i) {
            num1 *= one - BiPoly::t(j - (p.k - mu) + i);
            den1 *= one - BiPoly::t(i);
        }
        BiPoly num2(1), den2(1);
        for (int i = 1; i <= mu; ++i) {
            num2 *= one - BiPoly::t(j - mu + i);
            den2 *= one - BiPoly::t(i);
        }
        sum += BiPoly::t(mu * (p.d / 2 + (p.g - 1) - p.k + mu)) *
               div_exact(num1, den1) * div_exact(num2, den2);
    }
    return sum;
}

} // namespace

BiPoly hd_GL_coprime(const ModuliParams& p) {
    p.validate_rank2(false);
    if (p.d % 2 == 0)
        throw PreconditionError("hd_GL_coprime" + p.str() + ": needs gcd(2, d) = 1");
    require_nonempty(p);

    const int N = 2 * (p.g - 1) + p.d;
    const BiPoly one(1);
    const BiPoly jac = hd_jacobian(p.g);
    const BiPoly twisted = (one + BiPoly::monomial(1, 2, 1)).pow(p.g) *
                           (one + BiPoly::monomial(1, 1, 2)).pow(p.g);

    // Displayed division form: one global quotient.
    BiPoly num = jac * (twisted - BiPoly::monomial(1, p.g, p.g) * jac);
    BiPoly den = (one - BiPoly::t(1)) * (one - BiPoly::t(2));
    for (int i = 1; i <= p.k; ++i) {
        num *= one - BiPoly::t(N - p.k + i);
        den *= one - BiPoly::t(i);
    }
    const BiPoly displayed = div_exact(num, den);

    const BiPoly product_form = hd_m2_odd(p.g) * gauss(p.k, N);
    if (displayed != product_form)
        throw NotDivisible("hd_GL_coprime: division form disagrees with product form",
                           displayed - product_form);
    return displayed;
}

BiPoly hd_GL_noncoprime_closed(const ModuliParams& p) {
    p.validate_rank2(true);
    require_nonempty(p);

    const int N = 2 * (p.g - 1) + p.d;
    const int j = (p.g - 1) + p.d / 2;
    const BiPoly one(1);
    const BiPoly t1 = BiPoly::t(1);
    const BiPoly jac = hd_jacobian(p.g);
    const BiPoly jac2 = jac * jac;

    const BiPoly grass = grassmann_division_form(p.k, N);
    const BiPoly base_e =
        div_exact((jac2 - jac) * (one - BiPoly::t(p.g - 1)), one - t1);
    const BiPoly base_eprime = div_exact(jac * (one - BiPoly::t(p.g)), one - t1);
    // (1/2)[(1+u)^{2g}(1+v)^{2g} + (1-u^2)^g(1-v^2)^g]
    const BiPoly half_even_pair = half_exact(jac2 + twist_sym(jac));

    const int mu_min = (p.k + 1) / 2; // k/2 for k even, ceil(k/2) for k odd
    const BiPoly sigma = closed_statement_mu_sum(p, mu_min);

    BiPoly closed = hd_m2_even(p.g) * grass;
    closed += (base_e + base_eprime + half_even_pair) * (grass - sigma);
    closed -= (half_even_pair - (one - t1) * jac) * sigma;
    if (p.k % 2 == 0) {
        const BiPoly p1 = one + t1;
        // Statement coefficient (1 - (1+uv)^2 + (1+uv)) kept verbatim.
        const BiPoly sign_pattern = one - p1 * p1 + p1;
        BiPoly num(1), den(1);
        for (int i = 1; i <= p.k / 2; ++i) {
            num *= (one - BiPoly::t(p.d / 2 + (p.g - 1) - p.k / 2 + i)).pow(2);
            den *= (one - BiPoly::t(i)).pow(2);
        }
        closed += (half_even_pair - sign_pattern * jac) * div_exact(num, den);
    }
    return closed;
}

BiPoly hd_GL(const ModuliParams& p) {
    p.validate_rank2(false);
    require_nonempty(p);
    if (p.d % 2 != 0) return hd_GL_coprime(p);
    return hd_strata_sum(p);
}

PoincarePoly poincare_GL(const ModuliParams& p) {
    PoincarePoly out;
    out.genuine = std::gcd(std::gcd(p.n, p.d), p.k) == 1;
    out.poly = diag(hd_GL(p));
    return out;
}

CheckReport compare_closed_vs_sum(const ModuliParams& p) {
    p.validate_rank2(true);
    std::ostringstream name;
    name << "closed_vs_sum" << p.str();
    return diff_report(name.str(), hd_GL_noncoprime_closed(p), hd_strata_sum(p));
}

} // namespace hodge
