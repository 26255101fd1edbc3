#include "hodge/bipoly.hpp"

#include <sstream>

namespace hodge {

namespace {

// Term order for division: total degree first, then (e_u, e_v) lex.
bool term_less(const ExpPair& a, const ExpPair& b) {
    const long da = static_cast<long>(a.u) + a.v;
    const long db = static_cast<long>(b.u) + b.v;
    if (da != db) return da < db;
    return a < b;
}

BiPoly::TermMap::const_iterator leading_term(const BiPoly::TermMap& m) {
    auto best = m.begin();
    for (auto it = std::next(m.begin()); it != m.end(); ++it) {
        if (term_less(best->first, it->first)) best = it;
    }
    return best;
}

} // namespace

BiPoly BiPoly::monomial(Int c, int eu, int ev) {
    BiPoly p;
    p.add_term({eu, ev}, c);
    return p;
}

void BiPoly::add_term(const ExpPair& e, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool BiPoly::is_polynomial() const {
    for (const auto& [e, c] : terms_)
        if (e.u < 0 || e.v < 0) return false;
    return true;
}

bool BiPoly::is_pure_t() const {
    for (const auto& [e, c] : terms_)
        if (e.u != e.v) return false;
    return true;
}

bool BiPoly::is_symmetric_uv() const {
    for (const auto& [e, c] : terms_)
        if (coeff(e.v, e.u) != c) return false;
    return true;
}

int BiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    int best = terms_.begin()->first.u + terms_.begin()->first.v;
    for (const auto& [e, c] : terms_) best = std::max(best, e.u + e.v);
    return best;
}

int BiPoly::degree_u() const {
    if (terms_.empty()) return -1;
    int best = terms_.begin()->first.u;
    for (const auto& [e, c] : terms_) best = std::max(best, e.u);
    return best;
}

int BiPoly::degree_v() const {
    if (terms_.empty()) return -1;
    int best = terms_.begin()->first.v;
    for (const auto& [e, c] : terms_) best = std::max(best, e.v);
    return best;
}

Int BiPoly::coeff(int eu, int ev) const {
    auto it = terms_.find({eu, ev});
    return it == terms_.end() ? Int(0) : it->second;
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.u + eb.u, ea.v + eb.v}, ca * cb);
    return out;
}

BiPoly operator*(const Int& c, const BiPoly& a) {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [e, k] : a.terms_) out.terms_.emplace(e, c * k);
    return out;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw BadRange("pow: negative exponent");
    BiPoly result(1);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

namespace {

BiPoly shift_exp(const BiPoly& p, int du, int dv) {
    if (du == 0 && dv == 0) return p;
    BiPoly out;
    for (const auto& [e, c] : p.terms()) out.add_term({e.u + du, e.v + dv}, c);
    return out;
}

} // namespace

BiPoly div_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return BiPoly();

    // Laurent inputs reduce to genuine polynomial division: factor the
    // monomial content out of b and shift a to nonnegative exponents.
    int bu = b.terms().begin()->first.u, bv = b.terms().begin()->first.v;
    for (const auto& [e, c] : b.terms()) {
        bu = std::min(bu, e.u);
        bv = std::min(bv, e.v);
    }
    const BiPoly bb = shift_exp(b, -bu, -bv);
    BiPoly rest = shift_exp(a, -bu, -bv);
    int su = 0, sv = 0;
    for (const auto& [e, c] : rest.terms()) {
        su = std::min(su, e.u);
        sv = std::min(sv, e.v);
    }
    rest = shift_exp(rest, -su, -sv);

    BiPoly quotient;
    BiPoly remainder;
    const auto lead_b = leading_term(bb.terms());
    const ExpPair eb = lead_b->first;
    while (!rest.is_zero()) {
        const auto lead_r = leading_term(rest.terms());
        const ExpPair er = lead_r->first;
        Int q, mod;
        bool divides = er.u >= eb.u && er.v >= eb.v;
        if (divides) {
            mpz_tdiv_qr(q.get_mpz_t(), mod.get_mpz_t(),
                        lead_r->second.get_mpz_t(), lead_b->second.get_mpz_t());
            divides = (mod == 0);
        }
        if (!divides) {
            // Park the irreducible term; the leading monomial of `rest`
            // strictly decreases either way, so this terminates.
            remainder.add_term(er, lead_r->second);
            rest.add_term(er, -lead_r->second);
            continue;
        }
        const BiPoly term = BiPoly::monomial(q, er.u - eb.u, er.v - eb.v);
        quotient += term;
        rest -= term * bb;
    }
    if (!remainder.is_zero()) {
        std::ostringstream msg;
        msg << "exact division failed: remainder has "
            << remainder.terms().size() << " term(s)";
        throw NotDivisible(msg.str(), shift_exp(remainder, bu + su, bv + sv));
    }
    return shift_exp(quotient, su, sv);
}

BiPoly div_scalar_exact(const BiPoly& a, const Int& c) {
    if (c == 0) throw DivisionByZero();
    BiPoly out;
    for (const auto& [e, k] : a.terms()) {
        Int q, mod;
        mpz_tdiv_qr(q.get_mpz_t(), mod.get_mpz_t(), k.get_mpz_t(), c.get_mpz_t());
        if (mod != 0) {
            std::ostringstream msg;
            msg << "coefficient " << k.get_str() << " at u^" << e.u << " v^" << e.v
                << " is not divisible by " << c.get_str();
            throw OddCoefficient(msg.str());
        }
        out.add_term(e, q);
    }
    return out;
}

UniPoly UniPoly::monomial(Int c, int e) {
    UniPoly p;
    p.add_term(e, c);
    return p;
}

void UniPoly::add_term(int e, const Int& c) {
    if (c == 0) return;
    if (e < 0) throw LaurentInput("UniPoly exponent must be >= 0");
    auto [it, inserted] = coeffs_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

Int UniPoly::coeff(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
}

bool UniPoly::has_negative_coeff() const {
    for (const auto& [e, c] : coeffs_)
        if (c < 0) return true;
    return false;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    for (const auto& [e, c] : rhs.coeffs_) add_term(e, c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_)
            out.add_term(ea + eb, ca * cb);
    return out;
}

Int UniPoly::eval(const Int& x) const {
    // Horner over the sparse coefficient list, highest exponent first.
    Int acc = 0;
    int prev_e = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (prev_e >= 0) {
            Int scale;
            mpz_pow_ui(scale.get_mpz_t(), x.get_mpz_t(),
                       static_cast<unsigned long>(prev_e - it->first));
            acc *= scale;
        }
        acc += it->second;
        prev_e = it->first;
    }
    if (prev_e > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), x.get_mpz_t(),
                   static_cast<unsigned long>(prev_e));
        acc *= scale;
    }
    return acc;
}

UniPoly diag(const BiPoly& a) {
    UniPoly out;
    for (const auto& [e, c] : a.terms()) {
        if (e.u < 0 || e.v < 0)
            throw LaurentInput("diag: negative exponent in input");
        out.add_term(e.u + e.v, c);
    }
    return out;
}

BiPoly twist_sym(const BiPoly& a) {
    BiPoly out;
    for (const auto& [e, c] : a.terms()) {
        const bool flip = ((e.u + e.v) % 2) != 0;
        out.add_term({2 * e.u, 2 * e.v}, flip ? Int(-c) : c);
    }
    return out;
}

BiPoly dual_transform(const BiPoly& a, int m) {
    if (m < 0) throw BadRange("dual_transform: m must be >= 0");
    BiPoly out;
    for (const auto& [e, c] : a.terms()) out.add_term({m - e.u, m - e.v}, c);
    return out;
}

BiPoly geometric_sum_t(int e) {
    if (e < 0) throw BadRange("geometric_sum_t: negative length");
    BiPoly out;
    for (int i = 0; i < e; ++i) out.add_term({i, i}, 1);
    return out;
}

BiPoly gauss(int k, int N) {
    if (k < 0 || k > N) {
        std::ostringstream msg;
        msg << "gauss(k=" << k << ", N=" << N << ") requires 0 <= k <= N";
        throw BadRange(msg.str());
    }
    BiPoly acc(1);
    const BiPoly one(1);
    for (int i = 1; i <= k; ++i) {
        acc = div_exact(acc * (one - BiPoly::t(N - k + i)), one - BiPoly::t(i));
    }
    return acc;
}

Int eval_t(const BiPoly& a, const Int& q) {
    UniPoly in_t;
    for (const auto& [e, c] : a.terms()) {
        if (e.u != e.v) {
            std::ostringstream msg;
            msg << "eval_t: mixed term u^" << e.u << " v^" << e.v;
            throw NotPureT(msg.str());
        }
        if (e.u < 0) throw NotPureT("eval_t: negative exponent");
        in_t.add_term(e.u, c);
    }
    return in_t.eval(q);
}

const BiPoly& assert_polynomial(const BiPoly& a, const std::string& context) {
    if (!a.is_polynomial())
        throw NonPolynomialResult(context + ": result has negative exponents");
    return a;
}

} // namespace hodge
