#include "hodge/counts.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hodge {

void JHType::validate(int nk, int d) const {
    if (parts.empty()) throw PreconditionError("JHType: no parts");
    long long rank_sum = 0, degree_sum = 0;
    for (const auto& part : parts) {
        if (part.rank <= 0) throw PreconditionError("JHType: ranks must be positive");
        // Equal slopes: degree/rank = d/nk, cross-multiplied.
        if (static_cast<long long>(part.degree) * nk !=
            static_cast<long long>(part.rank) * d)
            throw SlopeMismatch("JHType: part slope differs from d/(n-k)");
        rank_sum += part.rank;
        degree_sum += part.degree;
    }
    if (rank_sum != nk || degree_sum != d)
        throw PreconditionError("JHType: ranks/degrees do not sum to (n-k, d)");
}

std::string JHType::str() const {
    std::ostringstream s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s << "+";
        s << "(" << parts[i].rank << "," << parts[i].degree << ")";
    }
    return s.str();
}

std::vector<JHType> admissible_types(int nk, int d, int r) {
    if (nk < 1 || r < 1) throw PreconditionError("admissible_types: nk >= 1, r >= 1");
    const int p = std::gcd(nk, std::abs(d));
    const int m = nk / p;         // every rank is a multiple of this
    const int e = d / p;          // degree carried by one rank-m block
    std::vector<JHType> out;
    std::vector<JHPart> acc;
    // Ordered compositions of nk into r multiples of m.
    auto rec = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back(JHType{acc});
            return;
        }
        for (int blocks = 1; blocks * m <= remaining - m * (slots - 1); ++blocks) {
            acc.push_back({blocks * m, blocks * e});
            self(self, remaining - blocks * m, slots - 1);
            acc.pop_back();
        }
    };
    rec(rec, nk, r);
    return out;
}

std::vector<SubextensionTriple> subextension_triples(const ModuliParams& p) {
    if (p.n - p.k < 2)
        throw PreconditionError("subextension_triples: needs n - k >= 2");
    const int nk = p.n - p.k;
    std::vector<SubextensionTriple> out;
    for (int f = 1; f < nk; ++f) { // f = n' - k', the subbundle rank
        if (static_cast<long long>(f) * p.d % nk != 0) continue;
        const int dprime = static_cast<int>(static_cast<long long>(f) * p.d / nk);
        const long long h1 = static_cast<long long>(p.g - 1) * f + dprime;
        const long long kmax = std::min<long long>(p.k, h1);
        for (int kprime = 1; kprime <= kmax; ++kprime) {
            const int nprime = f + kprime;
            // k/n >= k'/n' by cross-multiplication.
            if (static_cast<long long>(p.k) * nprime <
                static_cast<long long>(kprime) * p.n)
                continue;
            out.push_back({nprime, dprime, kprime});
        }
    }
    return out;
}

std::optional<long long> codim_S_bound(const ModuliParams& p) {
    std::optional<long long> best;
    for (const auto& tr : subextension_triples(p)) {
        const long long value =
            (static_cast<long long>(p.g - 1) * tr.nprime -
             static_cast<long long>(tr.kprime) * p.g + tr.dprime) *
            (p.k - tr.kprime);
        if (!best || value < *best) best = value;
    }
    return best;
}

long long codim_W_unrestricted_min(int nk, int g) {
    // Over all r >= 2 splits of nk, sum_{i<j} n_i n_j is minimized by the
    // most unbalanced two-part split.
    if (nk < 2) throw PreconditionError("codim_W_unrestricted_min: nk >= 2");
    return static_cast<long long>(nk - 1) * (g - 1);
}

std::optional<long long> codim_W_admissible_min(int nk, int d, int g) {
    std::optional<long long> best;
    for (int r = 2; r <= nk; ++r) {
        for (const auto& type : admissible_types(nk, d, r)) {
            long long cross = 0;
            for (std::size_t i = 0; i < type.parts.size(); ++i)
                for (std::size_t j = i + 1; j < type.parts.size(); ++j)
                    cross += static_cast<long long>(type.parts[i].rank) *
                             type.parts[j].rank;
            const long long value = cross * (g - 1);
            if (!best || value < *best) best = value;
        }
    }
    return best;
}

long long codim_W_bound(const ModuliParams& p) {
    p.validate_basic();
    const int nk = p.n - p.k;
    const int q = std::gcd(nk, p.d);
    if (q < 2) throw NotApplicable("codim_W_bound: gcd(n-k, d) = 1");
    // (q-1) nk^2 (g-1) / q^2 with nk = q*m, so the value is (q-1) m^2 (g-1).
    if (nk % q != 0) throw Error("codim_W_bound: gcd does not divide n-k");
    const long long m = nk / q;
    const long long improved = (q - 1) * m * m * (p.g - 1);
    const auto enumerated = codim_W_admissible_min(nk, p.d, p.g);
    if (!enumerated || *enumerated != improved)
        throw Error("codim_W_bound: enumeration disagrees with closed bound");
    if (improved < codim_W_unrestricted_min(nk, p.g))
        throw Error("codim_W_bound: improved bound below the unrestricted minimum");
    return improved;
}

long long dim_mtilde(int rank, int g) {
    return static_cast<long long>(rank) * rank * (g - 1) + 1;
}

R2Variant parse_r2_variant(const std::string& name) {
    if (name == "E") return R2Variant::E;
    if (name == "Eprime") return R2Variant::EPrime;
    if (name == "SE") return R2Variant::SE;
    if (name == "SEprime") return R2Variant::SEPrime;
    throw PreconditionError("unknown r2 variant: " + name);
}

std::string r2_variant_name(R2Variant v) {
    switch (v) {
        case R2Variant::E: return "E";
        case R2Variant::EPrime: return "Eprime";
        case R2Variant::SE: return "SE";
        case R2Variant::SEPrime: return "SEprime";
    }
    return "?";
}

long long param_count_r2(int nk, int n1, int g, R2Variant variant) {
    if (n1 <= 0 || n1 >= nk)
        throw PreconditionError("param_count_r2: need 0 < n1 < nk");
    const long long gm1 = g - 1;
    switch (variant) {
        case R2Variant::E:
            return dim_mtilde(nk, g) - static_cast<long long>(n1) * (nk - n1) * gm1;
        case R2Variant::EPrime:
            if (2 * n1 != nk)
                throw BadVariant("param_count_r2: Eprime needs n1 = nk/2");
            return dim_mtilde(nk, g) - 2LL * n1 * n1 * gm1;
        case R2Variant::SE:
            return dim_mtilde(n1, g) + dim_mtilde(nk - n1, g);
        case R2Variant::SEPrime:
            if (2 * n1 != nk)
                throw BadVariant("param_count_r2: SEprime needs n1 = nk/2");
            return dim_mtilde(n1, g);
    }
    throw BadVariant("param_count_r2: unreachable variant");
}

long long param_count_general(int nk, int d, int g, const JHType& type) {
    type.validate(nk, d);
    long long cross = 0;
    for (std::size_t i = 0; i < type.parts.size(); ++i)
        for (std::size_t j = i + 1; j < type.parts.size(); ++j)
            cross += static_cast<long long>(type.parts[i].rank) * type.parts[j].rank;
    return dim_mtilde(nk, g) - cross * (g - 1);
}

R3Set parse_r3_set(const std::string& name) {
    if (name == "S11") return R3Set::S11;
    if (name == "S31") return R3Set::S31;
    if (name == "S12_12") return R3Set::S12_12;
    throw PreconditionError("unknown r3 set: " + name);
}

std::string r3_set_name(R3Set s) {
    switch (s) {
        case R3Set::S11: return "S11";
        case R3Set::S31: return "S31";
        case R3Set::S12_12: return "S12_12";
    }
    return "?";
}

long long param_count_r3(int nk, int d, int g, const JHType& type, R3Set set) {
    type.validate(nk, d);
    if (type.parts.size() != 3)
        throw BadVariant("param_count_r3: type must have 3 parts");
    const long long n1 = type.parts[0].rank;
    const long long n2 = type.parts[1].rank;
    const long long n3 = type.parts[2].rank;
    const long long gm1 = g - 1;
    switch (set) {
        case R3Set::S11:
            return dim_mtilde(nk, g) - n1 * n2 * gm1 - n3 * (n1 + n2) * gm1;
        case R3Set::S31:
            return dim_mtilde(nk, g) - (n1 + n2) * n3 * gm1 - 2 * n1 * n2 * gm1 + 1;
        case R3Set::S12_12:
            if (type.parts[0] != type.parts[1])
                throw BadVariant("param_count_r3: S12_12 needs (n1, d1) = (n2, d2)");
            return dim_mtilde(nk, g) - 3 * dim_mtilde(static_cast<int>(n1), g) -
                   2 * n1 * n3 * gm1 + 2;
    }
    throw BadVariant("param_count_r3: unreachable set");
}

} // namespace hodge
