#pragma once

#include "hodge/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodge {

/// One quotient of a Jordan-Holder filtration: rank and degree.
struct JHPart {
    int rank = 0;
    int degree = 0;
    friend bool operator==(const JHPart&, const JHPart&) = default;
};

/// Ordered type of a filtration. Valid against (nk, d) when all ranks are
/// positive, ranks sum to nk, degrees sum to d, and all slopes equal d/nk.
struct JHType {
    std::vector<JHPart> parts;

    void validate(int nk, int d) const;
    std::string str() const;
    friend bool operator==(const JHType&, const JHType&) = default;
};

/// All ordered r-part types for (nk, d): each rank a positive multiple of
/// nk/gcd(nk, d), each degree the slope-matching one. Empty list when no
/// type exists.
std::vector<JHType> admissible_types(int nk, int d, int r);

/// Invariants (n', d', k') of a destabilizing subextension.
struct SubextensionTriple {
    int nprime = 0;
    int dprime = 0;
    int kprime = 0;
};

/// Every triple with n-k > n'-k' > 0, k/n >= k'/n', d'/(n'-k') = d/(n-k)
/// and 1 <= k' <= min(k, (g-1)(n'-k') + d'). Exact rational comparisons by
/// cross-multiplication.
std::vector<SubextensionTriple> subextension_triples(const ModuliParams& p);

/// Lower bound for the codimension of the bad locus in the extension space:
/// min over subextension triples of ((g-1)n' - k'g + d')(k - k').
/// nullopt means no triple exists (the bound is +infinity).
std::optional<long long> codim_S_bound(const ModuliParams& p);

/// min over r >= 2 sequences (no slope constraint) of (sum_{i<j} n_i n_j)(g-1).
long long codim_W_unrestricted_min(int nk, int g);

/// Slope-restricted minimum computed by exhausting admissible types.
/// nullopt when no admissible type with r >= 2 exists.
std::optional<long long> codim_W_admissible_min(int nk, int d, int g);

/// Improved codimension bound (p-1)(n-k)^2(g-1)/p^2 for p = gcd(n-k, d) >= 2;
/// divisibility holds symbolically. The function also recomputes the bound by
/// exhaustive type enumeration and checks consistency. Throws NotApplicable
/// when p = 1.
long long codim_W_bound(const ModuliParams& p);

/// dim of the semistable moduli space M~(rank, deg) = rank^2 (g-1) + 1.
long long dim_mtilde(int rank, int g);

enum class R2Variant { E, EPrime, SE, SEPrime };

R2Variant parse_r2_variant(const std::string& name);
std::string r2_variant_name(R2Variant v);

/// Parameter counts of the r = 2 classifying spaces. EPrime and SEPrime
/// require n1 = nk/2 (BadVariant otherwise).
long long param_count_r2(int nk, int n1, int g, R2Variant variant);

/// Parameter count of the length-r classifying space:
/// dim M~(nk, d) - sum_{j<i} n_i n_j (g-1).
long long param_count_general(int nk, int d, int g, const JHType& type);

enum class R3Set { S11, S31, S12_12 };

R3Set parse_r3_set(const std::string& name);
std::string r3_set_name(R3Set s);

/// Parameter counts of the r = 3 classifying sets. S12_12 requires the first
/// two parts to be identical (BadVariant otherwise).
long long param_count_r3(int nk, int d, int g, const JHType& type, R3Set set);

} // namespace hodge
