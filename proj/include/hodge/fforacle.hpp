#pragma once

#include "hodge/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace hodge::ff {

using Row = std::vector<std::uint8_t>;
using Mat = std::vector<Row>;

/// Parameters of one counting query over F_q^N.
struct SubspaceQuery {
    int q = 2;
    int N = 0;
    int k = 0;
    std::optional<int> j;
    std::optional<int> mu;

    /// Enforces q prime and the desk-scale guards q <= 5, N <= 6 (lifted by
    /// override_guards), plus the dimension ranges. Throws GuardExceeded /
    /// BadRange.
    void validate(bool override_guards = false) const;
};

bool is_prime(int q);

/// Rank of a matrix over F_q (destructive Gaussian elimination).
int rank_mod(Mat m, int q);

/// Visit each k-dimensional subspace of F_q^N exactly once, presented by its
/// reduced row-echelon basis (k rows, N columns). The k = 0 case visits the
/// empty matrix once.
void enum_subspaces(int q, int N, int k, const std::function<void(const Mat&)>& visit,
                    bool override_guards = false);

long count_subspaces(int q, int N, int k, bool override_guards = false);

/// Number of k-planes meeting the fixed coordinate subspace spanned by the
/// last j basis vectors in dimension exactly mu.
long count_schubert(int q, int N, int k, int j, int mu,
                         bool override_guards = false);

/// Same count against an arbitrary subspace given by independent rows.
long count_schubert_with(int q, int N, int k, const Mat& w_basis, int mu,
                              bool override_guards = false);

/// Basis of the coordinate subspace used by count_schubert.
Mat coordinate_subspace(int N, int j);

/// Full sweep: for every q in primes, N <= max_N, 0 <= k, j <= N and every
/// feasible mu, compare brute-force counts against polynomial evaluations at
/// uv = q. Mismatches are collected in the report, not thrown.
CheckReport verify_point_counts(int max_N, const std::vector<int>& primes,
                                bool override_guards = false);

} // namespace hodge::ff
