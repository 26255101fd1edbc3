#include "hodge/fforacle.hpp"

#include "hodge/spaces.hpp"

#include <sstream>

namespace hodge::ff {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

void SubspaceQuery::validate(bool override_guards) const {
    if (!is_prime(q)) throw BadRange("SubspaceQuery: q must be prime");
    if (N < 0 || k < 0 || k > N)
        throw BadRange("SubspaceQuery: need 0 <= k <= N");
    if (!override_guards && (q > 5 || N > 6)) {
        std::ostringstream msg;
        msg << "SubspaceQuery(q=" << q << ", N=" << N
            << ") exceeds desk-scale guards q <= 5, N <= 6";
        throw GuardExceeded(msg.str());
    }
    if (j) {
        if (*j < 0 || *j > N) throw BadRange("SubspaceQuery: need 0 <= j <= N");
        if (mu) {
            const int lo = std::max(0, k + *j - N);
            const int hi = std::min(k, *j);
            if (*mu < lo || *mu > hi)
                throw BadRange("SubspaceQuery: mu outside [max(0,k+j-N), min(k,j)]");
        }
    } else if (mu) {
        throw BadRange("SubspaceQuery: mu given without j");
    }
}

int rank_mod(Mat m, int q) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r) {
            if (m[r][col] % q != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        // Scale the pivot row to 1 via the modular inverse (q is prime).
        int inv = 1;
        const int pv = m[rank][col] % q;
        for (int t = 1; t < q; ++t)
            if (pv * t % q == 1) { inv = t; break; }
        for (int c = col; c < cols; ++c)
            m[rank][c] = static_cast<std::uint8_t>(m[rank][c] * inv % q);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] % q == 0) continue;
            const int factor = m[r][col] % q;
            for (int c = col; c < cols; ++c) {
                int value = m[r][c] - factor * m[rank][c];
                value %= q;
                if (value < 0) value += q;
                m[r][c] = static_cast<std::uint8_t>(value);
            }
        }
        ++rank;
    }
    return rank;
}

void enum_subspaces(int q, int N, int k, const std::function<void(const Mat&)>& visit,
                    bool override_guards) {
    SubspaceQuery{q, N, k, {}, {}}.validate(override_guards);
    if (k == 0) {
        visit(Mat{});
        return;
    }
    std::vector<int> pivots(k);
    for (int i = 0; i < k; ++i) pivots[i] = i;
    std::vector<bool> is_pivot(N, false);

    const auto emit_pattern = [&]() {
        std::fill(is_pivot.begin(), is_pivot.end(), false);
        for (int c : pivots) is_pivot[c] = true;
        // Free entries: row i may be nonzero at non-pivot columns right of
        // its own pivot. Everything else is forced by the echelon shape.
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < k; ++i)
            for (int c = pivots[i] + 1; c < N; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);

        Mat m(k, Row(N, 0));
        for (int i = 0; i < k; ++i) m[i][pivots[i]] = 1;
        std::vector<std::uint8_t> odo(free_pos.size(), 0);
        while (true) {
            for (std::size_t f = 0; f < free_pos.size(); ++f)
                m[free_pos[f].first][free_pos[f].second] = odo[f];
            visit(m);
            std::size_t f = 0;
            for (; f < odo.size(); ++f) {
                if (++odo[f] < q) break;
                odo[f] = 0;
            }
            if (f == odo.size()) break;
        }
    };

    // Iterate pivot-column combinations in lexicographic order.
    while (true) {
        emit_pattern();
        int i = k - 1;
        while (i >= 0 && pivots[i] == N - k + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int t = i + 1; t < k; ++t) pivots[t] = pivots[t - 1] + 1;
    }
}

long count_subspaces(int q, int N, int k, bool override_guards) {
    long count = 0;
    enum_subspaces(q, N, k, [&](const Mat&) { ++count; }, override_guards);
    return count;
}

Mat coordinate_subspace(int N, int j) {
    Mat w(j, Row(N, 0));
    for (int r = 0; r < j; ++r) w[r][N - j + r] = 1;
    return w;
}

namespace {

int intersection_dim(const Mat& pi, const Mat& w, int q) {
    Mat stacked = pi;
    stacked.insert(stacked.end(), w.begin(), w.end());
    const int k = static_cast<int>(pi.size());
    const int j = static_cast<int>(w.size());
    return k + j - rank_mod(std::move(stacked), q);
}

} // namespace

long count_schubert_with(int q, int N, int k, const Mat& w_basis, int mu,
                              bool override_guards) {
    SubspaceQuery{q, N, k, static_cast<int>(w_basis.size()), mu}
        .validate(override_guards);
    long count = 0;
    enum_subspaces(
        q, N, k,
        [&](const Mat& pi) {
            if (intersection_dim(pi, w_basis, q) == mu) ++count;
        },
        override_guards);
    return count;
}

long count_schubert(int q, int N, int k, int j, int mu, bool override_guards) {
    SubspaceQuery{q, N, k, j, mu}.validate(override_guards);
    return count_schubert_with(q, N, k, coordinate_subspace(N, j), mu,
                               override_guards);
}

CheckReport verify_point_counts(int max_N, const std::vector<int>& primes,
                                bool override_guards) {
    CheckReport report;
    {
        std::ostringstream name;
        name << "oracle(max_N=" << max_N << ", primes=[";
        for (std::size_t i = 0; i < primes.size(); ++i)
            name << (i ? "," : "") << primes[i];
        name << "])";
        report.name = name.str();
    }
    for (const int q : primes) {
        const Int qz(q);
        for (int N = 0; N <= max_N; ++N) {
            std::vector<Mat> w(N + 1);
            for (int j = 0; j <= N; ++j) w[j] = coordinate_subspace(N, j);
            for (int k = 0; k <= N; ++k) {
                // counters[j][mu]
                std::vector<std::vector<long>> counters(
                    N + 1, std::vector<long>(std::min(k, N) + 1, 0));
                long total = 0;
                enum_subspaces(
                    q, N, k,
                    [&](const Mat& pi) {
                        ++total;
                        for (int j = 0; j <= N; ++j)
                            ++counters[j][intersection_dim(pi, w[j], q)];
                    },
                    override_guards);
                const Int expected_total = eval_t(gauss(k, N), qz);
                if (expected_total != total) {
                    std::ostringstream msg;
                    msg << "total(q=" << q << ",N=" << N << ",k=" << k
                        << "): counted " << total << ", polynomial "
                        << expected_total.get_str();
                    report.fail(msg.str());
                }
                for (int j = 0; j <= N; ++j) {
                    for (int mu = std::max(0, k + j - N); mu <= std::min(k, j); ++mu) {
                        const Int expected =
                            eval_t(hd_schubert_stratum({k, N, j, mu}), qz);
                        if (expected != counters[j][mu]) {
                            std::ostringstream msg;
                            msg << "schubert(q=" << q << ",N=" << N << ",k=" << k
                                << ",j=" << j << ",mu=" << mu << "): counted "
                                << counters[j][mu] << ", polynomial "
                                << expected.get_str();
                            report.fail(msg.str());
                        }
                    }
                }
            }
        }
    }
    return report;
}

} // namespace hodge::ff
