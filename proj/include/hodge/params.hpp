#pragma once

#include "hodge/errors.hpp"

#include <string>

namespace hodge {

/// Input tuple for every moduli-level computation: rank n, degree d,
/// section-space dimension k, genus g of the base curve.
struct ModuliParams {
    int n = 0;
    int d = 0;
    int k = 0;
    int g = 0;

    std::string str() const;

    /// Throws PreconditionError unless g >= 2, 0 < k < n, d > 0.
    void validate_basic() const;
    /// Additionally requires n - k == 2 (and optionally d even).
    void validate_rank2(bool require_d_even) const;
};

} // namespace hodge
