#pragma once

#include "abelcoh/ce.hpp"
#include "abelcoh/poincare.hpp"
#include "abelcoh/report.hpp"

#include <optional>

namespace abelcoh {

struct IdentityOptions {
    int combinatorial_cap = 8;
    unsigned workers = 1;
    /// When set and the rank is within its cap, Betti numbers are compared too.
    std::optional<CohomologyOptions> cohomology;
};

/// Enumerated histograms against the closed-form generating functions, the
/// exact-division identity, and the convolution
///   W(t) = S_n(t) * prod (1 + t^i).
VerificationReport verify_identities(int n, const IdentityOptions& options);

} // namespace abelcoh
