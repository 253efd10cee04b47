#pragma once

#include <optional>

#include "seqspace/genmeans.hpp"

namespace seqspace {

/// One basis sequence of the transformed space: b^(j) for j >= 0 (column j
/// of the inverse transform triangle) or the limit vector b^(-1) (its row
/// sums), truncated to a prefix.
struct BasisVector {
    long index;  // >= -1
    SeqPrefix prefix;
};

/// Direct evaluation from the D coefficients; for j >= 0 the prefix entries
/// vanish below index j.
BasisVector basis_vector(const ParamTriple& p, long j, std::size_t size);

/// Expansion of x in the basis: coefficients mu = forward_transform(x), and
/// for the convergent-space form a limit value. The limit of a prefix is
/// unknowable, so it is either caller-supplied or a labeled stabilization
/// estimate (last values of mu agreeing exactly / within tolerance).
struct ExpansionResult {
    SeqPrefix coefficients;
    std::optional<Scalar> limit;
    bool limit_is_estimate = false;
    std::optional<SeqPrefix> source;  // kept for residual reporting
};

ExpansionResult expand(const ParamTriple& p, const SeqPrefix& x);
ExpansionResult expand(const ParamTriple& p, const SeqPrefix& x, Scalar limit);

/// Which representation the partial sum uses.
///   NullLimit  sum_{j<=J} mu_j b^(j)                       (null space)
///   WithLimit  l b^(-1) + sum_{j<=J} (mu_j - l) b^(j)      (convergent space)
enum class ReconstructionForm { NullLimit, WithLimit };

struct Reconstruction {
    SeqPrefix partial;
    /// space_norm(x - partial sum) per order 0..J; present when the
    /// expansion kept its source. Nonincreasing, exactly zero at full order.
    std::vector<Scalar> residual_norms;
};

Reconstruction reconstruct(const ParamTriple& p, const ExpansionResult& e, std::size_t order,
                           ReconstructionForm form);

}  // namespace seqspace
