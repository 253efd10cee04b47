#pragma once

#include <string_view>

#include "seqspace/genmeans.hpp"
#include "seqspace/verdict.hpp"

namespace seqspace {

/// Rectangular truncation of an infinite matrix: rows of equal length.
using Rows = std::vector<std::vector<Scalar>>;

void validate_rows(const Rows& rows);
Mode rows_mode(const Rows& rows);

/// The derived tables of a finitely supported sequence a under the method.
/// Every infinite tail sum collapses to a finite exact sum because the tail
/// of a is declared zero.
struct DualDerived {
    SeqPrefix source;                    // a, tail = Zero
    std::optional<std::size_t> support;  // last nonzero index of a
    /// R_k(a) = r_k [ a_k/(s_0 t_k) + (D_0/t_k - D_1/t_{k+1}) sum_{j>k} a_j
    ///             + sum_{l>=2} (-1)^l (D_l/t_{l+k}) sum_{j>=k+l} a_j ];
    /// vanishes beyond the support bound.
    SeqPrefix dual_coeffs;
    /// w_mk = sum_{j>=m} a_j s_jk: the pairing remainder past row m.
    /// Identically zero once m exceeds the support bound.
    LowerTable tail_remainder;
    /// e_mn with (Ey)_m = sum_{n<=m} a_n x_n for x the inverse transform
    /// of y; built from partial sums of a only.
    LowerTable partial_pairing;
    /// lim_m sum_k w_mk, evaluated at its stabilization point (exactly 0
    /// for finitely supported a).
    Scalar tail_limit;
};

/// Requires a.tail = Zero and table_size > support bound (and table_size <=
/// p.length). Computable entirely in exact arithmetic.
DualDerived dual_derived(const ParamTriple& p, const SeqPrefix& a, std::size_t table_size);

/// Both sides of sum_k a_k z_k = sum_k R_k(a) (Tz)_k, plus the tail limit
/// gamma the convergent-series variant subtracts (eta * gamma vanishes here
/// because gamma = 0 for finitely supported a).
struct PairingCheck {
    Scalar direct;       // sum a_k z_k
    Scalar transformed;  // sum R_k(a) (Tz)_k
    Scalar tail_limit;   // gamma
};

PairingCheck pairing_identity_check(const ParamTriple& p, const SeqPrefix& a, const SeqPrefix& z);

struct BatteryOptions {
    double tol = 1e-9;
    std::size_t window = 8;
    /// Condition 4.4 enumerates subsets of columns {0..subset_max_col};
    /// hard limit 12.
    std::size_t subset_max_col = 12;
};

/// The per-condition evaluators of the classical matrix-map battery,
/// reusable against any rectangular truncation.
namespace battery {

Verdict subset_sup(const Rows& rows, const BatteryOptions& opts);            // 4.4
Verdict sup_row_abs_sums(const Rows& rows, const TrendOptions& opts);        // 4.5
Verdict row_abs_sums_to_zero(const Rows& rows, const TrendOptions& opts);    // 4.6
Verdict columns_to_zero(const Rows& rows, const TrendOptions& opts);         // 4.7
Verdict row_sums_to_zero(const Rows& rows, const TrendOptions& opts);        // 4.8
Verdict columns_converge(const Rows& rows, const TrendOptions& opts);        // 4.9
Verdict deviation_sums_to_zero(const Rows& rows, const TrendOptions& opts);  // 4.10
Verdict row_sums_converge(const Rows& rows, const TrendOptions& opts);       // 4.11

}  // namespace battery

/// All eight battery condition ids, "4.4" ... "4.11".
const std::vector<std::string>& battery_condition_ids();

/// Evaluates the requested subset of conditions (all eight when `which` is
/// empty) on an N x M truncation.
ConditionReport st_battery(const Rows& rows, const std::vector<std::string>& which,
                           const BatteryOptions& opts = {});

/// Dual-space membership tests for a finitely supported candidate a.
enum class DualKind { Alpha, BetaC0, BetaC, BetaLInf, Gamma };

DualKind dual_kind_from_name(std::string_view name);
std::string_view dual_kind_name(DualKind kind);

/// alpha: the subset-sup condition on the column-scaled inverse table;
/// gamma: the row-sup condition on the partial pairing table; beta kinds:
/// the B1..B6 set intersections for the target space.
ConditionReport dual_membership(const ParamTriple& p, const SeqPrefix& a, DualKind kind,
                                std::size_t table_size, const BatteryOptions& opts = {});

}  // namespace seqspace
