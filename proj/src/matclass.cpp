#include "seqspace/matclass.hpp"

#include <stdexcept>

namespace seqspace {

Space space_from_name(std::string_view name) {
    if (name == "c0") return Space::C0;
    if (name == "c") return Space::C;
    if (name == "linf") return Space::LInf;
    throw std::invalid_argument("unknown space '" + std::string(name) + "' (expected c0|c|linf)");
}

std::string_view space_name(Space s) {
    switch (s) {
        case Space::C0: return "c0";
        case Space::C: return "c";
        case Space::LInf: return "linf";
    }
    return "?";
}

Rows TransformTables::dual_matrix() const {
    Rows rows;
    rows.reserve(dual_rows.size());
    for (const SeqPrefix& r : dual_rows) rows.push_back(r.entries());
    return rows;
}

TransformTables transform_tables(const ParamTriple& p, const std::vector<SeqPrefix>& rows,
                                 std::size_t table_size) {
    if (rows.empty()) throw std::invalid_argument("transform_tables: matrix needs at least one row");
    TransformTables tt;
    tt.dual_rows.reserve(rows.size());
    tt.remainders.reserve(rows.size());
    tt.tail_limits.reserve(rows.size());
    for (std::size_t n = 0; n < rows.size(); ++n) {
        if (rows[n].tail() != Tail::Zero)
            throw std::invalid_argument("transform_tables: row " + std::to_string(n) +
                                        " is not finitely supported (tail != Zero)");
        DualDerived dd = dual_derived(p, rows[n], table_size);
        tt.dual_rows.push_back(std::move(dd.dual_coeffs));
        tt.remainders.push_back(std::move(dd.tail_remainder));
        tt.tail_limits.push_back(std::move(dd.tail_limit));
    }
    return tt;
}

const std::vector<std::string>& conditions_for(Space from, Space to) {
    static const std::vector<std::string> c0_c0 = {"4.12", "4.13", "4.14", "4.15"};
    static const std::vector<std::string> c0_c = {"4.12", "4.14", "4.15", "4.16"};
    static const std::vector<std::string> c0_linf = {"4.12", "4.14", "4.15"};
    static const std::vector<std::string> linf_c0 = {"4.17", "4.18"};
    static const std::vector<std::string> linf_c = {"4.12", "4.16", "4.18", "4.19"};
    static const std::vector<std::string> linf_linf = {"4.12", "4.18"};
    static const std::vector<std::string> c_c0 = {"4.12", "4.13", "4.14", "4.20", "4.21", "4.22"};
    static const std::vector<std::string> c_c = {"4.12", "4.14", "4.16", "4.20", "4.21", "4.24"};
    static const std::vector<std::string> c_linf = {"4.12", "4.14", "4.20", "4.21", "4.23"};

    switch (from) {
        case Space::C0:
            return to == Space::C0 ? c0_c0 : to == Space::C ? c0_c : c0_linf;
        case Space::LInf:
            return to == Space::C0 ? linf_c0 : to == Space::C ? linf_c : linf_linf;
        case Space::C:
            return to == Space::C0 ? c_c0 : to == Space::C ? c_c : c_linf;
    }
    throw std::logic_error("unreachable space pair");
}

namespace {

// Conjunction over the per-row remainder tables W^{A_n}.
Verdict each_remainder(const TransformTables& tt, const TrendOptions& topt,
                       Verdict (*eval)(const Rows&, const TrendOptions&)) {
    std::vector<Verdict> parts;
    parts.reserve(tt.row_count());
    for (std::size_t n = 0; n < tt.row_count(); ++n) {
        Verdict v = eval(tt.remainders[n].dense_rows(), topt);
        v.note = "row " + std::to_string(n) + (v.note.empty() ? "" : ": " + v.note);
        parts.push_back(std::move(v));
    }
    return trend::conjunction(parts);
}

// u_n = R(A_n)e - gamma_n, the sequence whose space membership conditions
// 4.22 - 4.24 test.
std::vector<Scalar> rowsum_minus_tail_limit(const TransformTables& tt) {
    std::vector<Scalar> u;
    u.reserve(tt.row_count());
    for (std::size_t n = 0; n < tt.row_count(); ++n) {
        Scalar acc = Scalar::zero(tt.dual_rows[n].mode());
        for (std::size_t k = 0; k < tt.dual_rows[n].length(); ++k) acc += tt.dual_rows[n][k];
        u.push_back(acc - tt.tail_limits[n]);
    }
    return u;
}

Verdict evaluate_condition(const std::string& id, const TransformTables& tt,
                           const TrendOptions& topt) {
    const Rows dual = tt.dual_matrix();
    if (id == "4.12") return battery::sup_row_abs_sums(dual, topt);
    if (id == "4.13") return battery::columns_to_zero(dual, topt);
    if (id == "4.14") return each_remainder(tt, topt, battery::sup_row_abs_sums);
    if (id == "4.15") return each_remainder(tt, topt, battery::columns_to_zero);
    if (id == "4.16") return battery::columns_converge(dual, topt);
    if (id == "4.17") return battery::row_abs_sums_to_zero(dual, topt);
    if (id == "4.18") return each_remainder(tt, topt, battery::row_abs_sums_to_zero);
    if (id == "4.19") return battery::deviation_sums_to_zero(dual, topt);
    if (id == "4.20") return each_remainder(tt, topt, battery::columns_converge);
    if (id == "4.21") return each_remainder(tt, topt, battery::row_sums_converge);
    if (id == "4.22") return trend::limit_zero(rowsum_minus_tail_limit(tt), topt);
    if (id == "4.23") return trend::sup_finite(rowsum_minus_tail_limit(tt), topt);
    if (id == "4.24") return trend::limit_exists(rowsum_minus_tail_limit(tt), topt);
    throw std::invalid_argument("unknown classification condition '" + id + "'");
}

}  // namespace

ClassifyReport classify(const ParamTriple& p, const std::vector<SeqPrefix>& rows, Space from,
                        Space to, std::size_t table_size, const BatteryOptions& opts) {
    TransformTables tt = transform_tables(p, rows, table_size);
    TrendOptions topt{opts.tol, opts.window};

    ConditionReport report("(" + std::string(space_name(from)) + " -> " +
                           std::string(space_name(to)) + ")");
    for (const std::string& id : conditions_for(from, to))
        report.add(id, evaluate_condition(id, tt, topt));

    bool all_zero = true;
    for (const Scalar& g : tt.tail_limits) all_zero = all_zero && g.is_zero();
    std::string remark = all_zero
                             ? "all tail limits gamma_n are exactly zero (finitely supported "
                               "rows), so the eta*gamma_n correction of the image representation "
                               "vanishes"
                             : "nonzero tail limit observed; the image representation carries an "
                               "eta*gamma_n correction with caller-supplied eta";
    return ClassifyReport{from, to, std::move(report), std::move(tt), std::move(remark)};
}

namespace {

// C(top, l) by the multiplicative recurrence, in the working mode.
Scalar binomial(std::size_t top, std::size_t l, Mode m) {
    Scalar acc = Scalar::one(m);
    for (std::size_t i = 1; i <= l; ++i) {
        Scalar num = m == Mode::Exact ? Scalar::exact(static_cast<long>(top - l + i))
                                      : Scalar::real(static_cast<double>(top - l + i));
        Scalar den = m == Mode::Exact ? Scalar::exact(static_cast<long>(i))
                                      : Scalar::real(static_cast<double>(i));
        acc *= num / den;
    }
    return acc;
}

std::vector<Scalar> powers(const Scalar& base, std::size_t count) {
    std::vector<Scalar> p;
    p.reserve(count + 1);
    p.push_back(Scalar::one(base.mode()));
    for (std::size_t i = 0; i < count; ++i) p.push_back(p.back() * base);
    return p;
}

std::vector<Scalar> suffix_sums_of(const SeqPrefix& a) {
    std::vector<Scalar> g(a.length() + 1, Scalar::zero(a.mode()));
    for (std::size_t i = a.length(); i-- > 0;) g[i] = g[i + 1] + a[i];
    return g;
}

struct ClosedRow {
    std::vector<Scalar> coeffs;      // R_k, k < size
    LowerTable remainder;            // w_mk
    std::vector<Scalar> abs_sums;    // sum_k |w_mk| per m, display route
};

// Euler closed route: binomial-coefficient weights, no D coefficients.
// R_k(a) = a_k/alpha^k + sum_{l>=1} (-1)^l C(l+k,l) (1-alpha)^l / alpha^{k+l} G_{k+l}
// w_mk   = [sum_{l=0}^{m-k} (-1)^l C(l+k,l) (1-alpha)^l / alpha^{l+k}] G_m
//        + sum_{l>=m-k+1} (-1)^l C(l+k,l) (1-alpha)^l / alpha^{l+k} G_{k+l}
ClosedRow euler_closed(const Scalar& alpha, const SeqPrefix& a, std::size_t size) {
    const Mode m = alpha.mode();
    const Scalar one = Scalar::one(m);
    const Scalar beta = one - alpha;
    std::vector<Scalar> g = suffix_sums_of(a);
    auto tail = [&](std::size_t i) { return i < g.size() ? g[i] : Scalar::zero(m); };
    std::size_t bound_plus1 = a.support_bound() ? *a.support_bound() + 1 : 0;

    std::vector<Scalar> ap = powers(alpha, 2 * size + 2);
    std::vector<Scalar> bp = powers(beta, 2 * size + 2);
    auto weight = [&](std::size_t l, std::size_t k) {  // C(l+k,l) (1-alpha)^l / alpha^{l+k}
        return binomial(l + k, l, m) * bp[l] / ap[l + k];
    };

    ClosedRow out{{}, LowerTable::zero(size, m, "W(euler)"), {}};
    out.coeffs.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
        Scalar acc = a.get(k) / ap[k];
        // grouped l = 0,1 coefficient 1/alpha^k - (k+1)(1-alpha)/alpha^{k+1}
        if (k + 1 < bound_plus1) acc += (one / ap[k] - weight(1, k)) * tail(k + 1);
        for (std::size_t l = 2; k + l < bound_plus1; ++l) {
            Scalar term = weight(l, k) * tail(k + l);
            acc += l % 2 == 0 ? term : -term;
        }
        out.coeffs.push_back(std::move(acc));
    }

    out.remainder = LowerTable::build(
        size,
        [&](std::size_t mm, std::size_t k) {
            Scalar acc = Scalar::zero(m);
            if (mm < bound_plus1) {
                Scalar head = Scalar::zero(m);
                for (std::size_t l = 0; l <= mm - k; ++l) {
                    Scalar term = weight(l, k);
                    head += l % 2 == 0 ? term : -term;
                }
                acc += head * tail(mm);
            }
            for (std::size_t l = mm - k + 1; k + l < bound_plus1; ++l) {
                Scalar term = weight(l, k) * tail(k + l);
                acc += l % 2 == 0 ? term : -term;
            }
            return acc;
        },
        "W(euler)");

    out.abs_sums.reserve(size);
    for (std::size_t mm = 0; mm < size; ++mm) {
        Scalar acc = Scalar::zero(m);
        for (std::size_t k = 0; k <= mm; ++k) acc += out.remainder.entry(mm, k).abs();
        out.abs_sums.push_back(std::move(acc));
    }
    return out;
}

// AydinBasar closed route with tau_k = 1 + alpha^k:
// R_k(a) = (k+1) [ a_k/tau_k + (1/tau_k - 1/tau_{k+1}) G_{k+1} ]
// w_mk   = (k+1) (1/tau_k - 1/tau_{k+1}) G_m              for k < m
// w_mm   = (m+1) [ (1/tau_m - 1/tau_{m+1}) G_m + a_m/tau_{m+1} ]
// sum_k |w_mk| = sum_{k<m} (k+1) |1/tau_k - 1/tau_{k+1}| |G_m| + |w_mm|
ClosedRow aydin_basar_closed(const Scalar& alpha, const SeqPrefix& a, std::size_t size) {
    const Mode m = alpha.mode();
    const Scalar one = Scalar::one(m);
    std::vector<Scalar> ap = powers(alpha, size + 2);
    auto tau = [&](std::size_t k) { return one + ap[k]; };
    auto gap = [&](std::size_t k) { return one / tau(k) - one / tau(k + 1); };
    auto count = [&](std::size_t k) {
        return m == Mode::Exact ? Scalar::exact(static_cast<long>(k)) : Scalar::real(static_cast<double>(k));
    };
    std::vector<Scalar> g = suffix_sums_of(a);
    auto tail = [&](std::size_t i) { return i < g.size() ? g[i] : Scalar::zero(m); };

    ClosedRow out{{}, LowerTable::zero(size, m, "W(aydin_basar)"), {}};
    out.coeffs.reserve(size);
    for (std::size_t k = 0; k < size; ++k)
        out.coeffs.push_back(count(k + 1) * (a.get(k) / tau(k) + gap(k) * tail(k + 1)));

    out.remainder = LowerTable::build(
        size,
        [&](std::size_t mm, std::size_t k) {
            if (k < mm) return count(k + 1) * gap(k) * tail(mm);
            return count(mm + 1) * (gap(mm) * tail(mm) + a.get(mm) / tau(mm + 1));
        },
        "W(aydin_basar)");

    out.abs_sums.reserve(size);
    for (std::size_t mm = 0; mm < size; ++mm) {
        Scalar coeff_part = Scalar::zero(m);
        for (std::size_t k = 0; k < mm; ++k) coeff_part += count(k + 1) * gap(k).abs();
        Scalar acc = coeff_part * tail(mm).abs() + out.remainder.entry(mm, mm).abs();
        out.abs_sums.push_back(std::move(acc));
    }
    return out;
}

}  // namespace

ClosedFormCheck application_closed_forms(ClosedFormPreset which, const Scalar& alpha,
                                         const std::vector<SeqPrefix>& rows,
                                         std::size_t table_size) {
    if (rows.empty())
        throw std::invalid_argument("application_closed_forms: matrix needs at least one row");
    const Mode m = alpha.mode();
    PresetArgs args;
    args.alpha = alpha;
    ParamTriple p = preset(
        which == ClosedFormPreset::Euler ? PresetName::Euler : PresetName::AydinBasar, table_size,
        m, args);

    ClosedFormCheck check{transform_tables(p, rows, table_size), TransformTables{}, {}, {}, true, ""};

    for (std::size_t n = 0; n < rows.size(); ++n) {
        ClosedRow closed = which == ClosedFormPreset::Euler
                               ? euler_closed(alpha, rows[n], table_size)
                               : aydin_basar_closed(alpha, rows[n], table_size);
        std::vector<Scalar> abs_general;
        abs_general.reserve(table_size);
        for (std::size_t mm = 0; mm < table_size; ++mm) {
            Scalar acc = Scalar::zero(m);
            for (std::size_t k = 0; k <= mm; ++k)
                acc += check.general.remainders[n].entry(mm, k).abs();
            abs_general.push_back(std::move(acc));
        }

        auto flag = [&](const std::string& what, std::size_t i, std::size_t j) {
            if (check.equal) {
                check.equal = false;
                check.mismatch = what + " mismatch at row " + std::to_string(n) + ", (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
            }
        };
        for (std::size_t k = 0; k < table_size; ++k)
            if (check.general.dual_rows[n][k] != closed.coeffs[k]) flag("R", n, k);
        for (std::size_t mm = 0; mm < table_size; ++mm)
            for (std::size_t k = 0; k <= mm; ++k)
                if (check.general.remainders[n].entry(mm, k) != closed.remainder.entry(mm, k))
                    flag("W", mm, k);
        for (std::size_t mm = 0; mm < table_size; ++mm)
            if (abs_general[mm] != closed.abs_sums[mm]) flag("sum|w|", mm, 0);

        check.closed.dual_rows.emplace_back(std::move(closed.coeffs), Tail::Zero);
        check.closed.remainders.push_back(std::move(closed.remainder));
        check.closed.tail_limits.push_back(Scalar::zero(m));
        check.abs_sums_general.push_back(std::move(abs_general));
        check.abs_sums_closed.push_back(std::move(closed.abs_sums));
    }
    return check;
}

}  // namespace seqspace
