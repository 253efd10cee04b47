#include "seqspace/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace seqspace {

BasisVector basis_vector(const ParamTriple& p, long j, std::size_t size) {
    if (j < -1) throw std::invalid_argument("basis index must be >= -1");
    if (size == 0 || size > p.length())
        throw std::invalid_argument("basis prefix size must be in [1, parameter length]");
    if (j >= 0 && static_cast<std::size_t>(j) >= size)
        throw std::invalid_argument("basis index " + std::to_string(j) +
                                    " outside truncation of size " + std::to_string(size));

    const Mode m = p.mode();
    const SeqPrefix &r = p.r(), &t = p.t();
    DCoeffs d = d_coeffs(p.s(), size);

    // sum_{k=0}^{n-j} (-1)^k D_k / t_{k+j} * r_j
    auto entry = [&](std::size_t n, std::size_t jj) {
        Scalar acc = Scalar::zero(m);
        for (std::size_t k = 0; k + jj <= n; ++k) {
            Scalar term = d[k] / t[k + jj] * r[jj];
            acc += k % 2 == 0 ? term : -term;
        }
        return acc;
    };

    std::vector<Scalar> prefix;
    prefix.reserve(size);
    for (std::size_t n = 0; n < size; ++n) {
        if (j >= 0) {
            prefix.push_back(static_cast<std::size_t>(j) <= n ? entry(n, static_cast<std::size_t>(j))
                                                              : Scalar::zero(m));
        } else {
            Scalar acc = Scalar::zero(m);
            for (std::size_t jj = 0; jj <= n; ++jj) acc += entry(n, jj);
            prefix.push_back(std::move(acc));
        }
    }
    return BasisVector{j, SeqPrefix(std::move(prefix))};
}

namespace {

// Stabilization heuristic for the limit of mu: the trailing values agree
// exactly (Exact mode) or within eps (Float mode).
std::optional<Scalar> stabilized_limit(const SeqPrefix& mu) {
    const std::size_t window = 4;
    const double eps = 1e-9;
    if (mu.length() < window) return std::nullopt;
    const Scalar& last = mu[mu.length() - 1];
    for (std::size_t i = mu.length() - window; i < mu.length(); ++i) {
        Scalar diff = mu[i] - last;
        if (diff.is_exact() ? !diff.is_zero() : std::fabs(diff.value()) > eps)
            return std::nullopt;
    }
    return last;
}

}  // namespace

ExpansionResult expand(const ParamTriple& p, const SeqPrefix& x) {
    SeqPrefix mu = forward_transform(p, x);
    std::optional<Scalar> limit = stabilized_limit(mu);
    return ExpansionResult{std::move(mu), limit, limit.has_value(), x};
}

ExpansionResult expand(const ParamTriple& p, const SeqPrefix& x, Scalar limit) {
    return ExpansionResult{forward_transform(p, x), std::move(limit), false, x};
}

Reconstruction reconstruct(const ParamTriple& p, const ExpansionResult& e, std::size_t order,
                           ReconstructionForm form) {
    const SeqPrefix& mu = e.coefficients;
    const std::size_t size = mu.length();
    if (order >= size) throw std::invalid_argument("reconstruction order must be < prefix length");
    if (form == ReconstructionForm::WithLimit && !e.limit)
        throw std::invalid_argument("convergent-space reconstruction needs a limit value");

    SeqPrefix partial = SeqPrefix::zeros(size, mu.mode());
    if (form == ReconstructionForm::WithLimit)
        partial = scale(*e.limit, basis_vector(p, -1, size).prefix);

    std::vector<Scalar> residuals;
    residuals.reserve(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
        Scalar coeff = form == ReconstructionForm::WithLimit ? mu[j] - *e.limit : mu[j];
        partial = add(partial, scale(coeff, basis_vector(p, static_cast<long>(j), size).prefix));
        if (e.source) residuals.push_back(space_norm(p, sub(*e.source, partial)));
    }
    return Reconstruction{std::move(partial), std::move(residuals)};
}

}  // namespace seqspace
