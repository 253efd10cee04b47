#pragma once

// Shared generators and oracles for the test suites. Everything here is
// test-only and independent of the library's computation paths it checks.

#include <random>
#include <vector>

#include "seqspace/genmeans.hpp"

namespace testsupport {

using namespace seqspace;

inline Scalar rand_rational(std::mt19937_64& rng, bool nonzero = false, long max_num = 4,
                            long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    long n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Scalar::exact(n, den(rng));
}

inline SeqPrefix rand_prefix(std::mt19937_64& rng, std::size_t len, Tail tail = Tail::Unknown) {
    std::vector<Scalar> e;
    e.reserve(len);
    for (std::size_t i = 0; i < len; ++i) e.push_back(rand_rational(rng));
    return SeqPrefix(std::move(e), tail);
}

inline ParamTriple rand_params(std::mt19937_64& rng, std::size_t len) {
    std::vector<Scalar> r, s, t;
    for (std::size_t i = 0; i < len; ++i) {
        r.push_back(rand_rational(rng, true));
        s.push_back(rand_rational(rng, i == 0));
        t.push_back(rand_rational(rng, true));
    }
    return ParamTriple(SeqPrefix(std::move(r)), SeqPrefix(std::move(s)), SeqPrefix(std::move(t)));
}

/// Finitely supported prefix of length len with support bound <= max_support
/// (at least one nonzero entry).
inline SeqPrefix rand_supported(std::mt19937_64& rng, std::size_t len, std::size_t max_support) {
    std::vector<Scalar> e(len, Scalar::zero(Mode::Exact));
    std::uniform_int_distribution<std::size_t> pick(0, max_support);
    std::size_t nonzero_at = pick(rng);
    for (std::size_t i = 0; i <= max_support && i < len; ++i) e[i] = rand_rational(rng);
    e[nonzero_at] = rand_rational(rng, true);
    return SeqPrefix(std::move(e), Tail::Zero);
}

inline ParamTriple ones_params(std::size_t len) {
    return ParamTriple(SeqPrefix::ones(len, Mode::Exact), SeqPrefix::ones(len, Mode::Exact),
                       SeqPrefix::ones(len, Mode::Exact));
}

/// Laplace-expansion determinant, exact; fine for n <= 6.
inline Scalar determinant(const std::vector<std::vector<Scalar>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    Scalar acc = Scalar::zero(Mode::Exact);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Scalar>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Scalar> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Scalar term = m[0][j] * determinant(minor);
        acc += j % 2 == 0 ? term : -term;
    }
    return acc;
}

/// The banded-Toeplitz determinant display defining the D coefficients:
/// D_n = det(M_n) / s_0^{n+1} with M_n[i][j] = s_{i-j+1} (s_k = 0 for k < 0).
inline Scalar d_by_determinant(const SeqPrefix& s, std::size_t n) {
    if (n == 0) return Scalar::one(Mode::Exact) / s[0];
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar::zero(Mode::Exact)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long idx = static_cast<long>(i) - static_cast<long>(j) + 1;
            if (idx >= 0 && static_cast<std::size_t>(idx) < s.length())
                m[i][j] = s[static_cast<std::size_t>(idx)];
        }
    Scalar pow = Scalar::one(Mode::Exact);
    for (std::size_t i = 0; i <= n; ++i) pow *= s[0];
    return determinant(m) / pow;
}

}  // namespace testsupport
