#include "seqspace/genmeans.hpp"

#include <cmath>
#include <stdexcept>

namespace seqspace {

ParamTriple::ParamTriple(SeqPrefix r, SeqPrefix s, SeqPrefix t)
    : r_(std::move(r)), s_(std::move(s)), t_(std::move(t)) {
    if (r_.length() != s_.length() || r_.length() != t_.length())
        throw std::invalid_argument("parameter prefixes r, s, t must have equal length");
    if (r_.mode() != s_.mode() || r_.mode() != t_.mode())
        throw std::invalid_argument("parameter prefixes r, s, t must share one mode");
    for (std::size_t n = 0; n < r_.length(); ++n) {
        if (r_[n].is_zero())
            throw std::invalid_argument("r_" + std::to_string(n) + " = 0: r must have no zero entries");
        if (t_[n].is_zero())
            throw std::invalid_argument("t_" + std::to_string(n) + " = 0: t must have no zero entries");
    }
    if (s_[0].is_zero()) throw std::invalid_argument("s_0 = 0: s must start nonzero");
}

DCoeffs d_coeffs(const SeqPrefix& s, std::size_t n) {
    if (s[0].is_zero()) throw std::invalid_argument("d_coeffs: s_0 = 0");
    if (n == 0 || n > s.length())
        throw std::invalid_argument("d_coeffs: count must be in [1, s.length]");
    const Mode m = s.mode();
    std::vector<Scalar> c;
    c.reserve(n);
    c.push_back(Scalar::one(m) / s[0]);
    for (std::size_t i = 1; i < n; ++i) {
        Scalar acc = Scalar::zero(m);
        for (std::size_t k = 1; k <= i; ++k) acc += s[k] * c[i - k];
        c.push_back(-(acc / s[0]));
    }
    std::vector<Scalar> d;
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i) d.push_back(i % 2 == 0 ? c[i] : -c[i]);
    return DCoeffs{std::move(d), s};
}

TriangleKind triangle_kind_from_name(std::string_view name) {
    if (name == "A") return TriangleKind::Mean;
    if (name == "B") return TriangleKind::MeanInverse;
    if (name == "T") return TriangleKind::MeanDifference;
    if (name == "S") return TriangleKind::MeanDifferenceInverse;
    if (name == "Delta") return TriangleKind::Difference;
    throw std::invalid_argument("unknown triangle kind '" + std::string(name) +
                                "' (expected A|B|T|S|Delta)");
}

std::string_view triangle_kind_name(TriangleKind kind) {
    switch (kind) {
        case TriangleKind::Mean: return "A";
        case TriangleKind::MeanInverse: return "B";
        case TriangleKind::MeanDifference: return "T";
        case TriangleKind::MeanDifferenceInverse: return "S";
        case TriangleKind::Difference: return "Delta";
    }
    return "?";
}

Triangle build_triangle(const ParamTriple& p, TriangleKind kind, std::size_t size) {
    if (size == 0) throw std::invalid_argument("build_triangle: size must be >= 1");
    if (size > p.length())
        throw std::invalid_argument("build_triangle: truncation exceeds parameter prefix length");
    const Mode m = p.mode();
    const SeqPrefix &r = p.r(), &s = p.s(), &t = p.t();

    switch (kind) {
        case TriangleKind::Mean:
            return Triangle::build(
                size, [&](std::size_t n, std::size_t k) { return s[n - k] * t[k] / r[n]; }, "A");

        case TriangleKind::MeanInverse: {
            DCoeffs d = d_coeffs(s, size);
            return Triangle::build(
                size,
                [&](std::size_t n, std::size_t k) {
                    Scalar v = d[n - k] * r[k] / t[n];
                    return (n - k) % 2 == 0 ? v : -v;
                },
                "B");
        }

        case TriangleKind::MeanDifference:
            // Mean * Difference: the k-th column pairs s_{n-k} t_k with the
            // next mean weight s_{n-k-1} t_{k+1}.
            return Triangle::build(
                size,
                [&](std::size_t n, std::size_t k) {
                    if (k == n) return s[0] * t[n] / r[n];
                    return (s[n - k] * t[k] - s[n - k - 1] * t[k + 1]) / r[n];
                },
                "T");

        case TriangleKind::MeanDifferenceInverse: {
            DCoeffs d = d_coeffs(s, size);
            return Triangle::build(
                size,
                [&](std::size_t n, std::size_t k) {
                    Scalar acc = Scalar::zero(m);
                    for (std::size_t l = 0; l <= n - k; ++l) {
                        Scalar term = d[l] * r[k] / t[l + k];
                        acc += l % 2 == 0 ? term : -term;
                    }
                    return acc;
                },
                "S");
        }

        case TriangleKind::Difference:
            return Triangle::build(
                size,
                [&](std::size_t n, std::size_t k) {
                    if (k == n) return Scalar::one(m);
                    if (k + 1 == n) return -Scalar::one(m);
                    return Scalar::zero(m);
                },
                "Delta");
    }
    throw std::logic_error("unreachable triangle kind");
}

SeqPrefix forward_transform(const ParamTriple& p, const SeqPrefix& x) {
    if (x.length() > p.length())
        throw std::invalid_argument("forward_transform: input longer than parameter prefixes");
    return apply(build_triangle(p, TriangleKind::MeanDifference, x.length()), x);
}

SeqPrefix inverse_transform(const ParamTriple& p, const SeqPrefix& y) {
    if (y.length() > p.length())
        throw std::invalid_argument("inverse_transform: input longer than parameter prefixes");
    return apply(build_triangle(p, TriangleKind::MeanDifferenceInverse, y.length()), y);
}

Scalar space_norm(const ParamTriple& p, const SeqPrefix& x) {
    return forward_transform(p, x).sup_abs();
}

PresetName preset_from_name(std::string_view name) {
    if (name == "polat_uv") return PresetName::PolatUV;
    if (name == "cesaro") return PresetName::Cesaro;
    if (name == "euler") return PresetName::Euler;
    if (name == "aydin_basar") return PresetName::AydinBasar;
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected polat_uv|cesaro|euler|aydin_basar)");
}

std::string_view preset_name(PresetName name) {
    switch (name) {
        case PresetName::PolatUV: return "polat_uv";
        case PresetName::Cesaro: return "cesaro";
        case PresetName::Euler: return "euler";
        case PresetName::AydinBasar: return "aydin_basar";
    }
    return "?";
}

namespace {

Scalar checked_alpha(const PresetArgs& args, Mode mode, const char* who) {
    if (!args.alpha) throw std::invalid_argument(std::string(who) + " preset requires alpha");
    Scalar a = *args.alpha;
    if (a.mode() != mode)
        throw std::invalid_argument(std::string(who) + " preset: alpha mode differs from requested mode");
    if (!(Scalar::zero(mode) < a) || !(a < Scalar::one(mode)))
        throw std::invalid_argument(std::string(who) + " preset: alpha must lie in (0, 1)");
    return a;
}

Scalar pow_nat(const Scalar& base, std::size_t e, Mode mode) {
    Scalar acc = Scalar::one(mode);
    for (std::size_t i = 0; i < e; ++i) acc *= base;
    return acc;
}

Scalar factorial(std::size_t n, Mode mode) {
    if (mode == Mode::Float) {
        double f = 1.0;
        for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
        return Scalar::real(f);
    }
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Scalar::exact(mpq_class(f));
}

Scalar count_scalar(std::size_t n, Mode mode) {
    return mode == Mode::Float ? Scalar::real(static_cast<double>(n))
                               : Scalar::exact(mpq_class(static_cast<unsigned long>(n)));
}

}  // namespace

ParamTriple preset(PresetName name, std::size_t length, Mode mode, const PresetArgs& args) {
    if (length == 0) throw std::invalid_argument("preset length must be >= 1");
    std::vector<Scalar> r, s, t;
    r.reserve(length), s.reserve(length), t.reserve(length);

    switch (name) {
        case PresetName::PolatUV: {
            if (!args.u || !args.v)
                throw std::invalid_argument("polat_uv preset requires u and v prefixes");
            const SeqPrefix &u = *args.u, &v = *args.v;
            if (u.length() < length || v.length() < length)
                throw std::invalid_argument("polat_uv preset: u, v shorter than requested length");
            if (u.mode() != mode || v.mode() != mode)
                throw std::invalid_argument("polat_uv preset: u, v mode differs from requested mode");
            for (std::size_t n = 0; n < length; ++n) {
                if (u[n].is_zero() || v[n].is_zero())
                    throw std::invalid_argument("polat_uv preset: zero entry in u or v at index " +
                                                std::to_string(n));
                r.push_back(Scalar::one(mode) / u[n]);
                s.push_back(Scalar::one(mode));
                t.push_back(v[n]);
            }
            break;
        }
        case PresetName::Cesaro:
            for (std::size_t n = 0; n < length; ++n) {
                r.push_back(count_scalar(n + 1, mode));
                s.push_back(Scalar::one(mode));
                t.push_back(Scalar::one(mode));
            }
            break;
        case PresetName::Euler: {
            Scalar a = checked_alpha(args, mode, "euler");
            Scalar b = Scalar::one(mode) - a;  // 1 - alpha
            for (std::size_t n = 0; n < length; ++n) {
                Scalar nf = factorial(n, mode);
                r.push_back(Scalar::one(mode) / nf);
                s.push_back(pow_nat(b, n, mode) / nf);
                t.push_back(pow_nat(a, n, mode) / nf);
            }
            break;
        }
        case PresetName::AydinBasar: {
            Scalar a = checked_alpha(args, mode, "aydin_basar");
            for (std::size_t n = 0; n < length; ++n) {
                r.push_back(count_scalar(n + 1, mode));
                s.push_back(Scalar::one(mode));
                t.push_back(Scalar::one(mode) + pow_nat(a, n, mode));
            }
            break;
        }
    }
    return ParamTriple(SeqPrefix(std::move(r)), SeqPrefix(std::move(s)), SeqPrefix(std::move(t)));
}

}  // namespace seqspace
