#pragma once

#include <optional>
#include <string_view>

#include "seqspace/sequence.hpp"
#include "seqspace/triangle.hpp"

namespace seqspace {

/// Parameter triple (r, s, t) of a weighted-mean method: equal-length
/// prefixes in one mode with r_n != 0, t_n != 0 for all n and s_0 != 0.
class ParamTriple {
public:
    ParamTriple(SeqPrefix r, SeqPrefix s, SeqPrefix t);

    std::size_t length() const { return r_.length(); }
    Mode mode() const { return r_.mode(); }
    const SeqPrefix& r() const { return r_; }
    const SeqPrefix& s() const { return s_; }
    const SeqPrefix& t() const { return t_; }

private:
    SeqPrefix r_, s_, t_;
};

/// Coefficients D_0, ..., D_{n-1} of the convolution inverse of s, up to
/// sign: with c the reciprocal power series of s (sum c_m x^m = 1 / sum
/// s_m x^m), D_m = (-1)^m c_m. D_0 = 1/s_0 and for m >= 1 the convolution
/// identity sum_{k=0}^{m} s_k (-1)^{m-k} D_{m-k} = 0 holds.
struct DCoeffs {
    std::vector<Scalar> values;
    SeqPrefix source;

    const Scalar& operator[](std::size_t i) const { return values[i]; }
    std::size_t count() const { return values.size(); }
};

/// O(n^2) convolution recurrence: c_0 = 1/s_0, c_m = -(1/s_0) sum_{k=1}^{m}
/// s_k c_{m-k}. Requires s_0 != 0 and n <= s.length.
DCoeffs d_coeffs(const SeqPrefix& s, std::size_t n);

/// The named triangles of the method.
///   Mean                  weighted-mean matrix, entries s_{n-k} t_k / r_n
///   MeanInverse           its inverse, entries (-1)^{n-k} D_{n-k} r_k / t_n
///   MeanDifference        mean composed with the difference step
///   MeanDifferenceInverse inverse of MeanDifference
///   Difference            1 on the diagonal, -1 on the first subdiagonal
enum class TriangleKind { Mean, MeanInverse, MeanDifference, MeanDifferenceInverse, Difference };

/// CLI names: A, B, T, S, Delta.
TriangleKind triangle_kind_from_name(std::string_view name);
std::string_view triangle_kind_name(TriangleKind kind);

/// Closed-form construction at a given truncation size (size <= p.length).
Triangle build_triangle(const ParamTriple& p, TriangleKind kind, std::size_t size);

/// y_n = (1/r_n) sum_{k=0}^{n} s_{n-k} t_k (x_k - x_{k-1}), x_{-1} = 0.
SeqPrefix forward_transform(const ParamTriple& p, const SeqPrefix& x);

/// x_n = sum_{j=0}^{n} sum_{k=0}^{n-j} (-1)^k (D_k / t_{k+j}) r_j y_j; the
/// exact inverse of forward_transform on prefixes.
SeqPrefix inverse_transform(const ParamTriple& p, const SeqPrefix& y);

/// Truncated space norm: max_n |(forward_transform x)_n|.
Scalar space_norm(const ParamTriple& p, const SeqPrefix& x);

/// Named parameter presets.
///   PolatUV    r_n = 1/u_n, t_n = v_n, s_n = 1
///   Cesaro     r_n = n+1, s_n = t_n = 1
///   Euler      r_n = 1/n!, t_n = alpha^n/n!, s_n = (1-alpha)^n/n!
///   AydinBasar r_n = n+1, t_n = 1 + alpha^n, s_n = 1
enum class PresetName { PolatUV, Cesaro, Euler, AydinBasar };

PresetName preset_from_name(std::string_view name);
std::string_view preset_name(PresetName name);

struct PresetArgs {
    std::optional<Scalar> alpha;  // Euler / AydinBasar, 0 < alpha < 1
    std::optional<SeqPrefix> u;   // PolatUV, nonzero entries
    std::optional<SeqPrefix> v;   // PolatUV, nonzero entries
};

ParamTriple preset(PresetName name, std::size_t length, Mode mode, const PresetArgs& args = {});

}  // namespace seqspace
