#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace seqspace {

/// Numeric mode of a Scalar. Exact values are canonical GMP rationals,
/// Float values are IEEE doubles. The two never mix in arithmetic.
enum class Mode { Exact, Float };

std::string_view mode_name(Mode m);
Mode mode_from_name(std::string_view name);

/// A two-mode scalar. Exact mode keeps every algebraic identity bit-exact;
/// Float mode serves asymptotic trend estimation. Any operation whose
/// operands disagree on mode throws std::invalid_argument instead of
/// coercing.
///
/// Exact values are always canonical: positive denominator, gcd(num, den) = 1
/// (maintained by GMP).
class Scalar {
public:
    /// Exact zero.
    Scalar() : v_(mpq_class(0)) {}

    static Scalar exact(long num, long den = 1);
    static Scalar exact(mpq_class q);
    static Scalar real(double d) { return Scalar(d); }
    static Scalar zero(Mode m);
    static Scalar one(Mode m);

    /// Parses "p/q", an integer, or a decimal literal with optional
    /// exponent ("-3.25e2"). In Exact mode decimals convert exactly over a
    /// power-of-ten denominator ("0.1" -> 1/10). Throws std::invalid_argument
    /// on malformed text.
    static Scalar parse(std::string_view text, Mode mode);

    Mode mode() const { return v_.index() == 0 ? Mode::Exact : Mode::Float; }
    bool is_exact() const { return mode() == Mode::Exact; }

    /// Underlying rational; throws in Float mode.
    const mpq_class& rational() const;
    /// Value as a double (nearest double of the rational in Exact mode).
    double value() const;

    bool is_zero() const;
    int sign() const;
    Scalar abs() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);  // throws std::domain_error on zero divisor

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Comparisons require matching modes.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;
    bool operator<=(const Scalar& o) const;
    bool operator>(const Scalar& o) const { return o < *this; }
    bool operator>=(const Scalar& o) const { return o <= *this; }

    /// "p/q" (or plain integer) in Exact mode, shortest round-trip decimal
    /// in Float mode.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}
    explicit Scalar(double d) : v_(d) {}

    void require_same_mode(const Scalar& o, const char* op) const;

    std::variant<mpq_class, double> v_;
};

const Scalar& max(const Scalar& a, const Scalar& b);
const Scalar& min(const Scalar& a, const Scalar& b);

}  // namespace seqspace
