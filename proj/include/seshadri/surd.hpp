#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "seshadri/rational.hpp"

namespace seshadri {

/// Exact real number coeff * sqrt(radicand) with a square-free radicand.
///
/// Zero is stored as 0 * sqrt(1), so radicand() == 1 exactly when the value
/// is rational.
class SurdValue
{
public:
    SurdValue();
    /// The rational value q.
    explicit SurdValue(const Rat& q);
    /// coeff * sqrt(radicand); square factors of the radicand move into the
    /// coefficient. radicand must be >= 0.
    SurdValue(const Rat& coeff, const BigInt& radicand);

    static SurdValue sqrt(const Rat& q);

    const Rat& coeff() const { return coeff_; }
    const BigInt& radicand() const { return radicand_; }
    bool is_rational() const { return radicand_ == 1; }
    int sign() const { return sgn(coeff_); }

    SurdValue operator*(const Rat& q) const;
    SurdValue operator/(const Rat& q) const;
    SurdValue operator-() const;

    /// Exact product; the radicands may differ.
    friend SurdValue operator*(const SurdValue& a, const SurdValue& b);

    /// Structural equality coincides with numeric equality because the form is canonical.
    friend bool operator==(const SurdValue&, const SurdValue&) = default;

    /// "3", "2/5", "sqrt(7)", "1/10*sqrt(10)".
    std::string to_string() const;

    /// Display-only decimal expansion truncated to `digits` significant digits.
    std::string to_decimal(int digits = 20) const;

private:
    Rat coeff_;
    BigInt radicand_;
};

/// Exact ordering of the real numbers a and b.
std::strong_ordering surd_compare(const SurdValue& a, const SurdValue& b);

inline std::strong_ordering operator<=>(const SurdValue& a, const SurdValue& b)
{
    return surd_compare(a, b);
}

/// Splits v >= 0 as v = s^2 * f with f square-free; returns {s, f}.
std::pair<BigInt, BigInt> square_free_split(const BigInt& v);

/// Parses "a/b", "sqrt(s)", "a/b*sqrt(s)", "sqrt(s)/b". Throws std::invalid_argument.
SurdValue parse_surd(std::string_view text);

} // namespace seshadri
