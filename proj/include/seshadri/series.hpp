#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <string>
#include <utility>

#include "seshadri/rational.hpp"

namespace seshadri {

/// Truncation order of a series. A series of precision T knows every
/// coefficient of total degree < T; kExact marks a polynomial.
using Precision = int;
inline constexpr Precision kExact = std::numeric_limits<int>::max();

/// Saturating sum: anything plus kExact stays kExact.
Precision precision_add(Precision a, Precision b);
Precision precision_sub(Precision a, int b);
/// Saturating k * v for k >= 0.
Precision precision_scale(int k, Precision v);

/// Either a certified order, or a lower bound "at least value" when every
/// tracked coefficient vanished.
struct Valuation
{
    int value = 0;
    bool determinate = true;

    static Valuation exactly(int v) { return {v, true}; }
    static Valuation at_least(int v) { return {v, false}; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    std::string to_string() const;
};

struct Monomial
{
    int x = 0;
    int y = 0;

    int degree() const { return x + y; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Truncated univariate series in x with explicit precision.
class UniSeries
{
public:
    using Terms = std::map<int, Rat>;

    UniSeries() = default;
    /// The zero series known to order `precision`.
    static UniSeries zero(Precision precision);
    UniSeries(Terms terms, Precision precision = kExact);
    UniSeries(std::initializer_list<Terms::value_type> terms, Precision precision = kExact)
        : UniSeries(Terms(terms), precision)
    {
    }

    static UniSeries monomial(const Rat& c, int e, Precision precision = kExact);

    const Terms& terms() const { return terms_; }
    Precision precision() const { return precision_; }
    bool is_exact() const { return precision_ == kExact; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int e) const;
    /// Largest tracked exponent; -1 for zero.
    int degree() const;

    UniSeries truncated(Precision precision) const;

    friend UniSeries operator+(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator-(const UniSeries& a, const UniSeries& b);
    friend UniSeries operator*(const UniSeries& a, const UniSeries& b);
    UniSeries operator-() const;
    UniSeries scaled(const Rat& c) const;

    friend bool operator==(const UniSeries&, const UniSeries&) = default;

    std::string to_string() const;

private:
    Terms terms_;
    Precision precision_ = kExact;
};

/// Truncated bivariate series in (x, y) over Rat.
///
/// Sparse normal form: no stored zero coefficient, no stored monomial of
/// total degree >= precision().
class BiSeries
{
public:
    using Terms = std::map<Monomial, Rat>;

    BiSeries() = default;
    /// The zero series known to total degree `precision`.
    static BiSeries zero(Precision precision);
    BiSeries(Terms terms, Precision precision = kExact);
    BiSeries(std::initializer_list<Terms::value_type> terms, Precision precision = kExact)
        : BiSeries(Terms(terms), precision)
    {
    }

    static BiSeries monomial(const Rat& c, int p, int q, Precision precision = kExact);
    static BiSeries x() { return monomial(1, 1, 0); }
    static BiSeries y() { return monomial(1, 0, 1); }
    static BiSeries constant(const Rat& c) { return monomial(c, 0, 0); }
    /// g(x) viewed as a series in (x, y).
    static BiSeries from_x(const UniSeries& g);

    const Terms& terms() const { return terms_; }
    Precision precision() const { return precision_; }
    bool is_exact() const { return precision_ == kExact; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int p, int q) const;
    Rat constant_term() const { return coeff(0, 0); }
    /// Largest total degree among stored terms; -1 for zero.
    int total_degree() const;
    /// Largest y-exponent among stored terms; -1 for zero.
    int y_degree() const;

    /// Minimal total degree of a nonzero tracked term, i.e. the
    /// multiplicity at the origin; "at least precision" when none is tracked.
    Valuation order() const;

    BiSeries truncated(Precision precision) const;

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator-(const BiSeries& a, const BiSeries& b);
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
    BiSeries operator-() const;
    BiSeries scaled(const Rat& c) const;

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

    /// "x^5 + y^2", "-2/3*x*y + O(12)".
    std::string to_string() const;

private:
    Terms terms_;
    Precision precision_ = kExact;
};

/// Product truncated to min(f.precision(), g.precision()).
BiSeries series_mul(const BiSeries& f, const BiSeries& g);

/// f(X(x,y), Y(x,y)) for X, Y without constant term.
///
/// The result precision is the largest one certified by the precisions of
/// f, X and Y; terms of f that cannot be certified lower it. Throws
/// std::invalid_argument when X or Y has a nonzero (or unknown) constant term.
BiSeries compose(const BiSeries& f, const BiSeries& X, const BiSeries& Y);

/// f(x, g(x)). Requires g(0) = 0, otherwise throws std::invalid_argument
/// (the caller must translate coordinates first).
UniSeries series_substitute_y(const BiSeries& f, const UniSeries& g);

/// Least exponent with nonzero coefficient, or "at least precision" when
/// every tracked coefficient vanishes.
Valuation ord_x(const UniSeries& s);

} // namespace seshadri
