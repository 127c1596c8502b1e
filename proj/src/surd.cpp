#include "seshadri/surd.hpp"

#include <stdexcept>
#include <string>

namespace seshadri {

std::pair<BigInt, BigInt> square_free_split(const BigInt& v)
{
    if (v < 0) {
        throw std::domain_error("negative radicand");
    }
    if (v == 0) {
        return {0, 1};
    }
    BigInt rest = v;
    BigInt outside = 1;
    BigInt inside = 1;
    auto strip = [&](const BigInt& p) {
        int e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) {
            outside *= p;
        }
        if (e % 2 == 1) {
            inside *= p;
        }
    };
    strip(2);
    for (BigInt p = 3; p * p <= rest; p += 2) {
        strip(p);
    }
    // Whatever remains is 1 or a prime.
    inside *= rest;
    return {outside, inside};
}

SurdValue::SurdValue() : coeff_(0), radicand_(1) {}

SurdValue::SurdValue(const Rat& q) : coeff_(q), radicand_(1) {}

SurdValue::SurdValue(const Rat& coeff, const BigInt& radicand)
{
    if (radicand < 0) {
        throw std::domain_error("negative radicand");
    }
    if (coeff == 0 || radicand == 0) {
        coeff_ = 0;
        radicand_ = 1;
        return;
    }
    auto [outside, inside] = square_free_split(radicand);
    coeff_ = coeff * outside;
    radicand_ = inside;
}

SurdValue SurdValue::sqrt(const Rat& q)
{
    if (q < 0) {
        throw std::domain_error("square root of a negative rational");
    }
    // sqrt(a/b) = sqrt(a*b) / b
    const BigInt num = q.get_num();
    const BigInt den = q.get_den();
    return SurdValue(make_rat(1, den), num * den);
}

SurdValue SurdValue::operator*(const Rat& q) const
{
    return SurdValue(coeff_ * q, radicand_);
}

SurdValue SurdValue::operator/(const Rat& q) const
{
    if (q == 0) {
        throw std::domain_error("surd divided by zero");
    }
    return SurdValue(coeff_ / q, radicand_);
}

SurdValue SurdValue::operator-() const
{
    return SurdValue(-coeff_, radicand_);
}

SurdValue operator*(const SurdValue& a, const SurdValue& b)
{
    return SurdValue(a.coeff_ * b.coeff_, a.radicand_ * b.radicand_);
}

std::string SurdValue::to_string() const
{
    if (is_rational()) {
        return seshadri::to_string(coeff_);
    }
    const std::string root = "sqrt(" + seshadri::to_string(radicand_) + ")";
    if (coeff_ == 1) {
        return root;
    }
    if (coeff_ == -1) {
        return "-" + root;
    }
    return seshadri::to_string(coeff_) + "*" + root;
}

std::string SurdValue::to_decimal(int digits) const
{
    if (digits < 1) {
        digits = 1;
    }
    if (coeff_ == 0) {
        return "0";
    }
    const BigInt num = abs(coeff_.get_num());
    const BigInt den = coeff_.get_den();
    // floor(|v| * 10^k) = isqrt(floor(num^2 * rad * 10^(2k) / den^2))
    auto scaled = [&](long k) {
        BigInt ten_k;
        mpz_ui_pow_ui(ten_k.get_mpz_t(), 10, static_cast<unsigned long>(k));
        BigInt top = num * num * radicand_ * ten_k * ten_k;
        BigInt bottom = den * den;
        return isqrt_floor(top / bottom);
    };
    long k = digits;
    BigInt t = scaled(k);
    for (int pass = 0; pass < 4; ++pass) {
        const long have = t == 0 ? 0 : static_cast<long>(t.get_str().size());
        if (have == digits) {
            break;
        }
        long next = k + (digits - have);
        if (have == 0) {
            next = k + digits;
        }
        if (next < 0) {
            next = 0;
        }
        if (next == k) {
            break;
        }
        k = next;
        t = scaled(k);
    }
    std::string s = t.get_str();
    if (k > 0) {
        if (static_cast<long>(s.size()) <= k) {
            s.insert(0, static_cast<std::size_t>(k) - s.size() + 1, '0');
        }
        s.insert(s.size() - static_cast<std::size_t>(k), 1, '.');
    }
    return (coeff_ < 0 ? "-" : "") + s;
}

std::strong_ordering surd_compare(const SurdValue& a, const SurdValue& b)
{
    const int sa = a.sign();
    const int sb = b.sign();
    if (sa != sb) {
        return sa <=> sb;
    }
    if (sa == 0) {
        return std::strong_ordering::equal;
    }
    // Same nonzero sign: compare squares, reversing for negatives.
    const Rat sq_a = a.coeff() * a.coeff() * Rat(a.radicand());
    const Rat sq_b = b.coeff() * b.coeff() * Rat(b.radicand());
    const int c = cmp(sq_a, sq_b);
    const int oriented = sa > 0 ? c : -c;
    return oriented <=> 0;
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace

SurdValue parse_surd(std::string_view text)
{
    text = trim(text);
    const auto at = text.find("sqrt(");
    if (at == std::string_view::npos) {
        return SurdValue(parse_rat(text));
    }
    const auto close = text.find(')', at);
    if (close == std::string_view::npos) {
        throw std::invalid_argument("unbalanced sqrt( in '" + std::string(text) + "'");
    }
    const Rat radicand = parse_rat(trim(text.substr(at + 5, close - at - 5)));
    if (!is_integer(radicand) || radicand < 0) {
        throw std::invalid_argument("sqrt argument must be a non-negative integer");
    }
    Rat coeff = 1;
    std::string_view before = trim(text.substr(0, at));
    if (!before.empty()) {
        if (before.back() != '*') {
            throw std::invalid_argument("expected '*' before sqrt in '" + std::string(text) + "'");
        }
        before.remove_suffix(1);
        coeff = parse_rat(trim(before));
    }
    std::string_view after = trim(text.substr(close + 1));
    if (!after.empty()) {
        if (after.front() != '/') {
            throw std::invalid_argument("unexpected trailing text in '" + std::string(text) + "'");
        }
        const Rat den = parse_rat(trim(after.substr(1)));
        if (den == 0) {
            throw std::invalid_argument("division by zero in '" + std::string(text) + "'");
        }
        coeff /= den;
    }
    return SurdValue(coeff, BigInt(radicand.get_num()));
}

} // namespace seshadri
