#include "seshadri/rational.hpp"

#include <stdexcept>

namespace seshadri {

Rat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool valid_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

BigInt parse_integer(std::string_view s)
{
    if (!valid_integer_literal(s)) {
        throw std::invalid_argument("not an integer literal: '" + std::string(s) + "'");
    }
    if (s.front() == '+') {
        s.remove_prefix(1);
    }
    return BigInt(std::string(s), 10);
}

} // namespace

Rat parse_rat(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_integer(text));
    }
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return make_rat(parse_integer(text.substr(0, slash)), den);
}

std::string to_string(const Rat& q)
{
    return q.get_str(10);
}

std::string to_string(const BigInt& z)
{
    return z.get_str(10);
}

bool is_integer(const Rat& q)
{
    return q.get_den() == 1;
}

std::int64_t to_int64(const BigInt& z)
{
    if (!z.fits_slong_p()) {
        throw std::domain_error("integer out of 64-bit range: " + to_string(z));
    }
    return static_cast<std::int64_t>(z.get_si());
}

std::int64_t to_int64(const Rat& q)
{
    if (!is_integer(q)) {
        throw std::domain_error("expected an integral rational, got " + to_string(q));
    }
    return to_int64(BigInt(q.get_num()));
}

BigInt isqrt_floor(const BigInt& v)
{
    if (v < 0) {
        throw std::domain_error("isqrt of a negative integer");
    }
    if (v < 2) {
        return v;
    }
    // Start above the root; Newton then decreases monotonically to floor(sqrt(v)).
    BigInt x = BigInt(1) << ((mpz_sizeinbase(v.get_mpz_t(), 2) + 1) / 2 + 1);
    while (true) {
        BigInt y = (x + v / x) / 2;
        if (y >= x) {
            return x;
        }
        x = y;
    }
}

BigInt isqrt_ceil(const BigInt& v)
{
    BigInt s = isqrt_floor(v);
    if (s * s < v) {
        ++s;
    }
    return s;
}

bool is_perfect_square(const BigInt& v)
{
    if (v < 0) {
        return false;
    }
    const BigInt s = isqrt_floor(v);
    return s * s == v;
}

} // namespace seshadri
