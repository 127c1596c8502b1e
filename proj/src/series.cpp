#include "seshadri/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace seshadri {

Precision precision_add(Precision a, Precision b)
{
    if (a == kExact || b == kExact) {
        return kExact;
    }
    const std::int64_t s = static_cast<std::int64_t>(a) + b;
    return s >= kExact ? kExact : static_cast<Precision>(s);
}

Precision precision_scale(int k, Precision v)
{
    if (k <= 0) {
        return 0;
    }
    if (v == kExact) {
        return kExact;
    }
    const std::int64_t s = static_cast<std::int64_t>(k) * v;
    return s >= kExact ? kExact : static_cast<Precision>(s);
}

Precision precision_sub(Precision a, int b)
{
    if (a == kExact) {
        return kExact;
    }
    return a - b;
}

std::string Valuation::to_string() const
{
    if (determinate) {
        return std::to_string(value);
    }
    if (value == kExact) {
        return ">=inf";
    }
    return ">=" + std::to_string(value);
}

// ---------------------------------------------------------------- UniSeries

UniSeries UniSeries::zero(Precision precision)
{
    return UniSeries(Terms{}, precision);
}

UniSeries::UniSeries(Terms terms, Precision precision) : precision_(precision)
{
    for (auto& [e, c] : terms) {
        if (e < 0) {
            throw std::invalid_argument("negative exponent in series");
        }
        if (c != 0 && e < precision_) {
            terms_.emplace(e, std::move(c));
        }
    }
}

UniSeries UniSeries::monomial(const Rat& c, int e, Precision precision)
{
    return UniSeries(Terms{{e, c}}, precision);
}

Rat UniSeries::coeff(int e) const
{
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int UniSeries::degree() const
{
    return terms_.empty() ? -1 : terms_.rbegin()->first;
}

UniSeries UniSeries::truncated(Precision precision) const
{
    return UniSeries(terms_, std::min(precision, precision_));
}

UniSeries operator+(const UniSeries& a, const UniSeries& b)
{
    UniSeries::Terms t = a.terms_;
    for (const auto& [e, c] : b.terms_) {
        t[e] += c;
    }
    return UniSeries(std::move(t), std::min(a.precision_, b.precision_));
}

UniSeries UniSeries::operator-() const
{
    return scaled(-1);
}

UniSeries operator-(const UniSeries& a, const UniSeries& b)
{
    return a + (-b);
}

UniSeries operator*(const UniSeries& a, const UniSeries& b)
{
    const Precision p = std::min(a.precision_, b.precision_);
    UniSeries::Terms t;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            if (ea + eb < p) {
                t[ea + eb] += ca * cb;
            }
        }
    }
    return UniSeries(std::move(t), p);
}

UniSeries UniSeries::scaled(const Rat& c) const
{
    Terms t;
    if (c != 0) {
        for (const auto& [e, v] : terms_) {
            t.emplace(e, v * c);
        }
    }
    return UniSeries(std::move(t), precision_);
}

namespace {

void append_term(std::ostringstream& os, bool first, const Rat& c, const std::string& mono)
{
    Rat shown = c;
    if (!first) {
        os << (c < 0 ? " - " : " + ");
        shown = abs(c);
    }
    if (mono.empty()) {
        os << to_string(shown);
    } else if (shown == 1) {
        os << mono;
    } else if (shown == -1) {
        os << "-" << mono;
    } else {
        os << to_string(shown) << "*" << mono;
    }
}

std::string power(const char* var, int e)
{
    if (e == 0) {
        return {};
    }
    return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
}

} // namespace

std::string UniSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        append_term(os, first, c, power("x", e));
        first = false;
    }
    if (first) {
        os << "0";
    }
    if (!is_exact()) {
        os << " + O(x^" << precision_ << ")";
    }
    return os.str();
}

Valuation ord_x(const UniSeries& s)
{
    if (s.is_zero()) {
        return Valuation::at_least(s.precision());
    }
    return Valuation::exactly(s.terms().begin()->first);
}

// ----------------------------------------------------------------- BiSeries

BiSeries BiSeries::zero(Precision precision)
{
    return BiSeries(Terms{}, precision);
}

BiSeries::BiSeries(Terms terms, Precision precision) : precision_(precision)
{
    for (auto& [m, c] : terms) {
        if (m.x < 0 || m.y < 0) {
            throw std::invalid_argument("negative exponent in series");
        }
        if (c != 0 && m.degree() < precision_) {
            terms_.emplace(m, std::move(c));
        }
    }
}

BiSeries BiSeries::monomial(const Rat& c, int p, int q, Precision precision)
{
    return BiSeries(Terms{{Monomial{p, q}, c}}, precision);
}

BiSeries BiSeries::from_x(const UniSeries& g)
{
    Terms t;
    for (const auto& [e, c] : g.terms()) {
        t.emplace(Monomial{e, 0}, c);
    }
    return BiSeries(std::move(t), g.precision());
}

Rat BiSeries::coeff(int p, int q) const
{
    const auto it = terms_.find(Monomial{p, q});
    return it == terms_.end() ? Rat(0) : it->second;
}

int BiSeries::total_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

int BiSeries::y_degree() const
{
    int d = -1;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.y);
    }
    return d;
}

Valuation BiSeries::order() const
{
    if (terms_.empty()) {
        return Valuation::at_least(precision_);
    }
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) {
        d = std::min(d, m.degree());
    }
    return Valuation::exactly(d);
}

BiSeries BiSeries::truncated(Precision precision) const
{
    return BiSeries(terms_, std::min(precision, precision_));
}

BiSeries operator+(const BiSeries& a, const BiSeries& b)
{
    BiSeries::Terms t = a.terms_;
    for (const auto& [m, c] : b.terms_) {
        t[m] += c;
    }
    return BiSeries(std::move(t), std::min(a.precision_, b.precision_));
}

BiSeries BiSeries::operator-() const
{
    return scaled(-1);
}

BiSeries operator-(const BiSeries& a, const BiSeries& b)
{
    return a + (-b);
}

namespace {

// Raw product of the stored terms, dropping total degree >= cap.
BiSeries::Terms multiply_terms(const BiSeries::Terms& a, const BiSeries::Terms& b, Precision cap)
{
    BiSeries::Terms t;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            const Monomial m{ma.x + mb.x, ma.y + mb.y};
            if (m.degree() < cap) {
                t[m] += ca * cb;
            }
        }
    }
    return t;
}

} // namespace

BiSeries operator*(const BiSeries& a, const BiSeries& b)
{
    const Precision p = std::min(a.precision_, b.precision_);
    return BiSeries(multiply_terms(a.terms_, b.terms_, p), p);
}

BiSeries series_mul(const BiSeries& f, const BiSeries& g)
{
    return f * g;
}

BiSeries BiSeries::scaled(const Rat& c) const
{
    Terms t;
    if (c != 0) {
        for (const auto& [m, v] : terms_) {
            t.emplace(m, v * c);
        }
    }
    return BiSeries(std::move(t), precision_);
}

std::string BiSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    // Graded order: by total degree, then decreasing power of x.
    std::vector<std::pair<Monomial, Rat>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
        if (l.first.degree() != r.first.degree()) {
            return l.first.degree() < r.first.degree();
        }
        return l.first.x > r.first.x;
    });
    for (const auto& [m, c] : sorted) {
        std::string mono = power("x", m.x);
        const std::string ym = power("y", m.y);
        if (!mono.empty() && !ym.empty()) {
            mono += "*";
        }
        mono += ym;
        append_term(os, first, c, mono);
        first = false;
    }
    if (first) {
        os << "0";
    }
    if (!is_exact()) {
        os << " + O(" << precision_ << ")";
    }
    return os.str();
}

// -------------------------------------------------------------- composition

namespace {

// Order of a substituted series: exact lowest degree if known, else its precision.
Precision effective_order(const BiSeries& s)
{
    const Valuation v = s.order();
    return v.value;
}

void require_no_constant(const BiSeries& s, const char* which)
{
    if (s.precision() < 1) {
        throw std::invalid_argument(std::string(which) + " has unknown constant term");
    }
    if (s.constant_term() != 0) {
        throw std::invalid_argument(std::string(which) + " has a nonzero constant term");
    }
}

} // namespace

BiSeries compose(const BiSeries& f, const BiSeries& X, const BiSeries& Y)
{
    require_no_constant(X, "x-substitution");
    require_no_constant(Y, "y-substitution");

    const Precision vx = effective_order(X);
    const Precision vy = effective_order(Y);

    // Every unknown term of f has degree >= f.precision() and maps to order
    // >= that, since vx, vy >= 1. Each known term x^p y^q is certified up to
    // the first degree where the unknown tails of X or Y can contribute.
    Precision result = f.precision();
    for (const auto& [m, c] : f.terms()) {
        if (m.x > 0 && X.precision() != kExact) {
            Precision bound = X.precision();
            bound = precision_add(bound, precision_scale(m.x - 1, vx));
            bound = precision_add(bound, precision_scale(m.y, vy));
            result = std::min(result, bound);
        }
        if (m.y > 0 && Y.precision() != kExact) {
            Precision bound = Y.precision();
            bound = precision_add(bound, precision_scale(m.x, vx));
            bound = precision_add(bound, precision_scale(m.y - 1, vy));
            result = std::min(result, bound);
        }
    }

    std::vector<BiSeries::Terms> xpow{BiSeries::Terms{{Monomial{0, 0}, Rat(1)}}};
    std::vector<BiSeries::Terms> ypow{BiSeries::Terms{{Monomial{0, 0}, Rat(1)}}};
    auto power_of = [&](std::vector<BiSeries::Terms>& cache, const BiSeries& base, int e) -> const BiSeries::Terms& {
        while (static_cast<int>(cache.size()) <= e) {
            cache.push_back(multiply_terms(cache.back(), base.terms(), result));
        }
        return cache[static_cast<std::size_t>(e)];
    };

    BiSeries::Terms out;
    for (const auto& [m, c] : f.terms()) {
        const auto& px = power_of(xpow, X, m.x);
        const auto& py = power_of(ypow, Y, m.y);
        for (const auto& [mm, cc] : multiply_terms(px, py, result)) {
            out[mm] += c * cc;
        }
    }
    return BiSeries(std::move(out), result);
}

UniSeries series_substitute_y(const BiSeries& f, const UniSeries& g)
{
    if (g.precision() >= 1 && g.coeff(0) != 0) {
        throw std::invalid_argument("branch series has a nonzero constant term; translate coordinates first");
    }
    const BiSeries composed = compose(f, BiSeries::x(), BiSeries::from_x(g));
    UniSeries::Terms t;
    for (const auto& [m, c] : composed.terms()) {
        t.emplace(m.x, c);
    }
    return UniSeries(std::move(t), composed.precision());
}

} // namespace seshadri
