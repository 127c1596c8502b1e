#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "seshadri/cluster.hpp"
#include "seshadri/series.hpp"

namespace seshadri {

class ParseError : public std::invalid_argument
{
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at offset " + std::to_string(position)), position_(position)
    {
    }

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses a polynomial in x and y with rational coefficients:
///
///   poly   = [sign] term { sign term }
///   term   = factor { ["*"] factor }
///   factor = number ["/" number] | ("x" | "y") ["^" number] | "(" poly ")" ["^" number]
///
/// Multiplication may be implicit ("2x^2y", "3/2 x y").
BiSeries parse_polynomial(std::string_view text);

/// Parses a list of monomial terms, one "p q coeff" per line (coeff an
/// integer or num/den). Blank lines and '#' comments are skipped; repeated
/// monomials add up.
BiSeries parse_monomial_list(std::string_view text);

/// Curve file contents: a monomial list if every data line has the
/// "p q coeff" shape, otherwise a polynomial (lines are joined).
BiSeries parse_curve_text(std::string_view text);

/// Branch given as "y = poly(x)" (exact) or as an implicit equation
/// "F(x,y)" / "F(x,y) = 0", solved to a series y = g(x) up to `precision`.
BranchJet parse_branch(std::string_view text, Precision precision);

} // namespace seshadri
