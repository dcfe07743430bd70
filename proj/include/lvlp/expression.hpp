#pragma once

#include <memory>
#include <string_view>

#include "lvlp/ring.hpp"

namespace lvlp {

/// Parses the human-readable element format produced by to_string, e.g.
/// "-(sqrt(alpha)*(5*alpha^2+34*alpha+29))/6912" or
/// "sqrt(alpha)/6*sin(2*phi)+1/3*cos(2*phi)". Supports + - * / ^, integers,
/// alpha, sqrt(alpha), sin(k*phi), cos(k*phi) and parentheses; division only
/// by nonzero rational constants. Throws AlgebraError on malformed input.
PhiCoefficient<SqrtAlphaPoly> parse_phi_coefficient(std::string_view text);

/// As parse_phi_coefficient, rejecting any phi dependence.
SqrtAlphaPoly parse_sqrt_alpha_poly(std::string_view text);

/// Parses then reduces with s^2 = alpha.
SqrtAlphaNumber parse_sqrt_alpha_number(std::string_view text, std::shared_ptr<const Rational> alpha);

/// Parses text into the ring of `like`, taking any context (alpha) from it.
SqrtAlphaPoly parse_element(std::string_view text, const SqrtAlphaPoly& like);
SqrtAlphaNumber parse_element(std::string_view text, const SqrtAlphaNumber& like);
PhiCoefficient<SqrtAlphaPoly> parse_element(std::string_view text, const PhiCoefficient<SqrtAlphaPoly>& like);
PhiCoefficient<SqrtAlphaNumber> parse_element(std::string_view text, const PhiCoefficient<SqrtAlphaNumber>& like);

}  // namespace lvlp
