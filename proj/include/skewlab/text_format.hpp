#ifndef SKEWLAB_TEXT_FORMAT_HPP
#define SKEWLAB_TEXT_FORMAT_HPP

#include <string>
#include <string_view>

#include "skewlab/center_poly.hpp"
#include "skewlab/field_tower.hpp"
#include "skewlab/skew_poly.hpp"

namespace skewlab {

/// A tower together with the letter used for the generator of K.
struct TowerSpec {
    TowerPtr tower;
    char generator = 'g';
};

/// GF(p)^n, GF(p)^n/<ext>, GF(p^e/<base>)^n/mod=<ext>;gen=w ... (see FORMATS.md).
/// Throws ParseError, plus the tower construction errors.
TowerSpec parse_tower(std::string_view text);
/// Canonical form with both moduli spelled out.
std::string format_tower(const TowerSpec& spec);

FElem parse_base_element(const TowerSpec& spec, std::string_view text);
KElem parse_element(const TowerSpec& spec, std::string_view text);
/// Expression in t over K, evaluated in K[t; sigma] (so t*g = sigma(g)*t).
SkewPoly parse_skew(const TowerSpec& spec, std::string_view text);
/// Expression in x over F.
CenterPoly parse_center(const TowerSpec& spec, std::string_view text, char variable = 'x');

std::string format_base_element(const FieldTower& tower, FElem a);
std::string format_element(const TowerSpec& spec, KElem a);
std::string format_skew(const TowerSpec& spec, const SkewPoly& f);
std::string format_center(const FieldTower& tower, const CenterPoly& p, char variable = 'x');

}  // namespace skewlab

#endif
