#pragma once

#include "sextic/numfield.hpp"
#include "sextic/poly.hpp"

namespace sextic {

// Bivariate polynomials as polynomials in y whose coefficients are
// polynomials in x. QQ over the rationals, KK over a number field.
using QQ = Poly<QPoly>;
using KP = Poly<NFElem>;
using KK = Poly<KP>;

inline QQ qq_from_y_coeffs(std::vector<QPoly> yc) { return QQ(std::move(yc)); }

KK kk_lift(const QQ& f);
KP kp_lift(const QPoly& f);

inline QPoly qq_coeff(const QQ& f, int j) { return f.coeff(j); }

QQ qq_dx(const QQ& f);
inline QQ qq_dy(const QQ& f) { return derivative(f); }
KK kk_dx(const KK& f);
inline KK kk_dy(const KK& f) { return derivative(f); }

int total_degree(const QQ& f);
int total_degree_kk(const KK& f);

// f(x + a, y + b) over the field
KK kk_translate(const KK& f, const NFElem& a, const NFElem& b);
// f(x + a, y + b) over Q
QQ qq_translate(const QQ& f, const Rat& a, const Rat& b);
// f(x, y + s(x))
QQ qq_shift_y(const QQ& f, const QPoly& s);

NFElem kk_eval(const KK& f, const NFElem& x, const NFElem& y);
Rat qq_eval(const QQ& f, const Rat& x, const Rat& y);

// coefficient of x^i y^j
NFElem kk_coeff_xy(const KK& f, int i, int j);

std::string to_string(const QQ& f);
std::string to_string(const KP& p, const std::string& var);
QQ qq_from_string(const std::string& s);  // variables x and y

}  // namespace sextic
