#pragma once

#include "alcove/exact.hpp"

namespace alcove {

// alpha(x) = c + a.x, with a a covector in ambient coordinates.  Against an
// inner product G the gradient (the vector written alpha-bar) is G^{-1} a.
struct AffineFunctional {
    Q c;
    QVec a;

    AffineFunctional() = default;
    AffineFunctional(Q c_, QVec a_) : c(std::move(c_)), a(std::move(a_)) {}
    static AffineFunctional linear(QVec a_) { return {Q(0), std::move(a_)}; }

    int dim() const { return int(a.size()); }
    Q operator()(const QVec& x) const { return c + dot(a, x); }
    bool constant() const { return is_zero(a); }
    QVec gradient(const InnerProduct& ip) const { return ip.raise(a); }

    AffineFunctional operator+(const AffineFunctional& o) const { return {c + o.c, a + o.a}; }
    AffineFunctional operator-(const AffineFunctional& o) const { return {c - o.c, a - o.a}; }
    AffineFunctional operator-() const { return {-c, -a}; }
    friend AffineFunctional operator*(const Q& s, const AffineFunctional& f) { return {s * f.c, s * f.a}; }
    bool operator==(const AffineFunctional& o) const { return c == o.c && a == o.a; }
    bool operator!=(const AffineFunctional& o) const { return !(*this == o); }
    bool operator<(const AffineFunctional& o) const { return a != o.a ? a < o.a : c < o.c; }

    // "1/2 - 2x1 + x3"
    std::string str(const std::string& var = "x") const;
};

// <a, b^vee> = 2 <a-bar, b-bar> / <b-bar, b-bar>.
Q coroot_pairing(const QVec& a, const QVec& b, const InnerProduct& ip);
// Reflection in the zero set of alpha: x - alpha(x) alpha-bar^vee.
QVec reflect(const AffineFunctional& alpha, const QVec& x, const InnerProduct& ip);
// beta - <beta-bar, alpha-bar^vee> alpha.
AffineFunctional reflect_functional(const AffineFunctional& alpha, const AffineFunctional& beta,
                                    const InnerProduct& ip);

}  // namespace alcove
