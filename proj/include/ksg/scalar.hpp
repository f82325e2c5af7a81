#pragma once

#include <cstdint>
#include <string>

#include "ksg/rational.hpp"

namespace ksg {

// Numeric tower for vector entries: exact rational, quadratic surd a + b*sqrt(s)
// over one squarefree s, or a long-double approximation (64-bit mantissa on x86).
// Arithmetic stays exact inside Q or one Q(sqrt(s)); mixing distinct surds, or any
// operation that leaves the tower, degrades to Approx and the result is flagged
// by kind().
class Scalar {
public:
    enum class Kind { Rational, Quad, Approx };

    Scalar() : kind_(Kind::Rational) {}
    Scalar(long long v) : kind_(Kind::Rational), a_(v) {}
    Scalar(const Rational& r) : kind_(Kind::Rational), a_(r) {}
    static Scalar quad(const Rational& a, const Rational& b, uint64_t s);
    static Scalar approx(long double f);

    Kind kind() const { return kind_; }
    bool exact() const { return kind_ != Kind::Approx; }
    const Rational& rat() const { return a_; }        // valid when kind == Rational
    const Rational& quad_a() const { return a_; }     // valid when kind == Quad
    const Rational& quad_b() const { return b_; }
    uint64_t surd() const { return s_; }
    long double to_long_double() const;

    bool is_zero() const;  // exact test for exact kinds; bitwise zero for Approx
    int sign() const;      // exact for exact kinds
    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    bool operator==(const Scalar& o) const;  // structural equality on exact kinds

    // exact square root when the radicand factors as m^2 * s with s squarefree
    // (trial division bound), otherwise Approx
    static Scalar sqrt(const Scalar& x);

    std::string to_string() const;

private:
    Kind kind_;
    Rational a_, b_;  // Rational: value in a_. Quad: a_ + b_ * sqrt(s_).
    uint64_t s_ = 0;
    long double f_ = 0.0L;

    void normalize_quad();
};

}  // namespace ksg
