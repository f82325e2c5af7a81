#include "ksg/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace ksg {

Scalar Scalar::quad(const Rational& a, const Rational& b, uint64_t s) {
    Scalar x;
    x.kind_ = Kind::Quad;
    x.a_ = a;
    x.b_ = b;
    x.s_ = s;
    x.normalize_quad();
    return x;
}

Scalar Scalar::approx(long double f) {
    Scalar x;
    x.kind_ = Kind::Approx;
    x.f_ = f;
    return x;
}

void Scalar::normalize_quad() {
    if (kind_ == Kind::Quad && (b_.is_zero() || s_ == 1)) {
        if (s_ == 1) a_ += b_;
        kind_ = Kind::Rational;
        b_ = Rational();
        s_ = 0;
    }
}

long double Scalar::to_long_double() const {
    switch (kind_) {
        case Kind::Rational: return a_.to_long_double();
        case Kind::Quad: return a_.to_long_double() + b_.to_long_double() * sqrtl(static_cast<long double>(s_));
        default: return f_;
    }
}

bool Scalar::is_zero() const {
    switch (kind_) {
        case Kind::Rational: return a_.is_zero();
        case Kind::Quad: return false;  // normalized quads have b != 0, hence irrational
        default: return f_ == 0.0L;
    }
}

int Scalar::sign() const {
    switch (kind_) {
        case Kind::Rational: return a_.sign();
        case Kind::Quad: {
            int sa = a_.sign(), sb = b_.sign();
            if (sa == sb) return sa;
            if (sa == 0) return sb;
            if (sb == 0) return sa;
            // a and b*sqrt(s) have opposite signs: compare a^2 with b^2 s
            Rational a2 = a_ * a_, b2s = b_ * b_ * Rational(static_cast<long long>(s_));
            if (a2 == b2s) return 0;  // cannot happen for squarefree s>1, kept for safety
            return a2 > b2s ? sa : sb;
        }
        default: return f_ < 0 ? -1 : (f_ > 0 ? 1 : 0);
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    switch (kind_) {
        case Kind::Rational: r.a_ = -a_; break;
        case Kind::Quad:
            r.a_ = -a_;
            r.b_ = -b_;
            break;
        default: r.f_ = -f_;
    }
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (kind_ == Kind::Approx || o.kind_ == Kind::Approx)
        return approx(to_long_double() + o.to_long_double());
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) return Scalar(a_ + o.a_);
    if (kind_ == Kind::Quad && o.kind_ == Kind::Quad) {
        if (s_ != o.s_) return approx(to_long_double() + o.to_long_double());
        return quad(a_ + o.a_, b_ + o.b_, s_);
    }
    const Scalar& q = kind_ == Kind::Quad ? *this : o;
    const Scalar& r = kind_ == Kind::Quad ? o : *this;
    return quad(q.a_ + r.a_, q.b_, q.s_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (kind_ == Kind::Approx || o.kind_ == Kind::Approx)
        return approx(to_long_double() * o.to_long_double());
    if (kind_ == Kind::Rational && o.kind_ == Kind::Rational) return Scalar(a_ * o.a_);
    if (kind_ == Kind::Quad && o.kind_ == Kind::Quad) {
        if (s_ != o.s_) return approx(to_long_double() * o.to_long_double());
        Rational s(static_cast<long long>(s_));
        return quad(a_ * o.a_ + b_ * o.b_ * s, a_ * o.b_ + b_ * o.a_, s_);
    }
    const Scalar& q = kind_ == Kind::Quad ? *this : o;
    const Scalar& r = kind_ == Kind::Quad ? o : *this;
    return quad(q.a_ * r.a_, q.b_ * r.a_, q.s_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (kind_ == Kind::Approx || o.kind_ == Kind::Approx)
        return approx(to_long_double() / o.to_long_double());
    if (o.kind_ == Kind::Rational) {
        if (kind_ == Kind::Rational) return Scalar(a_ / o.a_);
        return quad(a_ / o.a_, b_ / o.a_, s_);
    }
    // invert the quad via its conjugate
    Rational s(static_cast<long long>(o.s_));
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * s;
    if (norm.is_zero()) return approx(to_long_double() / o.to_long_double());
    Scalar inv = quad(o.a_ / norm, -o.b_ / norm, o.s_);
    return *this * inv;
}

bool Scalar::operator==(const Scalar& o) const {
    if (kind_ != o.kind_) return false;
    switch (kind_) {
        case Kind::Rational: return a_ == o.a_;
        case Kind::Quad: return s_ == o.s_ && a_ == o.a_ && b_ == o.b_;
        default: return f_ == o.f_;
    }
}

namespace {

// n = m^2 * s with s squarefree, via trial division; returns false if a factor
// larger than the bound survives un-squared
bool square_split(const BigInt& n, BigInt& m, uint64_t& s) {
    m = BigInt(1);
    s = 1;
    BigInt rest = n;
    for (long long p = 2; p <= 100000; ++p) {
        BigInt bp(p);
        if (rest < bp * bp) break;
        int e = 0;
        while ((rest % bp).is_zero()) {
            rest = rest / bp;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) m *= bp;
        if (e % 2) s *= static_cast<uint64_t>(p);
    }
    long long tail;
    if (!rest.to_int64(tail)) return false;
    if (tail > 1) {
        long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(tail))));
        if (r * r == tail)
            m *= BigInt(r);
        else if (tail <= 1000000000)
            s *= static_cast<uint64_t>(tail);  // residue below trial bound^2 with no small factor is prime
        else
            return false;
    }
    return true;
}

}  // namespace

Scalar Scalar::sqrt(const Scalar& x) {
    if (x.sign() < 0) throw std::domain_error("Scalar: sqrt of negative");
    if (x.is_zero()) return Scalar(0);
    if (x.kind() == Kind::Rational) {
        // sqrt(p/q) = sqrt(p*q)/q
        BigInt pq = x.rat().num() * x.rat().den();
        BigInt m;
        uint64_t s;
        if (square_split(pq, m, s)) {
            Rational coeff(m, x.rat().den());
            if (s == 1) return Scalar(coeff);
            return quad(Rational(), coeff, s);
        }
    }
    return approx(sqrtl(x.to_long_double()));
}

std::string Scalar::to_string() const {
    switch (kind_) {
        case Kind::Rational: return a_.to_string();
        case Kind::Quad: return a_.to_string() + "+" + b_.to_string() + "*sqrt(" + std::to_string(s_) + ")";
        default: {
            char buf[48];
            std::snprintf(buf, sizeof buf, "%.21Lg", f_);
            return buf;
        }
    }
}

}  // namespace ksg
