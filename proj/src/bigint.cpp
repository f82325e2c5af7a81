#include "ksg/bigint.hpp"

#include <cstdlib>
#include <stdexcept>

namespace ksg {

BigInt::BigInt(long long v) {
    if (v < 0) { neg_ = true; }
    unsigned long long m = neg_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt::BigInt(const std::string& s) {
    size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = s[pos] == '-';
        ++pos;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (size_t i = pos; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
    for (size_t end = s.size(); end > pos;) {
        size_t begin = end >= pos + 9 ? end - 9 : pos;
        limbs_.push_back(static_cast<uint32_t>(std::strtoul(s.substr(begin, end - begin).c_str(), nullptr, 10)));
        end = begin;
    }
    trim();
    neg_ = neg && !is_zero();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    return 0;
}

BigInt BigInt::add_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(std::max(a.limbs_.size(), b.limbs_.size()) + 1, 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < r.limbs_.size(); ++i) {
        uint64_t s = carry;
        if (i < a.limbs_.size()) s += a.limbs_[i];
        if (i < b.limbs_.size()) s += b.limbs_[i];
        r.limbs_[i] = static_cast<uint32_t>(s % kBase);
        carry = s / kBase;
    }
    r.trim();
    return r;
}

BigInt BigInt::sub_mag(const BigInt& a, const BigInt& b) {
    BigInt r;
    r.limbs_.resize(a.limbs_.size(), 0);
    int64_t borrow = 0;
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        int64_t s = static_cast<int64_t>(a.limbs_[i]) - borrow - (i < b.limbs_.size() ? b.limbs_[i] : 0);
        if (s < 0) {
            s += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.limbs_[i] = static_cast<uint32_t>(s);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (neg_ == o.neg_) {
        BigInt r = add_mag(*this, o);
        r.neg_ = neg_ && !r.is_zero();
        return r;
    }
    int c = cmp_mag(*this, o);
    if (c == 0) return BigInt();
    BigInt r = c > 0 ? sub_mag(*this, o) : sub_mag(o, *this);
    r.neg_ = (c > 0 ? neg_ : o.neg_) && !r.is_zero();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (is_zero() || o.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size() || carry; ++j) {
            uint64_t cur = r.limbs_[i + j] + carry;
            if (j < o.limbs_.size()) cur += static_cast<uint64_t>(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = static_cast<uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    r.trim();
    r.neg_ = (neg_ != o.neg_) && !r.is_zero();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
    q = BigInt();
    r = BigInt();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    // schoolbook long division on magnitudes, limb by limb with binary search on the digit
    BigInt bm = b.abs();
    q.limbs_.assign(a.limbs_.size(), 0);
    BigInt rem;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        rem.limbs_.insert(rem.limbs_.begin(), a.limbs_[i]);
        rem.trim();
        uint32_t lo = 0, hi = kBase - 1, d = 0;
        while (lo <= hi) {
            uint32_t mid = lo + (hi - lo) / 2;
            if (cmp_mag(bm * BigInt(static_cast<long long>(mid)), rem) <= 0) {
                d = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        q.limbs_[i] = d;
        rem = sub_mag(rem, bm * BigInt(static_cast<long long>(d)));
    }
    q.trim();
    rem.trim();
    q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
    rem.neg_ = a.neg_ && !rem.is_zero();
    r = rem;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

bool BigInt::operator==(const BigInt& o) const { return neg_ == o.neg_ && limbs_ == o.limbs_; }

bool BigInt::operator<(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_;
    int c = cmp_mag(*this, o);
    return neg_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.neg_ = false;
    b.neg_ = false;
    while (!b.is_zero()) {
        BigInt q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a;
}

bool BigInt::to_int64(long long& out) const {
    if (limbs_.size() > 3) return false;
    unsigned long long v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (v > (~0ull - limbs_[i]) / kBase) return false;
        v = v * kBase + limbs_[i];
    }
    if (!neg_ && v > 0x7fffffffffffffffull) return false;
    if (neg_ && v > 0x8000000000000000ull) return false;
    out = neg_ ? -static_cast<long long>(v) : static_cast<long long>(v);
    return true;
}

long double BigInt::to_long_double() const {
    long double v = 0;
    for (size_t i = limbs_.size(); i-- > 0;) v = v * kBase + limbs_[i];
    return neg_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::string s = neg_ ? "-" : "";
    s += std::to_string(limbs_.back());
    char buf[16];
    for (size_t i = limbs_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", limbs_[i]);
        s += buf;
    }
    return s;
}

}  // namespace ksg
