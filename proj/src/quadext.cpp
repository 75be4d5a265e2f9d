#include "skmaass/quadext.hpp"

#include <ostream>
#include <stdexcept>

namespace skmaass {

namespace {

long merged_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.radicand() == b.radicand())
        return a.radicand();
    if (a.is_rational())
        return b.radicand();
    if (b.is_rational())
        return a.radicand();
    throw std::invalid_argument("mixed radicands sqrt(" + std::to_string(a.radicand()) +
                                ") and sqrt(" + std::to_string(b.radicand()) + ")");
}

} // namespace

QuadExt::QuadExt(long q) : q_(q), x_(0), y_(0) {
    if (q < 2)
        throw std::invalid_argument("radicand must be >= 2");
}

QuadExt::QuadExt(long q, Rational x) : QuadExt(q, std::move(x), Rational(0)) {}

QuadExt::QuadExt(long q, Rational x, Rational y)
    : q_(q), x_(std::move(x)), y_(std::move(y)) {
    if (q < 2)
        throw std::invalid_argument("radicand must be >= 2");
    x_.canonicalize();
    y_.canonicalize();
}

QuadExt QuadExt::sqrt_q(long q) { return QuadExt(q, Rational(0), Rational(1)); }

QuadExt QuadExt::half_power(long q, long n) {
    if (q < 2)
        throw std::invalid_argument("radicand must be >= 2");
    if (n % 2 == 0)
        return QuadExt(q, qpow(q, n / 2));
    // n odd: q^{n/2} = q^{(n-1)/2} sqrt(q); n-1 is even so the division is exact
    return QuadExt(q, Rational(0), qpow(q, (n - 1) / 2));
}

QuadExt QuadExt::operator-() const { return QuadExt(q_, -x_, -y_); }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
    q_ = merged_radicand(*this, rhs);
    x_ += rhs.x_;
    y_ += rhs.y_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
    q_ = merged_radicand(*this, rhs);
    x_ -= rhs.x_;
    y_ -= rhs.y_;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
    long q = merged_radicand(*this, rhs);
    Rational nx = x_ * rhs.x_ + Rational(q) * y_ * rhs.y_;
    Rational ny = x_ * rhs.y_ + y_ * rhs.x_;
    q_ = q;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
    long q = merged_radicand(*this, rhs);
    if (rhs.is_zero())
        throw std::domain_error("division by zero");
    // conjugate norm; nonzero for nonzero elements since q is not a square
    Rational norm = rhs.x_ * rhs.x_ - Rational(q) * rhs.y_ * rhs.y_;
    if (norm == 0)
        throw std::domain_error("divisor has zero norm (square radicand?)");
    Rational nx = (x_ * rhs.x_ - Rational(q) * y_ * rhs.y_) / norm;
    Rational ny = (y_ * rhs.x_ - x_ * rhs.y_) / norm;
    q_ = q;
    x_ = std::move(nx);
    y_ = std::move(ny);
    return *this;
}

QuadExt& QuadExt::operator*=(const Rational& r) {
    x_ *= r;
    y_ *= r;
    return *this;
}

QuadExt& QuadExt::operator/=(const Rational& r) {
    if (r == 0)
        throw std::domain_error("division by zero");
    x_ /= r;
    y_ /= r;
    return *this;
}

bool operator==(const QuadExt& a, const QuadExt& b) {
    if (a.x_ != b.x_ || a.y_ != b.y_)
        return false;
    return a.y_ == 0 || a.q_ == b.q_;
}

std::string QuadExt::str() const {
    if (y_ == 0)
        return x_.get_str();
    std::string surd = y_.get_str() + "*sqrt(" + std::to_string(q_) + ")";
    if (x_ == 0)
        return surd;
    if (y_ > 0)
        return x_.get_str() + "+" + surd;
    return x_.get_str() + surd; // y negative carries its sign
}

std::ostream& operator<<(std::ostream& os, const QuadExt& v) { return os << v.str(); }

QuadExt chebyshev_u(const QuadExt& A, long m) {
    if (m < -1)
        throw std::invalid_argument("chebyshev_u: m must be >= -1");
    QuadExt prev(A.radicand());          // U_{-1} = 0
    QuadExt cur(A.radicand(), Rational(1)); // U_0 = 1
    if (m == -1)
        return prev;
    for (long i = 0; i < m; ++i) {
        QuadExt next = A * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace skmaass
