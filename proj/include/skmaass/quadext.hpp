#pragma once

#include <iosfwd>
#include <string>

#include "skmaass/rational.hpp"

namespace skmaass {

/// Element x + y*sqrt(q) of the real quadratic field Q(sqrt q).
///
/// The radicand q is a prime carried with the value; since sqrt(q) is
/// irrational, the (x, y) representation is unique and equality is
/// componentwise. Values with y = 0 are plain rationals and combine with
/// any radicand; combining two genuinely irrational values with different
/// radicands is rejected.
class QuadExt {
public:
    explicit QuadExt(long q);
    QuadExt(long q, Rational x);
    QuadExt(long q, Rational x, Rational y);

    /// sqrt(q) itself.
    static QuadExt sqrt_q(long q);
    /// q^(n/2) for any integer n (n even gives a rational, n odd a pure surd).
    static QuadExt half_power(long q, long n);

    long radicand() const { return q_; }
    const Rational& rational_part() const { return x_; }
    const Rational& surd_part() const { return y_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& rhs);
    QuadExt& operator-=(const QuadExt& rhs);
    QuadExt& operator*=(const QuadExt& rhs);
    QuadExt& operator/=(const QuadExt& rhs);

    friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
    friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
    friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
    friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

    QuadExt& operator*=(const Rational& r);
    QuadExt& operator/=(const Rational& r);
    friend QuadExt operator*(QuadExt lhs, const Rational& r) { return lhs *= r; }
    friend QuadExt operator*(const Rational& r, QuadExt rhs) { return rhs *= r; }
    friend QuadExt operator/(QuadExt lhs, const Rational& r) { return lhs /= r; }

    friend bool operator==(const QuadExt& a, const QuadExt& b);
    friend bool operator!=(const QuadExt& a, const QuadExt& b) { return !(a == b); }

    /// "x", "y*sqrt(q)" or "x+y*sqrt(q)"; matches the CLI literal grammar.
    std::string str() const;

private:
    long q_;
    Rational x_, y_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& v);

/// U_m with U_{-1} = 0, U_0 = 1, U_{m+1} = A*U_m - U_{m-1}. For A = t + 1/t
/// this realizes (t^{m+1} - t^{-(m+1)})/(t - t^{-1}), including the
/// degenerate t = 1/t convention where the quotient means m+1 terms.
QuadExt chebyshev_u(const QuadExt& A, long m);

} // namespace skmaass
