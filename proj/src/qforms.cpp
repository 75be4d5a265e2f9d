#include "skmaass/qforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace skmaass {

namespace {

std::int64_t floordiv(std::int64_t x, std::int64_t y) {
    // y > 0
    std::int64_t q = x / y;
    if (x % y != 0 && x < 0)
        --q;
    return q;
}

void require_prime(std::int64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

} // namespace

std::int64_t QForm::content() const {
    std::int64_t g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
    return g;
}

bool is_discriminant(std::int64_t D) {
    std::int64_t r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

bool QForm::reduced() const {
    if (!positive_definite())
        return false;
    if (!(std::abs(b) <= a && a <= c))
        return false;
    if (b < 0 && (std::abs(b) == a || a == c))
        return false;
    return true;
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

QForm transform(const QForm& s, const Mat2& t) {
    // T^t S T with S = [a, b/2; b/2, c]
    std::int64_t a = s.a * t.m00 * t.m00 + s.b * t.m00 * t.m10 + s.c * t.m10 * t.m10;
    std::int64_t b = 2 * s.a * t.m00 * t.m01 + s.b * (t.m00 * t.m11 + t.m01 * t.m10) +
                     2 * s.c * t.m10 * t.m11;
    std::int64_t c = s.a * t.m01 * t.m01 + s.b * t.m01 * t.m11 + s.c * t.m11 * t.m11;
    return {a, b, c};
}

std::pair<QForm, Mat2> reduce(const QForm& s) {
    if (!s.positive_definite())
        throw std::domain_error("reduce: form is not positive definite");
    QForm f = s;
    Mat2 total;
    const Mat2 swap{0, -1, 1, 0};
    for (;;) {
        // translate b into (-a, a]
        std::int64_t t = floordiv(f.a - f.b, 2 * f.a);
        if (t != 0) {
            Mat2 shift{1, t, 0, 1};
            f = transform(f, shift);
            total = total * shift;
        }
        if (f.a > f.c) {
            f = transform(f, swap);
            total = total * swap;
            continue;
        }
        break;
    }
    if (f.a == f.c && f.b < 0) {
        f = transform(f, swap);
        total = total * swap;
    }
    return {f, total};
}

bool is_fundamental_discriminant(std::int64_t d) {
    if (d == 0 || d == 1)
        return false;
    auto squarefree = [](std::int64_t n) {
        for (const auto& [p, e] : factorize(std::abs(n)))
            if (e > 1)
                return false;
        return true;
    };
    std::int64_t r4 = ((d % 4) + 4) % 4;
    if (r4 == 1)
        return squarefree(d);
    if (r4 != 0)
        return false;
    std::int64_t m = d / 4;
    std::int64_t rm = ((m % 4) + 4) % 4;
    return (rm == 2 || rm == 3) && squarefree(m);
}

DiscFactorization fundamental_split(std::int64_t D) {
    if (D >= 0 || !is_discriminant(D))
        throw std::domain_error("fundamental_split: D must be negative and 0,1 mod 4");
    std::int64_t sf = 1, t = 1;
    for (const auto& [p, e] : factorize(-D)) {
        if (e % 2 == 1)
            sf *= p;
        for (int i = 0; i < e / 2; ++i)
            t *= p;
    }
    sf = -sf; // D = sf * t^2
    if (((sf % 4) + 4) % 4 == 1)
        return {sf, t};
    // sf = 2,3 mod 4: the fundamental discriminant is 4*sf and t is even
    return {4 * sf, t / 2};
}

int kronecker_symbol(std::int64_t d, std::int64_t p) {
    require_prime(p);
    if (!is_discriminant(d))
        throw std::invalid_argument("kronecker_symbol: d must be 0,1 mod 4");
    Integer dz(static_cast<long>(d));
    return mpz_kronecker_si(dz.get_mpz_t(), static_cast<long>(p));
}

std::vector<QForm> enumerate_classes(std::int64_t D, std::int64_t L) {
    if (D >= 0)
        throw std::invalid_argument("enumerate_classes: D must be negative");
    if (L < 1)
        throw std::invalid_argument("enumerate_classes: L must be >= 1");
    std::vector<QForm> out;
    if (!is_discriminant(D))
        return out;
    for (std::int64_t b = (std::abs(D) % 2); 3 * b * b <= -D; b += 2) {
        std::int64_t num = b * b - D; // = 4ac
        for (std::int64_t a = std::max<std::int64_t>(b, 1); 4 * a * a <= num; ++a) {
            if (num % (4 * a) != 0)
                continue;
            std::int64_t c = num / (4 * a);
            if (std::gcd(std::gcd(a, b), c) != 1)
                continue;
            out.push_back({a * L, b * L, c * L});
            if (b > 0 && b < a && a < c)
                out.push_back({a * L, -b * L, c * L});
        }
    }
    std::sort(out.begin(), out.end(), [](const QForm& x, const QForm& y) {
        auto key = [](const QForm& f) {
            return std::make_tuple(f.a, std::abs(f.b), -f.b, f.c);
        };
        return key(x) < key(y);
    });
    return out;
}

std::int64_t class_count_formula(std::int64_t d, std::int64_t M, std::int64_t L) {
    if (!is_fundamental_discriminant(d) || d >= 0)
        throw std::invalid_argument("class_count_formula: d must be a negative fundamental discriminant");
    if (M < 1 || L < 1)
        throw std::invalid_argument("class_count_formula: M and L must be >= 1");
    std::int64_t h = static_cast<std::int64_t>(enumerate_classes(d, 1).size());
    if (M == 1)
        return h; // the unit index of the maximal order is 1
    std::int64_t u = d == -3 ? 3 : (d == -4 ? 2 : 1);
    Integer num(static_cast<long>(M));
    num *= h;
    Integer den(static_cast<long>(u));
    for (const auto& [p, e] : factorize(M)) {
        (void)e;
        num *= (p - kronecker_symbol(d, p));
        den *= p;
    }
    Integer quot, rem;
    mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw std::logic_error("class_count_formula: non-integral value");
    return static_cast<std::int64_t>(quot.get_si());
}

QForm s_d(std::int64_t d) {
    if (!is_fundamental_discriminant(d) || d >= 0)
        throw std::invalid_argument("s_d: d must be a negative fundamental discriminant");
    if (((d % 4) + 4) % 4 == 0)
        return {-d / 4, 0, 1};
    return {(1 - d) / 4, 1, 1};
}

CosetInvariants coset_invariants(const QForm& s, std::int64_t p) {
    require_prime(p);
    if (!s.positive_definite())
        throw std::domain_error("coset_invariants: form is not positive definite");
    const std::int64_t L = s.content();
    const auto split = fundamental_split(s.disc());
    const int l = static_cast<int>(valuation(L, p));
    const int m = static_cast<int>(valuation(split.n1, p)) - l;
    return {p, l, m};
}

RatMat2 RatMat2::inverse() const {
    Rational dd = det();
    if (dd == 0)
        throw std::domain_error("matrix is singular");
    return {m11 / dd, -m01 / dd, -m10 / dd, m00 / dd};
}

RatMat2 RatMat2::operator*(const RatMat2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

std::array<Rational, 4> congruence(const QForm& s, const RatMat2& h) {
    Rational a(s.a), c(s.c);
    Rational bh(s.b, 2);
    bh.canonicalize();
    // S h
    Rational s00 = a * h.m00 + bh * h.m10;
    Rational s01 = a * h.m01 + bh * h.m11;
    Rational s10 = bh * h.m00 + c * h.m10;
    Rational s11 = bh * h.m01 + c * h.m11;
    // h^t (S h)
    return {h.m00 * s00 + h.m10 * s10, h.m00 * s01 + h.m10 * s11,
            h.m01 * s00 + h.m11 * s10, h.m01 * s01 + h.m11 * s11};
}

bool standard_assumptions(const QForm& sprime, std::int64_t p) {
    if (!sprime.positive_definite())
        return false;
    if (sprime.c % p == 0)
        return false;
    return fundamental_split(sprime.disc()).n1 % p != 0;
}

int gl2_coset_level(const RatMat2& h, const QForm& sprime, std::int64_t p) {
    require_prime(p);
    if (h.det() == 0)
        throw std::domain_error("gl2_coset_level: matrix is singular");
    if (!standard_assumptions(sprime, p))
        throw std::domain_error("gl2_coset_level: S' violates the standard assumptions at p=" +
                                std::to_string(p));
    const auto m = congruence(sprime, h);
    const Rational dd = h.det();
    long level = 0;
    for (Rational entry : {m[0] / dd, m[3] / dd}) {
        if (entry == 0)
            continue;
        level = std::max(level, -valuation(entry, p));
    }
    return static_cast<int>(level);
}

std::pair<int, int> gsp4_coset(const RatMat2& h, const Rational& v,
                               const QForm& sprime, std::int64_t p) {
    if (v == 0)
        throw std::domain_error("gsp4_coset: similitude factor must be nonzero");
    const int m = gl2_coset_level(h, sprime, p);
    const int l = static_cast<int>(valuation(h.det() / v, p)) - m;
    return {l, m};
}

RatMat2 fundamental_transfer(const QForm& s) {
    if (!s.positive_definite())
        throw std::domain_error("fundamental_transfer: form is not positive definite");
    const auto split = fundamental_split(s.disc());
    Rational top(-s.b, 2 * split.n1 * s.a);
    top.canonicalize();
    if (((split.d % 4) + 4) % 4 == 1) {
        Rational half(1, 2 * s.a);
        half.canonicalize();
        top += half;
    }
    Rational inv_a(1, s.a), inv_n1(1, split.n1);
    inv_a.canonicalize();
    inv_n1.canonicalize();
    return {top, inv_a, inv_n1, Rational(0)};
}

ArchDecomposition arch_decompose(const QForm& s) {
    if (!s.positive_definite())
        throw std::domain_error("arch_decompose: form is not positive definite");
    const double a = static_cast<double>(s.a);
    const double b = static_cast<double>(s.b);
    const double c = static_cast<double>(s.c);
    const double det = (4.0 * a * c - b * b) / 4.0;
    const double lambda = std::sqrt(det);
    const double u = std::sqrt(a * lambda);
    const double x = (b / 2.0) / u;
    const double y = a / u;
    double zeta;
    if (s.b == 0) {
        // h is diagonal, the Cartan factor is explicit
        zeta = std::max(y, 1.0 / y);
    } else {
        const double t = 1.0 + x * x * y * y + y * y * y * y;
        const double rad = std::max(t * t - 4.0 * y * y * y * y, 0.0);
        zeta = std::sqrt((t + std::sqrt(rad)) / (2.0 * y * y));
    }
    return {u, x, y, lambda, zeta};
}

double bessel_arch(const QForm& s, int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("bessel_arch: k must be even and >= 4");
    if (!s.positive_definite())
        throw std::domain_error("bessel_arch: form is not positive definite");
    const double det = (4.0 * static_cast<double>(s.a) * static_cast<double>(s.c) -
                        static_cast<double>(s.b) * static_cast<double>(s.b)) / 4.0;
    const double pi = 3.14159265358979323846;
    return std::pow(det, k / 2) * std::exp(-2.0 * pi * static_cast<double>(s.a + s.c));
}

} // namespace skmaass
