#include "skmaass/bessel.hpp"

#include <stdexcept>

namespace skmaass {

namespace {

// 1 / q^e as an exact rational
Rational inv_qpow(long q, unsigned long e) { return qpow(q, -static_cast<long>(e)); }

// attach radicand q to plain-rational traces so downstream ops share one tag
QuadExt retag(long q, const QuadExt& v) {
    if (v.is_rational())
        return QuadExt(q, v.rational_part());
    return v;
}

// trace complementary to the q^{+-1/2} parameter; 0 in the exceptional case
QuadExt complementary_trace(const SphericalParams& params,
                            const BesselClassification& cls) {
    switch (cls.which) {
        case SKTrace::TraceA: return params.B;
        case SKTrace::TraceB: return params.A;
        case SKTrace::Both:   return sk_trace_value(params.q);
        case SKTrace::None:   break;
    }
    // exceptional situation: alpha = +-i, so alpha + 1/alpha = 0
    return QuadExt(params.q);
}

} // namespace

SphericalParams::SphericalParams(long q_, QuadExt A_, QuadExt B_, int delta_)
    : q(q_), A(retag(q_, A_)), B(retag(q_, B_)), delta(delta_) {
    if (!is_prime(q))
        throw std::invalid_argument("spherical params: q must be prime");
    if (delta < -1 || delta > 1)
        throw std::invalid_argument("spherical params: delta must be -1, 0 or 1");
    if (A.radicand() != q || B.radicand() != q)
        throw std::invalid_argument("spherical params: traces must lie in Q(sqrt q)");
}

QuadExt sk_trace_value(long q) {
    // sqrt(q) + 1/sqrt(q) = ((q+1)/q) sqrt(q)
    Rational y(q + 1, q);
    y.canonicalize();
    return QuadExt(q, Rational(0), y);
}

BesselClassification classify(const SphericalParams& params) {
    const QuadExt sk = sk_trace_value(params.q);
    const bool a_is = params.A == sk;
    const bool b_is = params.B == sk;
    if (a_is || b_is) {
        SKTrace which = a_is && b_is ? SKTrace::Both : (a_is ? SKTrace::TraceA : SKTrace::TraceB);
        return {BesselKind::SKType, which};
    }
    const QuadExt zero(params.q);
    const QuadExt neg_sk = -sk;
    if (params.delta == -1 &&
        ((params.A == zero && params.B == neg_sk) ||
         (params.B == zero && params.A == neg_sk)))
        return {BesselKind::Exceptional, SKTrace::None};
    return {BesselKind::Generic, SKTrace::None};
}

std::array<QuadExt, 5> poly_p(const SphericalParams& params) {
    const long q = params.q;
    const QuadExt ab = params.A * params.B;
    const QuadExt sq = params.A * params.A + params.B * params.B - QuadExt(q, Rational(2));
    return {QuadExt(q, Rational(1)),
            -ab * inv_qpow(q, 2),
            sq * inv_qpow(q, 4),
            -ab * inv_qpow(q, 6),
            QuadExt(q, inv_qpow(q, 8))};
}

std::array<QuadExt, 4> poly_h_x0(const SphericalParams& params) {
    const long q = params.q;
    const long d = params.delta;
    const QuadExt sum = params.A + params.B;
    const QuadExt ab = params.A * params.B;
    const QuadExt root = QuadExt::half_power(q, 1);

    QuadExt h1 = QuadExt(q, Rational(q + 1 + d * (d + 1)))
               - root * sum * Rational(d + 1)
               + ab * Rational(d);
    h1 /= Rational(Integer(q) * q * (q - d));

    QuadExt h2 = QuadExt(q, Rational(q * (d + 1) + d * d * (q + 1)))
               - root * sum * Rational(d * (d + 1))
               + ab * Rational(d * q);
    h2 /= Rational(ipow(q, 5) * (q - d));

    return {QuadExt(q, Rational(1)), h1, h2,
            QuadExt(q, Rational(-d) * inv_qpow(q, 7))};
}

std::vector<QuadExt> b0_prefix(const SphericalParams& params, int max_m) {
    if (max_m < 0)
        throw std::invalid_argument("b0: m must be >= 0");
    const auto p = poly_p(params);
    const auto h = poly_h_x0(params);
    const QuadExt zero(params.q);

    std::vector<QuadExt> vals;
    vals.reserve(static_cast<std::size_t>(max_m) + 1);
    vals.push_back(QuadExt(params.q, Rational(1))); // B(h(0,0)) = 1
    for (int m = 1; m <= max_m; ++m) {
        QuadExt acc = m <= 3 ? h[static_cast<std::size_t>(m)] : zero;
        for (int i = 1; i <= 4 && i <= m; ++i)
            acc -= p[static_cast<std::size_t>(i)] * vals[static_cast<std::size_t>(m - i)];
        vals.push_back(acc); // P_0 = 1
    }
    return vals;
}

QuadExt b0(const SphericalParams& params, int m) {
    return b0_prefix(params, m).back();
}

QuadExt b0_closed_sk(const SphericalParams& params, int m) {
    if (m < 0)
        throw std::invalid_argument("b0_closed_sk: m must be >= 0");
    const auto cls = classify(params);
    if (cls.kind == BesselKind::Generic)
        throw std::domain_error("closed form requires SK-type or exceptional parameters");
    const QuadExt aprime = complementary_trace(params, cls);
    QuadExt val = chebyshev_u(aprime, m)
                - chebyshev_u(aprime, m - 1) * QuadExt::half_power(params.q, -1)
                  * Rational(params.delta);
    return val * QuadExt::half_power(params.q, -3L * m);
}

QuadExt blm_sk(const SphericalParams& params, int l, int m) {
    if (m < 0)
        throw std::invalid_argument("blm_sk: m must be >= 0");
    if (l < 0)
        return QuadExt(params.q); // B(h(l,m)) vanishes for l < 0
    if (classify(params).kind != BesselKind::SKType)
        throw std::domain_error("local Maass relation requires SK-type parameters");
    const auto pref = b0_prefix(params, l + m);
    QuadExt acc(params.q);
    Rational w(1);
    for (int i = 0; i <= l; ++i) {
        acc += pref[static_cast<std::size_t>(l + m - i)] * w;
        w /= params.q;
    }
    return acc;
}

QuadExt siegel_series_value(const SphericalParams& params, int l, int m) {
    if (l < 0 || m < l)
        throw std::invalid_argument("siegel_series_value: need m >= l >= 0");
    const auto cls = classify(params);
    if (cls.kind != BesselKind::SKType)
        throw std::domain_error("Siegel-series form requires SK-type parameters");
    const QuadExt aprime = complementary_trace(params, cls);
    const QuadExt qinvhalf = QuadExt::half_power(params.q, -1);
    QuadExt acc(params.q);
    for (int i = 0; i <= l; ++i) {
        QuadExt term = chebyshev_u(aprime, m - i)
                     - chebyshev_u(aprime, m - i - 1) * qinvhalf * Rational(params.delta);
        acc += term * QuadExt::half_power(params.q, i);
    }
    return acc;
}

QuadExt obstruction(const SphericalParams& params) {
    const long q = params.q;
    Rational one_plus(q + 1, q);
    one_plus.canonicalize();
    const QuadExt f(q, one_plus);
    const QuadExt qinvhalf = QuadExt::half_power(q, -1);
    QuadExt val = (f - qinvhalf * params.A) * (f - qinvhalf * params.B);
    Rational den(1, q - params.delta);
    den.canonicalize();
    return val * den;
}

} // namespace skmaass
