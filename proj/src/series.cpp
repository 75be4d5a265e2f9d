#include "skmaass/series.hpp"

#include <stdexcept>

namespace skmaass {

std::vector<QuadExt> series_div(const Poly& numer, const Poly& denom, int order) {
    if (order < 0)
        throw std::invalid_argument("series_div: order must be >= 0");
    if (denom.empty() || denom[0].is_zero())
        throw std::domain_error("series_div: denominator has zero constant term");

    long q = denom[0].radicand();
    const QuadExt zero(q);
    std::vector<QuadExt> out;
    out.reserve(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) {
        QuadExt acc = static_cast<std::size_t>(n) < numer.size() ? numer[n] : zero;
        std::size_t dmax = std::min<std::size_t>(denom.size() - 1, static_cast<std::size_t>(n));
        for (std::size_t i = 1; i <= dmax; ++i)
            acc -= denom[i] * out[static_cast<std::size_t>(n) - i];
        out.push_back(acc / denom[0]);
    }
    return out;
}

std::vector<QuadExt> poly_mul_truncated(const Poly& a, const Poly& b, int order) {
    if (order < 0)
        throw std::invalid_argument("poly_mul_truncated: order must be >= 0");
    if (a.empty() || b.empty())
        throw std::invalid_argument("poly_mul_truncated: empty operand");
    long q = a[0].radicand();
    std::vector<QuadExt> out(static_cast<std::size_t>(order) + 1, QuadExt(q));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace skmaass
