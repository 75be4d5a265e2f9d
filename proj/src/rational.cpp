#include "skmaass/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace skmaass {

Rational parse_rational(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t");
    std::size_t end = s.find_last_not_of(" \t");
    if (begin == std::string::npos)
        throw std::invalid_argument("empty rational literal");
    std::string t = s.substr(begin, end - begin + 1);

    bool seen_slash = false, seen_digit = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        char ch = t[i];
        if ((ch == '+' || ch == '-') && i == 0)
            continue;
        if (ch == '/') {
            if (seen_slash || !seen_digit || i + 1 == t.size())
                throw std::invalid_argument("bad rational literal: " + s);
            seen_slash = true;
            continue;
        }
        if (ch < '0' || ch > '9')
            throw std::invalid_argument("bad rational literal: " + s);
        seen_digit = true;
    }
    if (!seen_digit)
        throw std::invalid_argument("bad rational literal: " + s);
    if (t[0] == '+')
        t.erase(0, 1); // GMP rejects an explicit plus sign

    Rational r;
    if (r.set_str(t, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

long valuation(const Integer& n, std::int64_t p) {
    if (p < 2)
        throw std::invalid_argument("valuation: p must be >= 2");
    if (n == 0)
        throw std::domain_error("valuation of zero is undefined");
    Integer rest, pz(static_cast<long>(p));
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

long valuation(const Rational& r, std::int64_t p) {
    if (r == 0)
        throw std::domain_error("valuation of zero is undefined");
    return valuation(Integer(r.get_num()), p) - valuation(Integer(r.get_den()), p);
}

long valuation(std::int64_t n, std::int64_t p) {
    if (p < 2)
        throw std::invalid_argument("valuation: p must be >= 2");
    if (n == 0)
        throw std::domain_error("valuation of zero is undefined");
    long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

bool is_prime(std::int64_t n) {
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    if (n % 3 == 0)
        return n == 3;
    for (std::int64_t f = 5; f * f <= n; f += 6) {
        if (n % f == 0 || n % (f + 2) == 0)
            return false;
    }
    return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        std::size_t sz = out.size();
        std::int64_t pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer ipow(std::int64_t base, unsigned long exp) {
    Integer b(static_cast<long>(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

Rational qpow(std::int64_t q, long exp) {
    if (q == 0)
        throw std::domain_error("qpow: zero base");
    if (exp >= 0)
        return Rational(ipow(q, static_cast<unsigned long>(exp)));
    Rational r(Integer(1), ipow(q, static_cast<unsigned long>(-exp)));
    r.canonicalize();
    return r;
}

} // namespace skmaass
