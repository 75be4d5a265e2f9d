#include "skmaass/sk.hpp"

#include "skmaass/errors.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "skmaass/bessel.hpp"

namespace skmaass {

namespace {

void validate_weight(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::invalid_argument("weight k must be even and >= 4");
}

const Rational& base_value(const SKLiftSpec& lift, std::int64_t d) {
    auto it = lift.base.find(d);
    if (it == lift.base.end())
        throw config_error("missing base coefficient for d=" + std::to_string(d));
    return it->second;
}

} // namespace

Integer hecke_power(const EllipticHecke& h, std::int64_t p, int mu) {
    validate_weight(h.k);
    if (mu < 0)
        throw std::invalid_argument("hecke_power: mu must be >= 0");
    if (mu == 0)
        return Integer(1);
    auto it = h.eigen.find(p);
    if (it == h.eigen.end())
        throw config_error("missing Hecke eigenvalue at p=" + std::to_string(p));
    const Integer& cp = it->second;
    if (mu == 1)
        return cp;
    const Integer pk = ipow(p, static_cast<unsigned long>(2 * h.k - 3));
    Integer prev(1), cur(cp);
    for (int i = 1; i < mu; ++i) {
        Integer next = cp * cur - pk * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational sk_coefficient(const SKLiftSpec& lift, const QForm& s) {
    validate_weight(lift.hecke.k);
    if (!s.positive_definite())
        throw std::domain_error("sk_coefficient: form is not positive definite");
    const int k = lift.hecke.k;
    const std::int64_t L = s.content();
    const auto split = fundamental_split(s.disc());

    Rational result = base_value(lift, split.d);
    for (const auto& [p, a_p] : factorize(split.n1)) {
        const int b_p = static_cast<int>(valuation(L, p));
        const int delta_p = kronecker_symbol(split.d, p);
        Integer sum(0);
        for (int i = 0; i <= b_p; ++i) {
            Integer term = hecke_power(lift.hecke, p, a_p - i);
            if (delta_p != 0 && a_p - i - 1 >= 0)
                term -= delta_p * ipow(p, static_cast<unsigned long>(k - 2)) *
                        hecke_power(lift.hecke, p, a_p - i - 1);
            sum += ipow(p, static_cast<unsigned long>(i) * (k - 1)) * term;
        }
        result *= Rational(sum);
    }
    return result;
}

Rational sk_coefficient_dks(const SKLiftSpec& lift, const QForm& t, std::int64_t n) {
    validate_weight(lift.hecke.k);
    if (n < 1)
        throw std::invalid_argument("sk_coefficient_dks: n must be >= 1");
    if (!t.positive_definite() || !is_fundamental_discriminant(t.disc()) || t.content() != 1)
        throw std::domain_error("sk_coefficient_dks: T must be primitive with fundamental discriminant");
    const int k = lift.hecke.k;
    const std::int64_t d = t.disc();

    Rational result = base_value(lift, d);
    for (const auto& [p, nu] : factorize(n)) {
        const int delta_p = kronecker_symbol(d, p);
        Integer sum(0);
        for (int i = 0; i <= nu; ++i) {
            Integer term = hecke_power(lift.hecke, p, i);
            if (delta_p != 0 && i - 1 >= 0)
                term -= delta_p * ipow(p, static_cast<unsigned long>(k - 2)) *
                        hecke_power(lift.hecke, p, i - 1);
            sum += ipow(p, static_cast<unsigned long>(nu - i) * (k - 1)) * term;
        }
        result *= Rational(sum);
    }
    return result;
}

Rational sk_coefficient_bessel(const SKLiftSpec& lift, std::int64_t d,
                               std::int64_t L, std::int64_t M, std::int64_t p) {
    validate_weight(lift.hecke.k);
    if (!is_prime(p))
        throw std::invalid_argument("sk_coefficient_bessel: p must be prime");
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("sk_coefficient_bessel: d must be a negative fundamental discriminant");
    auto power_of_p = [p](std::int64_t n) {
        if (n < 1)
            return false;
        while (n % p == 0)
            n /= p;
        return n == 1;
    };
    if (!power_of_p(L) || !power_of_p(M))
        throw std::invalid_argument("sk_coefficient_bessel: L and M must be powers of p");

    const Rational& base = base_value(lift, d);
    const int l = static_cast<int>(valuation(L, p));
    const int m = static_cast<int>(valuation(M, p));
    if (l + m == 0)
        return base;

    const int k = lift.hecke.k;
    // A = c(p) / p^{(2k-3)/2} = (c(p)/p^{k-1}) sqrt(p), always inside Q(sqrt p)
    Rational y(hecke_power(lift.hecke, p, 1), ipow(p, static_cast<unsigned long>(k - 1)));
    y.canonicalize();
    SphericalParams params(p, QuadExt(p, Rational(0), y), sk_trace_value(p),
                           kronecker_symbol(d, p));
    const QuadExt bl = blm_sk(params, l, m);
    if (!bl.is_rational())
        throw std::logic_error("sk_coefficient_bessel: surd part did not cancel");
    return base * Rational(ipow(L * M, static_cast<unsigned long>(k))) * bl.rational_part();
}

CoefficientTable generate_table(const SKLiftSpec& lift, std::int64_t disc_bound, int jobs) {
    validate_weight(lift.hecke.k);
    if (disc_bound < 0)
        throw std::invalid_argument("generate_table: disc bound must be >= 0");

    std::vector<std::int64_t> discs;
    for (std::int64_t D = -3; D >= -disc_bound; --D) {
        if (!is_discriminant(D))
            continue;
        if (lift.base.count(fundamental_split(D).d))
            discs.push_back(D);
    }

    using Shard = std::vector<std::pair<QForm, Rational>>;
    auto fill = [&lift](std::int64_t D, Shard& out) {
        for (std::int64_t L = 1; L * L <= -D; ++L) {
            if (D % (L * L) != 0)
                continue;
            const std::int64_t Dp = D / (L * L);
            if (!is_discriminant(Dp))
                continue;
            for (const QForm& f : enumerate_classes(Dp, L))
                out.emplace_back(f, sk_coefficient(lift, f));
        }
    };

    CoefficientTable table;
    table.k = lift.hecke.k;
    if (jobs <= 1) {
        Shard shard;
        for (std::int64_t D : discs)
            fill(D, shard);
        for (auto& e : shard)
            table.entries.insert(std::move(e));
        return table;
    }

    const std::size_t n = static_cast<std::size_t>(jobs);
    std::vector<Shard> shards(n);
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (std::size_t t = 0; t < n; ++t) {
        threads.emplace_back([&, t]() {
            try {
                for (std::size_t i = t; i < discs.size(); i += n)
                    fill(discs[i], shards[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads)
        th.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    for (auto& shard : shards)
        for (auto& e : shard)
            table.entries.insert(std::move(e));
    return table;
}

bool MaassReport::all_pass() const {
    if (!violations.empty())
        return false;
    return std::all_of(relations.begin(), relations.end(),
                       [](const MaassRelationCheck& r) { return r.pass; });
}

std::size_t MaassReport::failed_count() const {
    std::size_t n = violations.size();
    for (const auto& r : relations)
        if (!r.pass)
            ++n;
    return n;
}

MaassReport maass_check(const CoefficientTable& table) {
    validate_weight(table.k);

    std::map<std::pair<std::int64_t, std::int64_t>,
             std::vector<std::pair<QForm, Rational>>> groups;
    for (const auto& [f, v] : table.entries) {
        const std::int64_t L = f.content();
        groups[{f.disc() / (L * L), L}].emplace_back(f, v);
    }

    MaassReport report;
    for (const auto& [key, members] : groups) {
        (void)key;
        for (std::size_t i = 1; i < members.size(); ++i)
            if (members[i].second != members[0].second)
                report.violations.push_back({members[0].first, members[i].first,
                                             members[0].second, members[i].second});
    }

    for (const auto& [key, members] : groups) {
        const auto [D, L] = key;
        const Rational& lhs = members[0].second;
        Rational rhs(0);
        bool complete = true;
        for (std::int64_t r : divisors(L)) {
            const std::int64_t cofactor = L / r;
            const std::int64_t target = D * cofactor * cofactor;
            auto it = groups.find({target, 1});
            if (it == groups.end()) {
                report.incomplete.push_back({D, L, target});
                complete = false;
                break;
            }
            rhs += Rational(ipow(r, static_cast<unsigned long>(table.k - 1))) *
                   it->second[0].second;
        }
        if (complete)
            report.relations.push_back({D, L, members[0].first, lhs, rhs, lhs == rhs});
    }
    return report;
}

Rational average_coeff(const CoefficientTable& table, std::int64_t D, std::int64_t L) {
    const auto classes = enumerate_classes(D, L);
    if (classes.empty())
        throw std::domain_error("average_coeff: no classes of discriminant " +
                                std::to_string(D) + " and content " + std::to_string(L));
    Rational sum(0);
    for (const QForm& f : classes) {
        auto it = table.entries.find(f);
        if (it == table.entries.end())
            throw incomplete_error("missing table entry for form (" + std::to_string(f.a) +
                                   "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")");
        sum += it->second;
    }
    Rational avg = sum / Rational(static_cast<long>(classes.size()));
    return avg;
}

DetectResult detect_sk(const CoefficientTable& table, std::int64_t d, std::int64_t p) {
    validate_weight(table.k);
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("detect_sk: d must be a negative fundamental discriminant");
    if (!is_prime(p))
        throw std::invalid_argument("detect_sk: p must be prime");

    const Rational base_avg = average_coeff(table, d, 1);
    const Rational lhs = average_coeff(table, d, p);
    const Rational rhs = average_coeff(table, d * p * p, 1) +
                         Rational(ipow(p, static_cast<unsigned long>(table.k - 1))) * base_avg;
    SKVerdict verdict;
    if (base_avg == 0)
        verdict = SKVerdict::BaseVanishes;
    else
        verdict = lhs == rhs ? SKVerdict::SpezialscharConsistent : SKVerdict::Fails;
    return {verdict, base_avg, lhs, rhs};
}

std::vector<AsymptoticPoint> detect_asymptotic(const CoefficientTable& table,
                                               std::int64_t d,
                                               const std::vector<std::int64_t>& primes) {
    validate_weight(table.k);
    if (d >= 0 || !is_fundamental_discriminant(d))
        throw std::invalid_argument("detect_asymptotic: d must be a negative fundamental discriminant");

    std::vector<AsymptoticPoint> out;
    out.reserve(primes.size());
    for (std::int64_t p : primes) {
        if (!is_prime(p))
            throw std::invalid_argument("detect_asymptotic: p must be prime");
        try {
            const Rational base_avg = average_coeff(table, d, 1);
            const Rational defect = average_coeff(table, d, p) -
                                    average_coeff(table, d * p * p, 1) -
                                    Rational(ipow(p, static_cast<unsigned long>(table.k - 1))) * base_avg;
            Rational scale(Integer(1), ipow(p, static_cast<unsigned long>(table.k - 1)));
            scale.canonicalize();
            out.push_back({p, true, defect * scale});
        } catch (const incomplete_error&) {
            out.push_back({p, false, Rational(0)});
        }
    }
    return out;
}

} // namespace skmaass
