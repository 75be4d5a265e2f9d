#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skmaass/qforms.hpp"
#include "skmaass/rational.hpp"

namespace skmaass {

/// Hecke data of an elliptic eigenform of weight 2k-2 (k = Siegel weight,
/// even). Prime-power eigenvalues follow c(p^{mu+1}) = c(p) c(p^mu) -
/// p^{2k-3} c(p^{mu-1}) with c(1) = 1.
struct EllipticHecke {
    int k = 0;
    std::map<std::int64_t, Integer> eigen; // p -> c(p)
};

Integer hecke_power(const EllipticHecke& h, std::int64_t p, int mu);

/// Input data for a lift: Hecke eigenvalues plus the base coefficients
/// a(d;1) at fundamental discriminants. The base values are external input;
/// only their d-dependence matters to the identities checked here.
struct SKLiftSpec {
    EllipticHecke hecke;
    std::map<std::int64_t, Rational> base; // fundamental d -> a(d;1)
};

/// a(S) = base(d) * prod_{p | n1} sum_{i=0}^{b_p} p^{i(k-1)}
///        (c(p^{a_p-i}) - delta_p p^{k-2} c(p^{a_p-i-1}))
/// with a_p = v_p(n1), b_p = v_p(content), delta_p = (d/p), c(p^{-1}) = 0.
Rational sk_coefficient(const SKLiftSpec& lift, const QForm& s);

/// a(nT) for primitive T of fundamental discriminant:
/// base(d) * prod_{p^nu || n} sum_{i=0}^{nu} p^{(nu-i)(k-1)}
///           (c(p^i) - delta_p p^{k-2} c(p^{i-1})).
Rational sk_coefficient_dks(const SKLiftSpec& lift, const QForm& t, std::int64_t n);

/// a(d M^2; L) = (LM)^k base(d) B_p(h(v_p(L), v_p(M))) for L, M powers of a
/// single prime p, with the local Bessel value taken at the SK-type
/// parameters (A = c(p)/p^{(2k-3)/2}, B = p^{1/2}+p^{-1/2}, delta = (d/p)).
Rational sk_coefficient_bessel(const SKLiftSpec& lift, std::int64_t d,
                               std::int64_t L, std::int64_t M, std::int64_t p);

/// Exact Fourier coefficients indexed by reduced positive definite forms.
struct CoefficientTable {
    int k = 0;
    std::map<QForm, Rational> entries;
};

/// All reduced classes of |disc| <= disc_bound whose fundamental discriminant
/// has a base value; other discriminants are skipped. jobs > 1 partitions the
/// work by discriminant with identical output.
CoefficientTable generate_table(const SKLiftSpec& lift, std::int64_t disc_bound,
                                int jobs = 1);

struct MaassRelationCheck {
    std::int64_t D; // disc / content^2
    std::int64_t L; // content
    QForm rep;      // smallest reduced representative in the table
    Rational lhs;
    Rational rhs;
    bool pass;
};

struct ClassFunctionViolation {
    QForm s1, s2;
    Rational v1, v2;
};

struct MaassIncomplete {
    std::int64_t D, L;
    std::int64_t missing_disc; // the absent content-1 discriminant
};

struct MaassReport {
    std::vector<MaassRelationCheck> relations;
    std::vector<ClassFunctionViolation> violations;
    std::vector<MaassIncomplete> incomplete;

    bool all_pass() const;
    std::size_t failed_count() const;
};

/// Check a(D;L) = sum_{r | L} r^{k-1} a(D (L/r)^2; 1) on every (D, L) group
/// of the table, plus equality of values within each (disc, content) class.
MaassReport maass_check(const CoefficientTable& table);

/// Average of the table values over the classes of content L and
/// discriminant D L^2. Every class must be present.
Rational average_coeff(const CoefficientTable& table, std::int64_t D, std::int64_t L);

enum class SKVerdict { SpezialscharConsistent, Fails, BaseVanishes };

struct DetectResult {
    SKVerdict verdict;
    Rational base_avg; // avg a(d;1)
    Rational lhs;      // avg a(d;p)
    Rational rhs;      // avg a(dp^2;1) + p^{k-1} avg a(d;1)
};

/// Single averaged Maass relation at (d, p): consistent iff avg a(d;1) != 0
/// and avg a(d;p) = avg a(dp^2;1) + p^{k-1} avg a(d;1) exactly.
DetectResult detect_sk(const CoefficientTable& table, std::int64_t d, std::int64_t p);

struct AsymptoticPoint {
    std::int64_t p;
    bool complete;
    Rational value; // p^{1-k}(avg a(d;p) - avg a(dp^2;1) - p^{k-1} avg a(d;1))
};

/// Per-prime normalized defect of the averaged relation; identically zero on
/// tables satisfying the relations, tends to -avg a(d;1) for eigenforms
/// orthogonal to the lifts.
std::vector<AsymptoticPoint> detect_asymptotic(const CoefficientTable& table,
                                               std::int64_t d,
                                               const std::vector<std::int64_t>& primes);

} // namespace skmaass
