#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "skmaass/rational.hpp"

namespace skmaass {

/// Semi-integral symmetric matrix S = [a, b/2; b/2, c] stored as the
/// integer triple (a, b, c). disc(S) = b^2 - 4ac = -4 det(S).
struct QForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    std::int64_t disc() const { return b * b - 4 * a * c; }
    std::int64_t content() const;
    bool positive_definite() const { return a > 0 && disc() < 0; }

    /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
    bool reduced() const;

    auto operator<=>(const QForm&) const = default;
};

/// Integer 2x2 matrix, used for SL2(Z) changes of variable.
struct Mat2 {
    std::int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;

    std::int64_t det() const { return m00 * m11 - m01 * m10; }
    Mat2 operator*(const Mat2& o) const;
};

/// T^t S T for T in SL2(Z).
QForm transform(const QForm& s, const Mat2& t);

/// Gauss reduction of a positive definite form. Returns the reduced
/// representative and T in SL2(Z) with T^t S T reduced; disc and content
/// are preserved.
std::pair<QForm, Mat2> reduce(const QForm& s);

struct DiscFactorization {
    std::int64_t d;  // fundamental discriminant < 0
    std::int64_t n1; // positive, disc = n1^2 * d
};

/// True when D = 0 or 1 mod 4 (the values b^2 - 4ac can take).
bool is_discriminant(std::int64_t D);

bool is_fundamental_discriminant(std::int64_t d);

/// Unique factorization D = n1^2 * d with d fundamental; D < 0, D = 0,1 mod 4.
DiscFactorization fundamental_split(std::int64_t D);

/// Quadratic-residue symbol (d/p) for prime p, with (d/p) = 0 when p | d.
/// For p = 2 this is the Kronecker symbol, matching the split/inert/ramified
/// behaviour of the prime 2 in Q(sqrt d).
int kronecker_symbol(std::int64_t d, std::int64_t p);

/// One reduced representative per class of content L and discriminant D*L^2,
/// obtained by enumerating primitive reduced forms of discriminant D and
/// scaling by L. Sorted by (a, |b|, b descending, c).
std::vector<QForm> enumerate_classes(std::int64_t D, std::int64_t L);

/// |H(d M^2; L)| by the classical class-number formula for the order of
/// conductor M, with the primitive class number taken from enumeration.
std::int64_t class_count_formula(std::int64_t d, std::int64_t M, std::int64_t L);

/// The distinguished primitive form of fundamental discriminant d:
/// (-d/4, 0, 1) for d = 0 mod 4, ((1-d)/4, 1, 1) for d = 1 mod 4.
QForm s_d(std::int64_t d);

struct CosetInvariants {
    std::int64_t p;
    int l; // v_p(content)
    int m; // v_p(n1 / content)
};

CosetInvariants coset_invariants(const QForm& s, std::int64_t p);

/// Rational 2x2 matrix for the p-adic coset computations.
struct RatMat2 {
    Rational m00, m01, m10, m11;

    Rational det() const { return m00 * m11 - m01 * m10; }
    RatMat2 inverse() const;
    RatMat2 operator*(const RatMat2& o) const;
};

/// Entries [m00, m01, m10, m11] of h^t S h with S = [a, b/2; b/2, c].
std::array<Rational, 4> congruence(const QForm& s, const RatMat2& h);

/// Standard assumptions on S' at p: a, b integral, c a p-adic unit, and
/// b^2 - 4ac generating the local discriminant (equivalently p does not
/// divide the square part n1).
bool standard_assumptions(const QForm& sprime, std::int64_t p);

/// Level m of the GL2 double coset T(F) diag(p^m, 1) GL2(Z_p) containing h:
/// m = max(0, -v(a'), -v(d')) for [a' b'; c' d'] = det(h)^{-1} h^t S' h.
int gl2_coset_level(const RatMat2& h, const QForm& sprime, std::int64_t p);

/// (l, m) of the GSp4 double coset containing diag(h, v h^{-t}):
/// m from gl2_coset_level and l = v_p(det(h)/v) - m (l may be negative).
std::pair<int, int> gsp4_coset(const RatMat2& h, const Rational& v,
                               const QForm& sprime, std::int64_t p);

/// The explicit matrix A with s_d(disc-fundamental-part) = a * A^t S A.
RatMat2 fundamental_transfer(const QForm& s);

struct ArchDecomposition {
    double u;
    double x;
    double y;
    double lambda; // sqrt(det S)
    double zeta;   // >= 1
};

/// Cartan data of the upper-triangular square root of S; satisfies
/// lambda (zeta^2 + zeta^{-2}) = Tr(S).
ArchDecomposition arch_decompose(const QForm& s);

/// det(S)^{k/2} exp(-2 pi Tr S), the normalized archimedean Bessel value.
double bessel_arch(const QForm& s, int k);

} // namespace skmaass
