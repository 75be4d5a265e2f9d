#pragma once

#include <array>
#include <vector>

#include "skmaass/quadext.hpp"

namespace skmaass {

/// Local data of an unramified spherical representation of GSp(4) with
/// trivial central character, as seen by its special Bessel model:
/// residue field size q, Satake traces A = alpha + 1/alpha and
/// B = beta + 1/beta, and the quadratic-extension indicator delta
/// (1 split, -1 inert field, 0 ramified field).
struct SphericalParams {
    long q;
    QuadExt A;
    QuadExt B;
    int delta;

    SphericalParams(long q, QuadExt A, QuadExt B, int delta);
};

enum class BesselKind { SKType, Exceptional, Generic };

/// Which of the two traces equals q^{1/2} + q^{-1/2}.
enum class SKTrace { None, TraceA, TraceB, Both };

struct BesselClassification {
    BesselKind kind;
    SKTrace which;
};

/// q^{1/2} + q^{-1/2}, the trace marking a Satake parameter q^{+-1/2}.
QuadExt sk_trace_value(long q);

BesselClassification classify(const SphericalParams& params);

/// Denominator polynomial P(x) of the one-variable generating series of
/// B(h(0,m)): [P0..P4].
std::array<QuadExt, 5> poly_p(const SphericalParams& params);

/// Numerator polynomial H(x,0): [H0..H3].
std::array<QuadExt, 4> poly_h_x0(const SphericalParams& params);

/// B(h(0,0)), ..., B(h(0,max_m)) by the 4-term recurrence sum P_i B(h(0,m-i)) = H_m.
std::vector<QuadExt> b0_prefix(const SphericalParams& params, int max_m);

/// B(h(0,m)) via the recurrence; defined for every spherical parameter set.
QuadExt b0(const SphericalParams& params, int m);

/// Closed form q^{-3m/2} (U_m(A') - delta q^{-1/2} U_{m-1}(A')) where A' is
/// the trace complementary to q^{+-1/2}. Valid for SK-type parameters and,
/// with A' = 0, in the exceptional case; generic parameters are rejected.
QuadExt b0_closed_sk(const SphericalParams& params, int m);

/// B(h(l,m)) = sum_{i<=l} q^{-i} B(h(0,l+m-i)), the local Maass relation.
/// Only asserted for SK-type parameters; l < 0 yields 0.
QuadExt blm_sk(const SphericalParams& params, int l, int m);

/// q^{3m/2} B(h(l, m-l)) as the Siegel-series-shaped sum
/// sum_{i<=l} q^{i/2} (U_{m-i}(A') - delta q^{-1/2} U_{m-i-1}(A')), m >= l >= 0.
QuadExt siegel_series_value(const SphericalParams& params, int l, int m);

/// ((1+1/q) - q^{-1/2}A)((1+1/q) - q^{-1/2}B)/(q - delta); vanishes exactly
/// when one of the Satake parameters is q^{+-1/2}.
QuadExt obstruction(const SphericalParams& params);

} // namespace skmaass
