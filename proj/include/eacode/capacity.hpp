#pragma once

#include <string>
#include <vector>

#include "eacode/rational.hpp"

namespace eacode {

struct RegionParams {
    int N = 0, K = 0, NB = 0, KB = 0;

    /// Throws ParamMismatch unless 0 <= K <= N and 0 <= KB <= NB.
    void validate() const;
    friend bool operator==(const RegionParams&, const RegionParams&) = default;
};

struct RatePoint {
    Rational lambda0{0}, lambdaB{0};
    friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

enum class RegionCase { Case1, Case2, Case3 };

std::string to_string(RegionCase c);

/// Case1 when 2 KB <= NB (NB = 0 included), Case2 when 2K >= N, else Case3.
RegionCase case_of(const RegionParams& p);

/// max(2K - N, 0) + lambdaB * max(2 KB - NB, 0).
Rational cut_bound(const RegionParams& p, const Rational& lambdaB);
/// min(N, 2K) - min(N - K, K) * NB / KB; may be negative. Throws UndefinedForZeroKB.
Rational inf_bound(const RegionParams& p);
/// The Case-3 achievability line. Throws CaseMismatch in Cases 1 and 2.
Rational r1_bound(const RegionParams& p, const Rational& lambdaB);

Rational outer_capacity(const RegionParams& p, const Rational& lambdaB);
Rational inner_capacity(const RegionParams& p, const Rational& lambdaB);

struct ExtremePoint {
    RatePoint point;
    std::string label;
    /// Endpoint of the Case-3 space-sharing segment that is only conjectured optimal.
    bool conjectured_segment = false;
};

std::vector<ExtremePoint> extreme_points(const RegionParams& p);

enum class Membership { InsideInner, OnInnerBoundary, OpenGap, OutsideOuter };

std::string to_string(Membership m);

struct MembershipVerdict {
    Membership status = Membership::InsideInner;
    Rational inner_cap{0}, outer_cap{0};
    /// lambda0 equals the outer capacity (OnInnerBoundary or OpenGap only).
    bool on_outer_boundary = false;
};

/// Throws BadFormat for negative coordinates.
MembershipVerdict membership(const RegionParams& p, const RatePoint& x);

/// lambdaB values >= 0 where the inner or the outer curve changes slope.
std::vector<Rational> breakpoints(const RegionParams& p);

struct BoundarySample {
    Rational lambdaB{0}, inner{0}, outer{0};
    bool breakpoint = false;
};

/// n_points evenly spaced samples on [0, 2 * last breakpoint] (or [0, 1]),
/// merged with the exact breakpoints. Throws BadFormat when n_points < 2.
std::vector<BoundarySample> boundary_samples(const RegionParams& p, int n_points);

/// lambdaB,inner_lambda0,outer_lambda0 as exact fractions, then decimal renderings.
std::string to_csv(const std::vector<BoundarySample>& samples);

}  // namespace eacode
