#pragma once

#include <cstdint>
#include <optional>

#include "reconlab/limits.hpp"
#include "reconlab/numeric.hpp"

namespace reconlab {

// Closed-form channel counts and list sizes. All arithmetic is exact; arguments
// are signed so that shifted lengths like n-a-1 may go negative, in which case
// the binomial convention C(i, j) = 0 for j > i makes the terms vanish.

/// V_q(n, t) = sum_{i<=t} (q-1)^i C(n, i). Equals q^n for t >= n.
BigCount ball_volume(long long n, unsigned q, long long t);

/// V_q(n, a1, a2): words reachable with at most a1 erasures and a2 substitutions.
BigCount mixed_volume(long long n, unsigned q, long long a1, long long a2);

/// N_{t,e} for an e-error-correcting code and t = e + ell substitutions, from the
/// general quadruple sum. For e = 0 the simplified form is evaluated as well and
/// a disagreement raises InternalError.
BigCount channels_unique(long long n, unsigned q, long long e, long long ell);
BigCount channels_unique_general(long long n, unsigned q, long long e, long long ell);
BigCount channels_unique_simplified(long long n, unsigned q, long long t);

/// Result of bracketing N between consecutive erasure-ball volumes.
struct ErasureListSize {
    long long a = 0;
    BigCount list_size;
};

/// Finds a with V_2(n-a-1, t-a-1)+1 <= N <= V_2(n-a, t-a) and returns q^a for the
/// full space, or A_q(a, d) when `min_distance` is given. a ranges over [0, t]; the
/// a = t bracket is the single value N = 1.
ErasureListSize erasure_list_size(long long n, unsigned q, long long t, const BigCount& channels,
                                  std::optional<std::size_t> min_distance = std::nullopt,
                                  const Limits& limits = {});

/// A_q(n, d) by exhaustive maximum-clique search on Z_q^n.
BigCount max_code_size(std::size_t n, unsigned q, std::size_t d, const Limits& limits = {});

/// N' for erasure+substitution channels over a code of minimum distance d, from
/// the first displayed sum. The second form (V_q(n,t_e,t_s-d) + remainder) is
/// evaluated too and must agree.
BigCount era_sub_channels(long long n, unsigned q, long long t_e, long long t_s, long long d);
BigCount era_sub_channels_first_form(long long n, unsigned q, long long t_e, long long t_s, long long d);
BigCount era_sub_channels_second_form(long long n, unsigned q, long long t_e, long long t_s, long long d);

struct ConstantListBounds {
    BigCount threshold;                 // V_q(n, l-1) + 1
    std::optional<BigCount> list_cap;   // l(q-1)+1, established for q >= 3 only
    BigCount lower_bound;               // floor(n/(e+1)) when N <= V_q(n, l-1)
};

ConstantListBounds constant_list_bounds(long long n, unsigned q, long long e, long long ell);

struct MajorityThresholds {
    Rational tau_prime;
    Rational tau;
    BigCount channels;  // N_{t,e} or N_{t,e,a}
};

/// tau'_{t,e} = V_q(n-e-1, l-1)/(e+1), tau_{t,e} = tau' + e/(e+1) N_{t,e}.
MajorityThresholds majority_thresholds(long long n, unsigned q, long long e, long long ell);

/// N_{t,e,a} = ceil((1+eps) V_2(n-e-1-a, l-1-a)) + 1.
BigCount list_channel_count(long long n, long long e, long long ell, long long a, const Rational& eps);

/// Binary list-decoding thresholds tau'_{t,e,a} and tau_{t,e,a} with N = N_{t,e,a}.
MajorityThresholds list_thresholds(long long n, long long e, long long ell, long long a, const Rational& eps);

struct BinaryListCaps {
    BigCount cap_simple;                  // 2^(l-a) M
    std::optional<BigCount> cap_refined;  // floor(max{(t+1)M, b/(2e+2a+2)}) when applicable
    BigCount b;                           // ceil((2e+2a+2)^(exp(1) (e+a+1)!))
};

BinaryListCaps binary_list_caps(long long n, long long e, long long ell, long long a, const BigCount& max_list);

/// ceil(base^(exp(1) * k!)) evaluated with MPFR at enough precision for an exact ceiling.
BigCount euler_power_ceiling(unsigned long base, unsigned long k);

}  // namespace reconlab
