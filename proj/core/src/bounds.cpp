#include "reconlab/bounds.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "reconlab/code.hpp"
#include "reconlab/error.hpp"

namespace reconlab {

BigCount ball_volume(long long n, unsigned q, long long t) {
    require(q >= 2, "alphabet size must be at least 2");
    BigCount total = 0;
    for (long long i = 0; i <= t; ++i) {
        const BigCount c = binom(n, i);
        if (c == 0) continue;
        total += ipow(static_cast<long long>(q) - 1, i) * c;
    }
    return total;
}

BigCount mixed_volume(long long n, unsigned q, long long a1, long long a2) {
    require(q >= 2, "alphabet size must be at least 2");
    BigCount total = 0;
    for (long long i = 0; i <= a1; ++i) {
        const BigCount c = binom(n, i);
        if (c == 0) continue;
        total += c * ball_volume(n - i, q, a2);
    }
    return total;
}

BigCount channels_unique_general(long long n, unsigned q, long long e, long long ell) {
    require(ell >= 1 && e >= 0, "N_{t,e} needs l >= 1 and e >= 0");
    const long long t = e + ell;
    const long long qq = q;
    BigCount total = 0;
    for (long long i = 0; i <= ell - 1; ++i) {
        const BigCount outer = binom(n - 2 * e - 1, i) * ipow(qq - 1, i);
        if (outer == 0) continue;
        BigCount inner = 0;
        const long long lo = e + i - (ell - 1);
        for (long long k = lo; k <= t - i; ++k) {
            const BigCount ck = binom(2 * e + 1, k);
            if (ck == 0) continue;
            for (long long j = lo; j <= t - i; ++j) {
                const BigCount cj = binom(2 * e + 1 - k, j);
                if (cj == 0) continue;
                inner += ck * cj * ipow(qq - 2, 2 * e + 1 - k - j);
            }
        }
        total += outer * inner;
    }
    return total + 1;
}

BigCount channels_unique_simplified(long long n, unsigned q, long long t) {
    BigCount total = 0;
    for (long long i = 0; i <= t - 1; ++i) total += binom(n - 1, i) * ipow(static_cast<long long>(q) - 1, i);
    return BigCount(q) * total + 1;
}

BigCount channels_unique(long long n, unsigned q, long long e, long long ell) {
    BigCount general = channels_unique_general(n, q, e, ell);
    if (e == 0) {
        const BigCount simple = channels_unique_simplified(n, q, ell);
        ensure(general == simple, "N_{t,0}: general form " + general.get_str() + " != simplified form " +
                                      simple.get_str());
    }
    return general;
}

ErasureListSize erasure_list_size(long long n, unsigned q, long long t, const BigCount& channels,
                                  std::optional<std::size_t> min_distance, const Limits& limits) {
    require(n >= t && t >= 0, "erasure list size needs n >= t >= 0");
    require(q >= 2, "alphabet size must be at least 2");
    if (channels < 1) throw PreconditionError("N = " + channels.get_str() + " is below every bracket (N >= 1)");
    const BigCount top = ball_volume(n, 2, t);
    if (channels > top) {
        throw PreconditionError("N = " + channels.get_str() + " is above every bracket (N <= V_2(n,t) = " +
                                top.get_str() + ")");
    }
    for (long long a = 0; a <= t; ++a) {
        const BigCount lo = ball_volume(n - a - 1, 2, t - a - 1) + 1;
        const BigCount hi = ball_volume(n - a, 2, t - a);
        if (lo <= channels && channels <= hi) {
            ErasureListSize out;
            out.a = a;
            if (min_distance) {
                out.list_size = max_code_size(static_cast<std::size_t>(a), q, *min_distance, limits);
            } else {
                out.list_size = ipow(q, a);
            }
            return out;
        }
    }
    throw InternalError("erasure brackets do not cover N = " + channels.get_str());
}

BigCount max_code_size(std::size_t n, unsigned q, std::size_t d, const Limits& limits) {
    require(q >= 2, "alphabet size must be at least 2");
    if (d == 0 || d == 1) return ipow(q, static_cast<long long>(n));
    if (d > n) return 1;
    const auto words = all_words(q, n, limits.code_search_words);
    return BigCount(static_cast<unsigned long>(max_distance_subset(words, d).size()));
}

namespace {

BigCount era_sub_sum(long long n, unsigned q, long long t_e, long long t_s, long long d, bool remainder_only) {
    require(q >= 2, "alphabet size must be at least 2");
    require(d >= 1, "minimum distance must be positive");
    require(t_e >= 0 && t_s >= 0, "budgets must be nonnegative");
    const long long qq = q;
    BigCount total = 0;
    for (long long ie = 0; ie <= t_e; ++ie) {
        for (long long je = 0; je <= t_e - ie; ++je) {
            const BigCount c_erase = binom(n - d, ie) * binom(d, je);
            if (c_erase == 0) continue;
            const long long i1_max = t_s - ceil_div(d - je, 2);
            for (long long i1 = 0; i1 <= i1_max; ++i1) {
                const BigCount c1 = binom(n - d - ie, i1) * ipow(qq - 1, i1);
                if (c1 == 0) continue;
                for (long long i2 = d + i1 - je - t_s; i2 <= t_s - i1; ++i2) {
                    const BigCount c2 = binom(d - je, i2);
                    if (c2 == 0) continue;
                    const long long i3_lo = remainder_only ? t_s + 1 - i1 - i2 - d : 0;
                    BigCount c3 = 0;
                    for (long long i3 = std::max<long long>(i3_lo, 0); i3 <= t_s - i1 - i2; ++i3) {
                        c3 += binom(d - je - i2, i3) * ipow(qq - 2, i3);
                    }
                    total += c_erase * c1 * c2 * c3;
                }
            }
        }
    }
    return total;
}

}  // namespace

BigCount era_sub_channels_first_form(long long n, unsigned q, long long t_e, long long t_s, long long d) {
    return era_sub_sum(n, q, t_e, t_s, d, false) + 1;
}

BigCount era_sub_channels_second_form(long long n, unsigned q, long long t_e, long long t_s, long long d) {
    return mixed_volume(n, q, t_e, t_s - d) + era_sub_sum(n, q, t_e, t_s, d, true) + 1;
}

BigCount era_sub_channels(long long n, unsigned q, long long t_e, long long t_s, long long d) {
    require(n >= t_e + t_s, "N' needs n >= t_e + t_s");
    BigCount first = era_sub_channels_first_form(n, q, t_e, t_s, d);
    const BigCount second = era_sub_channels_second_form(n, q, t_e, t_s, d);
    ensure(first == second, "N': first form " + first.get_str() + " != second form " + second.get_str());
    return first;
}

ConstantListBounds constant_list_bounds(long long n, unsigned q, long long e, long long ell) {
    require(ell >= 1 && e >= 0, "constant list bounds need l >= 1 and e >= 0");
    ConstantListBounds out;
    out.threshold = ball_volume(n, q, ell - 1) + 1;
    if (q >= 3) out.list_cap = big(ell) * (q - 1) + 1;
    out.lower_bound = big(floor_div(n, e + 1));
    return out;
}

MajorityThresholds majority_thresholds(long long n, unsigned q, long long e, long long ell) {
    require(ell >= 1 && e >= 0, "thresholds need l >= 1 and e >= 0");
    MajorityThresholds out;
    out.channels = channels_unique(n, q, e, ell);
    out.tau_prime = Rational(ball_volume(n - e - 1, q, ell - 1), big(e + 1));
    out.tau_prime.canonicalize();
    Rational share(big(e) * out.channels, big(e + 1));
    share.canonicalize();
    out.tau = out.tau_prime + share;
    return out;
}

BigCount list_channel_count(long long n, long long e, long long ell, long long a, const Rational& eps) {
    require(ell >= 1 && e >= 0, "N_{t,e,a} needs l >= 1 and e >= 0");
    require(a >= 0 && a <= ell - 1, "list offset a must lie in [0, l-1]");
    require(eps > 0, "epsilon must be positive");
    const Rational scaled = (Rational(1) + eps) * Rational(ball_volume(n - e - 1 - a, 2, ell - 1 - a));
    return ceil(scaled) + 1;
}

MajorityThresholds list_thresholds(long long n, long long e, long long ell, long long a, const Rational& eps) {
    MajorityThresholds out;
    out.channels = list_channel_count(n, e, ell, a, eps);
    out.tau_prime = Rational(ball_volume(n - e - 1 - a, 2, ell - 1 - a), big(e + a + 1));
    out.tau_prime.canonicalize();
    Rational share(big(e + a) * out.channels, big(e + a + 1));
    share.canonicalize();
    out.tau = out.tau_prime + share;
    return out;
}

BigCount euler_power_ceiling(unsigned long base, unsigned long k) {
    require(base >= 2, "base must be at least 2");
    double factorial = 1;
    for (unsigned long i = 2; i <= k; ++i) factorial *= static_cast<double>(i);
    const double bits = std::exp(1.0) * factorial * std::log2(static_cast<double>(base));
    constexpr double kMaxBits = 1 << 22;
    require(bits < kMaxBits, "b has about " + std::to_string(bits) + " bits; refusing to evaluate");
    const auto prec = static_cast<mpfr_prec_t>(bits) + 256;

    BigCount fact = 1;
    for (unsigned long i = 2; i <= k; ++i) fact *= i;

    mpfr_t exponent, value, base_f;
    mpfr_inits2(prec, exponent, value, base_f, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(exponent, 1, MPFR_RNDN);
    mpfr_exp(exponent, exponent, MPFR_RNDN);
    mpfr_mul_z(exponent, exponent, fact.get_mpz_t(), MPFR_RNDN);
    mpfr_set_ui(base_f, base, MPFR_RNDN);
    mpfr_pow(value, base_f, exponent, MPFR_RNDN);
    BigCount out;
    mpfr_get_z(out.get_mpz_t(), value, MPFR_RNDU);
    mpfr_clears(exponent, value, base_f, static_cast<mpfr_ptr>(nullptr));
    return out;
}

BinaryListCaps binary_list_caps(long long n, long long e, long long ell, long long a, const BigCount& max_list) {
    require(ell >= 1 && e >= 0, "list caps need l >= 1 and e >= 0");
    require(a >= 0 && a <= ell - 1, "list offset a must lie in [0, l-1]");
    require(max_list >= 1, "M must be positive");
    BinaryListCaps out;
    out.cap_simple = ipow(2, ell - a) * max_list;
    out.b = euler_power_ceiling(static_cast<unsigned long>(2 * e + 2 * a + 2), static_cast<unsigned long>(e + a + 1));
    if (a >= 1) {
        const long long gap = ell - a - 1;
        bool applies = false;
        if (gap == 0) {
            applies = n >= -1;
        } else if (out.b < 62) {
            const BigCount need = big(gap * gap) * ipow(2, out.b.get_si()) + big(ell - a - 2);
            applies = big(n) >= need;
        }
        if (applies) {
            const BigCount first = big(e + ell + 1) * max_list;
            const BigCount second = out.b / big(2 * e + 2 * a + 2);
            out.cap_refined = std::max(first, second);
        }
    }
    return out;
}

}  // namespace reconlab
