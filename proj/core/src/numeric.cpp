#include "reconlab/numeric.hpp"

#include <gmp.h>

#include <limits>

#include "reconlab/error.hpp"

namespace reconlab {

BigCount binom(long long i, long long j) {
    if (j < 0 || j > i) return 0;
    BigCount out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
    return out;
}

BigCount ipow(long long base, long long exp) {
    if (exp < 0) return 0;
    if (exp == 0) return 1;
    BigCount b = big(base);
    BigCount out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp));
    return out;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

BigCount ceil(const Rational& r) {
    BigCount out;
    mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

std::string to_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const BigCount& v) { return v.get_str(); }

Rational parse_rational(const std::string& text) {
    require(!text.empty(), "empty rational");
    try {
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string whole = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            require(frac.find_first_not_of("0123456789") == std::string::npos,
                    "malformed decimal: " + text);
            bool neg = !whole.empty() && whole[0] == '-';
            if (whole.empty() || whole == "-" || whole == "+") whole += "0";
            BigCount den = ipow(10, static_cast<long long>(frac.size()));
            BigCount num(whole, 10);
            BigCount f = frac.empty() ? BigCount(0) : BigCount(frac, 10);
            num = num * den + (neg ? -f : f);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        Rational r(text, 10);
        r.canonicalize();
        require(r.get_den() != 0, "zero denominator: " + text);
        return r;
    } catch (const std::invalid_argument&) {
        throw PreconditionError("malformed rational: " + text);
    }
}

std::uint64_t to_u64(const BigCount& v) {
    require(v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64, "value does not fit in 64 bits: " + v.get_str());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

}  // namespace reconlab
