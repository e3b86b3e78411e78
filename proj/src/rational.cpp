#include "rlrs/rational.hpp"

#include <cctype>
#include <cmath>

namespace rlrs {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational out;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InvalidInput("malformed rational: '" + std::string(text) + "'");
        Integer n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) throw InvalidInput("zero denominator: '" + std::string(text) + "'");
        out = Rational(n, d);
        out.canonicalize();
    } else if (dot != std::string_view::npos) {
        auto ip = s.substr(0, dot);
        auto fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp)))
            throw InvalidInput("malformed rational: '" + std::string(text) + "'");
        Integer n(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
        Integer d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, fp.size());
        out = Rational(n, d);
        out.canonicalize();
    } else {
        if (!all_digits(s)) throw InvalidInput("malformed rational: '" + std::string(text) + "'");
        out = Rational(Integer(std::string(s), 10));
    }
    return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_decimal(const Rational& q, int digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = abs(q) * scale + Rational(1, 2);
    Integer n = floor_of(scaled);
    std::string s = n.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    bool zero = n == 0;
    return (q < 0 && !zero) ? "-" + s : s;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational pow(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    if (r.get_den() < 0) {
        r.get_num() = -r.get_num();
        r.get_den() = -r.get_den();
    }
    return r;
}

Rational pow2(long e) {
    Rational r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
    return r;
}

Rational round_down(const Rational& q, long bits) {
    Rational s = q * pow2(bits);
    return Rational(floor_of(s)) * pow2(-bits);
}

Rational round_up(const Rational& q, long bits) {
    Rational s = q * pow2(bits);
    return Rational(ceil_of(s)) * pow2(-bits);
}

long ilog2(const Rational& q) {
    Rational a = abs(q);
    long e = static_cast<long>(mpz_sizeinbase(a.get_num_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(a.get_den_mpz_t(), 2));
    // 2^(e-1) < a < 2^(e+1); settle the exponent exactly.
    if (a >= pow2(e)) return e;
    return e - 1;
}

Rational round_up_rel(const Rational& q, long bits) {
    if (q == 0) return q;
    long shift = bits - ilog2(q);
    return round_up(q, shift);
}

Rational round_down_rel(const Rational& q, long bits) {
    if (q == 0) return q;
    long shift = bits - ilog2(q);
    return round_down(q, shift);
}

namespace {

// floor(sqrt(q * 4^k)) and its ceiling counterpart, for k chosen by the caller.
Integer isqrt_floor(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

long sqrt_shift(const Rational& q, long bits) {
    // Scale so that sqrt(q * 4^k) has about `bits` integer bits.
    return bits - ilog2(q) / 2 + 2;
}

}  // namespace

Rational sqrt_down(const Rational& q, long bits) {
    if (q < 0) throw std::domain_error("sqrt of negative");
    if (q == 0) return q;
    long k = sqrt_shift(q, bits);
    Integer n = floor_of(q * pow2(2 * k));
    return Rational(isqrt_floor(n)) * pow2(-k);
}

Rational sqrt_up(const Rational& q, long bits) {
    if (q < 0) throw std::domain_error("sqrt of negative");
    if (q == 0) return q;
    long k = sqrt_shift(q, bits);
    Integer n = ceil_of(q * pow2(2 * k));
    Integer r = isqrt_floor(n);
    if (r * r < n) r += 1;
    return Rational(r) * pow2(-k);
}

Rational nearest_simple(const Rational& q, const Integer& max_den) {
    // Continued-fraction convergents until the denominator bound is exceeded.
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    Integer num = q.get_num(), den = q.get_den();
    Rational best = Rational(floor_of(q));
    while (den != 0) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > max_den) break;
        best = Rational(p2, q2);
        best.canonicalize();
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Integer r = num - a * den;
        num = den;
        den = r;
    }
    return best;
}

long double to_ld(const Rational& q) {
    if (q == 0) return 0.0L;
    long e = ilog2(q);
    Rational m = q * pow2(64 - e);
    Integer mi = floor_of(m);
    long double v = static_cast<long double>(mpz_get_d(mi.get_mpz_t()));
    // mpz_get_d truncates to double; refine with the low part for extra bits.
    Integer hi;
    mpz_set_d(hi.get_mpz_t(), static_cast<double>(v));
    Integer lo = mi - hi;
    v += static_cast<long double>(mpz_get_d(lo.get_mpz_t()));
    return std::ldexp(v, static_cast<int>(e - 64));
}

}  // namespace rlrs
