#include "rlrs/algebraic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

#include "rlrs/elementary.hpp"

namespace rlrs {

struct AlgebraicNumber::Cache {
    std::mutex m;
    RootDisk disk;
};

namespace {

Poly normalize(const Poly& p) { return squarefree_part(p).primitive(); }

ComplexInterval disk_box(const RootDisk& d, bool real) {
    RealInterval re(d.center.re - d.radius, d.center.re + d.radius);
    if (real) return {re, RealInterval()};
    return {re, RealInterval(d.center.im - d.radius, d.center.im + d.radius)};
}

// Moves a disk that touches the real axis either onto it (real root) or off it.
RootDisk settle_reality(const Poly& p, RootDisk dk) {
    if (dk.center.im == 0) return dk;
    for (long bits = 16; bits < 40000; bits += 32) {
        if (abs(dk.center.im) >= dk.radius) return dk;
        RootDisk real{{dk.center.re, Rational(0)}, dk.radius + abs(dk.center.im)};
        if (pellet_test(p, real.center, real.radius, 1)) return real;
        dk = refine_disk(p, dk, bits);
    }
    throw std::runtime_error("cannot decide reality of an algebraic number");
}

std::optional<AlgebraicNumber> detect_simple(const Poly& q, const RootDisk& dk) {
    // Rational or Gaussian-rational values get their minimal polynomial.
    Integer max_den = Integer(1) << 40;
    Rational re = nearest_simple(dk.center.re, max_den);
    Rational im = dk.center.im == 0 ? Rational(0) : nearest_simple(dk.center.im, max_den);
    CRat z{re, im};
    if ((z - dk.center).norm2() >= dk.radius * dk.radius) return std::nullopt;
    if (!q.eval(z).is_zero()) return std::nullopt;
    if (im == 0) return AlgebraicNumber::rational(re);
    return AlgebraicNumber::gaussian(z);
}

unsigned euler_phi(unsigned n) {
    unsigned r = n;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            r -= r / p;
        }
    if (n > 1) r -= r / n;
    return r;
}

std::mutex cyclo_mutex;
std::map<unsigned, Poly> cyclo_cache;

Poly cyclotomic_cached(unsigned n) {
    std::lock_guard<std::mutex> lock(cyclo_mutex);
    auto it = cyclo_cache.find(n);
    if (it != cyclo_cache.end()) return it->second;
    Poly p = cyclotomic(n);
    cyclo_cache.emplace(n, p);
    return p;
}

// True when gamma is a root of g, where g divides gamma's polynomial.
bool root_of_factor(const AlgebraicNumber& gamma, const Poly& g) {
    const Poly& p = gamma.poly();
    if (g.degree() <= 0) return false;
    if (g.degree() == p.degree()) return true;
    Poly h = p / g;
    for (long bits = 8; bits < 40000; bits += 24) {
        RootDisk dk = gamma.disk();
        if (pellet_test(g, dk.center, dk.radius, 1)) return true;
        if (pellet_test(h, dk.center, dk.radius, 1)) return false;
        gamma.enclosure(bits);
    }
    throw std::runtime_error("cannot separate factors at an algebraic number");
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(rational(Rational(0))) {}

AlgebraicNumber::AlgebraicNumber(const Poly& poly, const RootDisk& disk)
    : poly_(poly.primitive()), cache_(std::make_shared<Cache>()) {
    cache_->disk = poly_.degree() == 1 ? RootDisk{CRat(-poly_.coeff(0) / poly_.coeff(1)), Rational(1)}
                                       : settle_reality(poly_, disk);
}

AlgebraicNumber AlgebraicNumber::rational(const Rational& q) {
    return AlgebraicNumber(Poly({-q, Rational(1)}), RootDisk{CRat(q), Rational(1)});
}

AlgebraicNumber AlgebraicNumber::gaussian(const CRat& z) {
    if (z.im == 0) return rational(z.re);
    Poly p({z.norm2(), -2 * z.re, Rational(1)});
    return AlgebraicNumber(p, RootDisk{z, abs(z.im)});
}

AlgebraicNumber AlgebraicNumber::from_enclosure(const Poly& p, const std::function<ComplexInterval(long)>& enclose) {
    Poly q = normalize(p);
    if (q.degree() < 1) throw std::invalid_argument("from_enclosure: constant polynomial");
    RootDisk dk = certify_enclosed_root(q, enclose);
    if (q.degree() == 1) return AlgebraicNumber(q, dk);
    AlgebraicNumber a(q, dk);
    if (q.degree() > 2 || a.disk().center.im == 0) {
        RootDisk fine = refine_disk(q, a.disk(), 96);
        if (auto s = detect_simple(q, fine)) return *s;
    }
    return a;
}

RootDisk AlgebraicNumber::disk() const {
    std::lock_guard<std::mutex> lock(cache_->m);
    return cache_->disk;
}

ComplexInterval AlgebraicNumber::enclosure(long bits) const {
    std::lock_guard<std::mutex> lock(cache_->m);
    RootDisk& dk = cache_->disk;
    if (poly_.degree() == 1) return ComplexInterval(RealInterval(dk.center.re));
    if (dk.radius > pow2(-(bits + 1))) dk = refine_disk(poly_, dk, bits + 1);
    return disk_box(dk, dk.center.im == 0);
}

std::complex<long double> AlgebraicNumber::approx() const {
    ComplexInterval b = enclosure(70);
    CRat c = b.mid();
    return {to_ld(c.re), to_ld(c.im)};
}

std::optional<Rational> AlgebraicNumber::as_rational() const {
    if (poly_.degree() == 1) return -poly_.coeff(0) / poly_.coeff(1);
    return std::nullopt;
}

bool AlgebraicNumber::is_real() const { return disk().center.im == 0; }

bool AlgebraicNumber::is_zero() const {
    if (poly_.coeff(0) != 0) return false;
    RootDisk dk = disk();
    return dk.center.norm2() < dk.radius * dk.radius;
}

bool AlgebraicNumber::is_one() const {
    if (poly_.eval(Rational(1)) != 0) return false;
    RootDisk dk = disk();
    return (dk.center - CRat(Rational(1))).norm2() < dk.radius * dk.radius;
}

int AlgebraicNumber::sign() const {
    if (!is_real()) throw std::domain_error("sign of a non-real algebraic number");
    if (auto q = as_rational()) return rlrs::sign(*q);
    if (is_zero()) return 0;
    for (long bits = 16;; bits += 32) {
        ComplexInterval b = enclosure(bits);
        if (b.re().positive()) return 1;
        if (b.re().negative()) return -1;
    }
}

AlgebraicNumber operator+(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    auto qa = a.as_rational(), qb = b.as_rational();
    if (qa && qb) return AlgebraicNumber::rational(*qa + *qb);
    if (qa || qb) {
        const AlgebraicNumber& x = qa ? b : a;
        Rational q = qa ? *qa : *qb;
        RootDisk dk = x.disk();
        dk.center.re += q;
        return AlgebraicNumber(x.poly().shift(-q), dk);
    }
    QMatrix ca = QMatrix::companion(a.poly()), cb = QMatrix::companion(b.poly());
    QMatrix m = kron(ca, QMatrix::identity(cb.rows())) + kron(QMatrix::identity(ca.rows()), cb);
    return AlgebraicNumber::from_enclosure(charpoly(m), [&](long bits) {
        return (a.enclosure(bits + 2) + b.enclosure(bits + 2)).rounded(bits + 4);
    });
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
    RootDisk dk = a.disk();
    return AlgebraicNumber(a.poly().negate_arg(), RootDisk{-dk.center, dk.radius});
}

AlgebraicNumber operator-(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a + (-b); }

AlgebraicNumber operator*(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    auto qa = a.as_rational(), qb = b.as_rational();
    if (qa && qb) return AlgebraicNumber::rational(*qa * *qb);
    if (qa || qb) {
        const AlgebraicNumber& x = qa ? b : a;
        Rational q = qa ? *qa : *qb;
        if (q == 0) return AlgebraicNumber::rational(Rational(0));
        RootDisk dk = x.disk();
        return AlgebraicNumber(x.poly().scale_arg(1 / q), RootDisk{CRat(q) * dk.center, abs(q) * dk.radius});
    }
    QMatrix m = kron(QMatrix::companion(a.poly()), QMatrix::companion(b.poly()));
    return AlgebraicNumber::from_enclosure(charpoly(m), [&](long bits) {
        long g = bits + 8;
        ComplexInterval ea = a.enclosure(g), eb = b.enclosure(g);
        long extra = std::max<long>(0, ilog2(ea.mag() + eb.mag() + 1)) + 2;
        if (extra > 2) {
            ea = a.enclosure(g + extra);
            eb = b.enclosure(g + extra);
        }
        return (ea * eb).rounded(bits + 4);
    });
}

AlgebraicNumber inverse(const AlgebraicNumber& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero");
    if (auto q = a.as_rational()) return AlgebraicNumber::rational(1 / *q);
    return AlgebraicNumber::from_enclosure(a.poly().reverse(), [&](long bits) {
        for (long g = bits + 8;; g += 16) {
            ComplexInterval e = a.enclosure(g);
            if (e.contains_zero()) continue;
            ComplexInterval r = e.inv();
            if (r.width() <= pow2(-bits) || g > bits + 4000) return r.rounded(bits + 4);
        }
    });
}

AlgebraicNumber operator/(const AlgebraicNumber& a, const AlgebraicNumber& b) { return a * inverse(b); }

AlgebraicNumber conj(const AlgebraicNumber& a) {
    RootDisk dk = a.disk();
    return AlgebraicNumber(a.poly(), RootDisk{dk.center.conj(), dk.radius});
}

AlgebraicNumber pow(const AlgebraicNumber& a, unsigned long e) {
    if (e == 0) return AlgebraicNumber::rational(Rational(1));
    if (e == 1) return a;
    if (auto q = a.as_rational()) return AlgebraicNumber::rational(pow(*q, e));
    QMatrix m = pow(QMatrix::companion(a.poly()), e);
    return AlgebraicNumber::from_enclosure(charpoly(m), [&](long bits) {
        for (long g = bits + 8;; g += 32) {
            ComplexInterval r = pow(a.enclosure(g), e, g + 8);
            if (r.width() <= pow2(-bits) || g > bits + 8000) return r.rounded(bits + 4);
        }
    });
}

AlgebraicNumber norm2(const AlgebraicNumber& a) {
    if (auto q = a.as_rational()) return AlgebraicNumber::rational(*q * *q);
    QMatrix c = QMatrix::companion(a.poly());
    return AlgebraicNumber::from_enclosure(charpoly(kron(c, c)), [&](long bits) {
        for (long g = bits + 8;; g += 32) {
            ComplexInterval e = a.enclosure(g);
            RealInterval n = e.norm2();
            if (n.width() <= pow2(-bits) || g > bits + 8000) return ComplexInterval(n.rounded(bits + 4));
        }
    });
}

AlgebraicNumber real_part(const AlgebraicNumber& a) {
    if (a.is_real()) return a;
    AlgebraicNumber s = a + conj(a);
    return s * AlgebraicNumber::rational(Rational(1, 2));
}

AlgebraicNumber sqrt_positive(const AlgebraicNumber& a) {
    if (a.sign() <= 0) throw std::domain_error("sqrt_positive of a non-positive number");
    if (auto q = a.as_rational()) {
        Integer n = q->get_num(), d = q->get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
            Integer rn, rd;
            mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
            return AlgebraicNumber::rational(Rational(rn, rd));
        }
    }
    return AlgebraicNumber::from_enclosure(a.poly().substitute_square(), [&](long bits) {
        for (long g = bits + 8;; g += 32) {
            RealInterval e = a.enclosure(g).re();
            if (e.lo() < 0) continue;
            RealInterval s = sqrt_interval(e, g + 8);
            if (s.width() <= pow2(-bits) || g > bits + 8000) return ComplexInterval(s.rounded(bits + 4));
        }
    });
}

AlgebraicNumber eval_at_root(const Poly& a, const Poly& s, const AlgebraicNumber& gamma) {
    Poly r = a % s;
    if (r.degree() <= 0) return AlgebraicNumber::rational(r.coeff(0));
    QMatrix m = eval(r, QMatrix::companion(s));
    return AlgebraicNumber::from_enclosure(charpoly(m), [&](long bits) {
        for (long g = bits + 16;; g += 32) {
            ComplexInterval v = eval(r, gamma.enclosure(g), g + 16);
            if (v.width() <= pow2(-bits) || g > bits + 8000) return v.rounded(bits + 4);
        }
    });
}

bool same_root(const Poly& q, const std::function<ComplexInterval(long)>& a,
               const std::function<ComplexInterval(long)>& b) {
    for (long bits = 24; bits < 40000; bits += bits / 2) {
        ComplexInterval x = a(bits), y = b(bits);
        if (!x.overlaps(y)) return false;
        RealInterval re = hull(x.re(), y.re()), im = hull(x.im(), y.im());
        ComplexInterval h(re, im);
        CRat c = h.mid();
        Rational hd = sqrt_up(re.rad() * re.rad() + im.rad() * im.rad() + pow2(-2 * bits - 16), 32);
        if (pellet_test(q, c, 2 * hd, 1)) return true;
    }
    throw std::runtime_error("same_root: undecided");
}

bool vanishes_at(const Poly& a, const AlgebraicNumber& gamma) {
    if (a.is_zero()) return true;
    Poly g = gcd(a, gamma.poly());
    return root_of_factor(gamma, g);
}

bool equal(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    auto qa = a.as_rational(), qb = b.as_rational();
    if (qa && qb) return *qa == *qb;
    if (a.poly() == b.poly())
        return same_root(a.poly(), [&](long bits) { return a.enclosure(bits); },
                         [&](long bits) { return b.enclosure(bits); });
    if (!a.enclosure(64).overlaps(b.enclosure(64))) return false;
    // Different defining polynomials can still share a root when neither is minimal.
    Poly g = gcd(a.poly(), b.poly());
    if (g.degree() <= 0) return false;
    if (!root_of_factor(a, g) || !root_of_factor(b, g)) return false;
    return same_root(g, [&](long bits) { return a.enclosure(bits); }, [&](long bits) { return b.enclosure(bits); });
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (equal(a, b)) return 0;
    for (long bits = 16;; bits += 32) {
        RealInterval x = a.enclosure(bits).re(), y = b.enclosure(bits).re();
        if (x.hi() < y.lo()) return -1;
        if (y.hi() < x.lo()) return 1;
    }
}

std::vector<AlgebraicNumber> roots_of(const Poly& p) {
    std::vector<AlgebraicNumber> out;
    if (p.degree() <= 0) return out;
    Poly q = normalize(p);
    for (const auto& dk : isolate_roots(q)) {
        if (q.degree() == 1) {
            out.push_back(AlgebraicNumber(q, dk));
            continue;
        }
        RootDisk fine = refine_disk(q, dk, 96);
        if (auto s = detect_simple(q, fine)) out.push_back(*s);
        else out.push_back(AlgebraicNumber(q, dk));
    }
    return out;
}

unsigned root_of_unity_order(const AlgebraicNumber& a) {
    if (auto q = a.as_rational()) return *q == 1 ? 1 : (*q == -1 ? 2 : 0);
    long d = a.degree();
    ComplexInterval e = a.enclosure(60);
    RealInterval n2 = e.norm2();
    if (!n2.contains(Rational(1))) return 0;
    long double t = std::arg(a.approx()) / (2 * 3.14159265358979323846264338327950288L);
    unsigned max_n = static_cast<unsigned>(2 * d * d + 2);
    for (unsigned n = 1; n <= max_n; ++n) {
        if (euler_phi(n) > static_cast<unsigned>(d)) continue;
        long double k = std::nearbyint(t * n);
        if (std::fabs(t * n - k) > 1e-9L) continue;
        Poly g = gcd(a.poly(), cyclotomic_cached(n));
        if (g.degree() > 0 && root_of_factor(a, g)) return n;
    }
    return 0;
}

std::string to_string(const AlgebraicNumber& a) {
    if (auto q = a.as_rational()) return to_string(*q);
    auto z = a.approx();
    std::ostringstream os;
    os.precision(12);
    os << "root of " << to_string(a.poly()) << " near " << static_cast<double>(z.real());
    if (z.imag() != 0) os << (z.imag() < 0 ? " - " : " + ") << std::fabs(static_cast<double>(z.imag())) << "i";
    return os.str();
}

}  // namespace rlrs
