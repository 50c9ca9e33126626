#include "taurank/poly.hpp"

#include <algorithm>

namespace taurank::poly {

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

long degree(const ZPoly& f) {
    for (long i = static_cast<long>(f.size()) - 1; i >= 0; --i) {
        if (f[i] != 0) return i;
    }
    return -1;
}

bool is_zero(const ZPoly& f) { return degree(f) < 0; }

ZPoly add(const ZPoly& f, const ZPoly& g) {
    ZPoly out(std::max(f.size(), g.size()));
    for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) out[i] += g[i];
    trim(out);
    return out;
}

ZPoly sub(const ZPoly& f, const ZPoly& g) {
    ZPoly out(std::max(f.size(), g.size()));
    for (std::size_t i = 0; i < f.size(); ++i) out[i] += f[i];
    for (std::size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
    trim(out);
    return out;
}

ZPoly mul(const ZPoly& f, const ZPoly& g) {
    if (f.empty() || g.empty()) return {};
    ZPoly out(f.size() + g.size() - 1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    }
    trim(out);
    return out;
}

ZPoly scale(const ZPoly& f, const Integer& c) {
    ZPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * c;
    trim(out);
    return out;
}

ZPoly power(const ZPoly& f, unsigned e) {
    ZPoly out{1};
    for (unsigned i = 0; i < e; ++i) out = mul(out, f);
    return out;
}

ZPoly derivative(const ZPoly& f) {
    if (f.size() <= 1) return {};
    ZPoly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
    trim(out);
    return out;
}

Integer content(const ZPoly& f) {
    Integer g = 0;
    for (const auto& c : f) g = gcd(g, c);
    return g;
}

ZPoly primitive_part(const ZPoly& f) {
    ZPoly out = f;
    trim(out);
    if (out.empty()) return out;
    Integer c = content(out);
    if (out.back() < 0) c = -c;
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return out;
}

ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g) {
    const long dg = degree(g);
    if (dg < 0) throw DomainError("pseudo_remainder: division by zero polynomial");
    ZPoly r = f;
    trim(r);
    const Integer& lc = g[dg];
    long dr = degree(r);
    long steps = dr - dg + 1;
    while (dr >= dg) {
        const Integer top = r[dr];
        for (auto& c : r) c *= lc;
        for (long i = 0; i <= dg; ++i) r[dr - dg + i] -= top * g[i];
        trim(r);
        dr = degree(r);
        --steps;
    }
    if (steps > 0) {
        Integer factor_left;
        mpz_pow_ui(factor_left.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(steps));
        for (auto& c : r) c *= factor_left;
    }
    return r;
}

ZPoly gcd(const ZPoly& f, const ZPoly& g) {
    ZPoly a = primitive_part(f);
    ZPoly b = primitive_part(g);
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (degree(a) < degree(b)) std::swap(a, b);
    while (!is_zero(b)) {
        ZPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a);
}

ZPoly exact_divide(const ZPoly& f, const ZPoly& g) {
    const long dg = degree(g);
    if (dg < 0) throw DomainError("exact_divide: division by zero polynomial");
    ZPoly r = f;
    trim(r);
    long dr = degree(r);
    if (dr < dg) {
        if (dr < 0) return {};
        throw DomainError("exact_divide: divisor does not divide");
    }
    ZPoly q(static_cast<std::size_t>(dr - dg + 1));
    while (dr >= dg) {
        if (!mpz_divisible_p(r[dr].get_mpz_t(), g[dg].get_mpz_t())) {
            throw DomainError("exact_divide: divisor does not divide");
        }
        const Integer c = r[dr] / g[dg];
        q[dr - dg] = c;
        for (long i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
        trim(r);
        dr = degree(r);
    }
    if (!is_zero(r)) throw DomainError("exact_divide: divisor does not divide");
    trim(q);
    return q;
}

Integer eval(const ZPoly& f, const Integer& x) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational eval(const ZPoly& f, const Rational& x) {
    // Homogenized Horner on num/den keeps everything integral until the end.
    const long d = degree(f);
    if (d < 0) return 0;
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = 0;
    Integer bpow = 1;
    for (long i = d; i >= 0; --i) {
        acc = acc * a + f[i] * bpow;
        bpow *= b;
    }
    // acc = b^d f(a/b)
    Integer bd;
    mpz_pow_ui(bd.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(d));
    return make_rational(acc, bd);
}

Integer eval_mod(const ZPoly& f, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = (acc * x + *it) % m;
    }
    if (acc < 0) acc += m;
    return acc;
}

}  // namespace taurank::poly
