// Rational roots of integer polynomials.
//
// The polynomial is made squarefree and then monic via x = y / lc, so rational
// roots become integer roots of the monic transform. Those are found by
// lifting simple roots modulo a small prime l until the modulus exceeds twice
// the Cauchy bound; each lifted candidate is checked by exact evaluation.
// No factoring of the coefficients is needed.

#include "taurank/arith.hpp"
#include "taurank/poly.hpp"

#include <algorithm>
#include <cstdint>

namespace taurank {

namespace {

using poly::ZPoly;
using u64 = std::uint64_t;

using ModPoly = std::vector<u64>;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

void trim_mod(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly reduce(const ZPoly& f, u64 l) {
    ModPoly out(f.size());
    const Integer m(static_cast<unsigned long>(l));
    for (std::size_t i = 0; i < f.size(); ++i) {
        Integer r = f[i] % m;
        if (r < 0) r += m;
        out[i] = r.get_ui();
    }
    trim_mod(out);
    return out;
}

ModPoly rem_mod(ModPoly a, const ModPoly& b, u64 l) {
    const u64 inv = powmod(b.back(), l - 2, l);
    while (a.size() >= b.size() && !a.empty()) {
        const u64 c = mulmod(a.back(), inv, l);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] = (a[shift + i] + l - mulmod(c, b[i], l)) % l;
        }
        trim_mod(a);
    }
    return a;
}

std::size_t gcd_degree_mod(ModPoly a, ModPoly b, u64 l) {
    while (!b.empty()) {
        ModPoly r = rem_mod(a, b, l);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? 0 : a.size() - 1;
}

bool squarefree_mod(const ZPoly& h, u64 l) {
    ModPoly hm = reduce(h, l);
    ModPoly dm = reduce(poly::derivative(h), l);
    if (static_cast<long>(hm.size()) - 1 != poly::degree(h) || dm.empty()) return false;
    return gcd_degree_mod(hm, dm, l) == 0;
}

Integer lift_root(const ZPoly& h, const ZPoly& dh, Integer r, const Integer& l, const Integer& bound) {
    Integer modulus = l;
    while (modulus <= bound) {
        modulus *= modulus;
        const Integer value = poly::eval_mod(h, r, modulus);
        Integer slope = poly::eval_mod(dh, r, modulus);
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), slope.get_mpz_t(), modulus.get_mpz_t()) == 0) {
            throw DomainError("rational_roots: Hensel lifting hit a singular root");
        }
        r = (r - value * inv) % modulus;
        if (r < 0) r += modulus;
    }
    // Symmetric representative.
    if (2 * r > modulus) r -= modulus;
    return r;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs) {
    ZPoly f = coeffs;
    poly::trim(f);
    if (f.empty()) throw DomainError("rational_roots: zero polynomial");

    std::vector<Rational> roots;
    std::size_t low = 0;
    while (f[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        f.erase(f.begin(), f.begin() + static_cast<long>(low));
    }
    if (poly::degree(f) >= 1) {
        f = poly::primitive_part(f);
        const ZPoly g = poly::gcd(f, poly::derivative(f));
        if (poly::degree(g) > 0) f = poly::primitive_part(poly::exact_divide(f, g));
    }

    const long n = poly::degree(f);
    if (n >= 1) {
        const Integer lead = f[n];
        ZPoly h(static_cast<std::size_t>(n + 1));
        Integer lpow = 1;
        for (long i = n - 1; i >= 0; --i) {
            h[i] = f[i] * lpow;
            lpow *= lead;
        }
        h[n] = 1;
        const ZPoly dh = poly::derivative(h);

        Integer cauchy = 0;
        for (long i = 0; i < n; ++i) cauchy = std::max(cauchy, Integer(abs(h[i])));
        const Integer bound = 2 * (cauchy + 1);

        u64 l = 3;
        while (!squarefree_mod(h, l)) {
            l = next_prime(Integer(static_cast<unsigned long>(l))).get_ui();
        }
        const Integer lz(static_cast<unsigned long>(l));
        for (u64 x = 0; x < l; ++x) {
            const Integer xz(static_cast<unsigned long>(x));
            if (poly::eval_mod(h, xz, lz) != 0) continue;
            const Integer y = lift_root(h, dh, xz, lz, bound);
            if (poly::eval(h, y) == 0) roots.push_back(make_rational(y, lead));
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace taurank
