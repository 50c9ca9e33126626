#include "taurank/rootnum.hpp"

namespace taurank {

TowerContext make_tower_context(const Integer& p) {
    if (p < 5 || !is_prime(p)) throw DomainError("tower context needs a prime p >= 5");
    TowerContext ctx;
    ctx.p = p;
    ctx.phi_p = p - 1;
    if (p % 4 == 1) {
        ctx.K_degree_parity_halved = Parity::Even;
        ctx.notes.push_back("4 | p-1 = [Q(mu_p):Q]");
    }
    return ctx;
}

RootNumber local_root_number(const LocalData& ld, bool archimedean) {
    if (archimedean || ld.reduction == ReductionType::SplitMultiplicative) return {-1};
    return {1};
}

RootNumber global_root_number_over_K(const Integer& K_degree, const Integer& s_K) {
    if (K_degree <= 0 || K_degree % 2 != 0) throw DomainError("global root number: [K:Q] must be even");
    if (s_K < 0) throw DomainError("global root number: s must be non-negative");
    const Integer e = K_degree / 2 + s_K;
    return {e % 2 == 0 ? 1 : -1};
}

SplittingCount primes_above_in_cyclotomic(const Integer& q, const Integer& p) {
    if (!is_prime(q) || !is_prime(p)) throw DomainError("primes_above_in_cyclotomic: arguments must be prime");
    if (q == p) throw DomainError("primes_above_in_cyclotomic: q = p is ramified");
    SplittingCount sc;
    sc.q = q;
    const Integer ord1 = multiplicative_order(q, p);
    sc.count_in_Qmu_p = (p - 1) / ord1;

    // Count at level n is phi(p^n) / ord_{p^n}(q); it is constant once the
    // order starts gaining a full factor p per level.
    constexpr unsigned cap = 30;
    Integer pn = p;
    Integer ord = ord1;
    Integer phi = p - 1;
    for (unsigned n = 1; n <= cap; ++n) {
        const Integer pn1 = pn * p;
        const Integer ord_next = multiplicative_order(q, pn1);
        if (ord_next == ord * p) {
            sc.stable_count_in_cyc = phi / ord;
            sc.stable_level = n;
            return sc;
        }
        pn = pn1;
        ord = ord_next;
        phi *= p;
    }
    throw DomainError("primes_above_in_cyclotomic: tower did not stabilise by level 30");
}

Integer s_over_Qmu_p(const LocalProfile& prof, const Integer& p, std::vector<SContribution>* terms) {
    Integer s = 0;
    for (const auto& ld : prof.bad) {
        if (ld.q == p || ld.v_j_den == 0) continue;
        const SplittingCount sc = primes_above_in_cyclotomic(ld.q, p);
        s += sc.count_in_Qmu_p;
        if (terms) terms->push_back({ld.q, sc});
    }
    return s;
}

Integer s_over_Qmu_p(const WeierstrassCurve& E, const Integer& p) { return s_over_Qmu_p(local_profile(E), p); }

Parity s_parity_transport(const Integer& s_K) { return s_K % 2 == 0 ? Parity::Even : Parity::Odd; }

}  // namespace taurank
