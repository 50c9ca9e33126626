#include "taurank/localdata.hpp"

#include <numeric>

namespace taurank {

std::string to_string(Parity p) {
    switch (p) {
        case Parity::Even: return "Even";
        case Parity::Odd: return "Odd";
        default: return "Unknown";
    }
}

std::string to_string(Tristate t) {
    switch (t) {
        case Tristate::Yes: return "Yes";
        case Tristate::No: return "No";
        default: return "Unknown";
    }
}

std::string to_string(ReductionType r) {
    switch (r) {
        case ReductionType::Good: return "Good";
        case ReductionType::SplitMultiplicative: return "SplitMultiplicative";
        case ReductionType::NonsplitMultiplicative: return "NonsplitMultiplicative";
        case ReductionType::AdditivePotentiallyGood: return "AdditivePotentiallyGood";
        default: return "AdditivePotentiallyMultiplicative";
    }
}

bool is_multiplicative(ReductionType r) {
    return r == ReductionType::SplitMultiplicative || r == ReductionType::NonsplitMultiplicative;
}

bool is_additive(ReductionType r) {
    return r == ReductionType::AdditivePotentiallyGood || r == ReductionType::AdditivePotentiallyMultiplicative;
}

std::string InertiaOrder::to_string() const {
    if (value) return std::to_string(*value);
    if (min_order > 1) return "a multiple of " + std::to_string(min_order);
    return "Unknown";
}

namespace {

// Is the unit -c6 a square in Q_q?  (q = 2: 1 mod 8, otherwise a residue)
bool minus_c6_is_square(const Integer& c6, const Integer& q) {
    const Integer u = -c6;
    if (q == 2) {
        Integer r = u % 8;
        if (r < 0) r += 8;
        return r == 1;
    }
    return legendre_symbol(u, q) == 1;
}

InertiaOrder exact(unsigned v) {
    InertiaOrder o;
    o.value = v;
    o.min_order = v;
    o.parity = v % 2 == 0 ? Parity::Even : Parity::Odd;
    return o;
}

InertiaOrder local_inertia(const LocalData& ld) {
    switch (ld.reduction) {
        case ReductionType::Good:
        case ReductionType::SplitMultiplicative:
        case ReductionType::NonsplitMultiplicative:
            return exact(1);
        case ReductionType::AdditivePotentiallyMultiplicative:
            return exact(2);
        default: break;
    }
    const unsigned g = std::gcd(12u, static_cast<unsigned>(ld.v_disc % 12));
    const unsigned base = 12 / (g == 0 ? 12 : g);
    if (ld.q >= 5) return exact(base);
    // q = 2, 3: only |I_q| v(Delta) = 0 mod 12 is used.
    InertiaOrder o;
    o.min_order = base;
    o.parity = ld.v_disc % 4 != 0 ? Parity::Even : Parity::Unknown;
    return o;
}

}  // namespace

LocalData reduction_type(const WeierstrassCurve& E, const Integer& q) {
    if (!is_prime(q)) throw DomainError("reduction_type: q must be prime");
    const CurveInvariants inv = compute_invariants(E);
    LocalData ld;
    ld.q = q;
    ld.v_disc = valuation(inv.disc, q);
    if (inv.c4 != 0) ld.v_c4 = valuation(inv.c4, q);
    if (inv.c6 != 0) ld.v_c6 = valuation(inv.c6, q);
    const long vj = inv.j == 0 ? 0 : valuation(inv.j, q);
    ld.v_j_den = vj < 0 ? static_cast<unsigned long>(-vj) : 0;

    if (ld.v_disc == 0) {
        ld.reduction = ReductionType::Good;
    } else if (ld.v_c4 && *ld.v_c4 == 0) {
        ld.reduction = minus_c6_is_square(inv.c6, q) ? ReductionType::SplitMultiplicative
                                                     : ReductionType::NonsplitMultiplicative;
    } else {
        ld.reduction = ld.v_j_den > 0 ? ReductionType::AdditivePotentiallyMultiplicative
                                      : ReductionType::AdditivePotentiallyGood;
    }
    ld.inertia = local_inertia(ld);
    return ld;
}

InertiaOrder inertia_order(const LocalData& ld, const Integer& p) {
    if (ld.q == p) throw DomainError("inertia_order: q equals p");
    return local_inertia(ld);
}

const LocalData* LocalProfile::at(const Integer& q) const {
    for (const auto& ld : bad) {
        if (ld.q == q) return &ld;
    }
    return nullptr;
}

LocalProfile local_profile(const WeierstrassCurve& E) {
    LocalProfile prof;
    const MinimalModel mm = minimal_model(E);
    prof.model = mm.curve;
    prof.inv = compute_invariants(mm.curve);
    prof.disc = factor(prof.inv.disc);
    for (const auto& pp : prof.disc.factors) prof.bad.push_back(reduction_type(prof.model, pp.prime));
    return prof;
}

Tristate odd_inertia_everywhere(const LocalProfile& prof, const Integer& p) {
    bool unknown = false;
    for (const auto& ld : prof.bad) {
        if (ld.q == p) continue;
        const InertiaOrder o = inertia_order(ld, p);
        if (o.parity == Parity::Even) return Tristate::No;
        if (o.parity == Parity::Unknown) unknown = true;
    }
    return unknown ? Tristate::Unknown : Tristate::Yes;
}

Tristate odd_inertia_everywhere(const WeierstrassCurve& E, const Integer& p) {
    return odd_inertia_everywhere(local_profile(E), p);
}

}  // namespace taurank
