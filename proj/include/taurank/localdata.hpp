#pragma once

// Reduction type and inertia order at a single prime, read off the
// (v(c4), v(Delta)) pair of a global minimal model.

#include "taurank/arith.hpp"
#include "taurank/curve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace taurank {

enum class Parity { Even, Odd, Unknown };
std::string to_string(Parity p);

enum class Tristate { Yes, No, Unknown };
std::string to_string(Tristate t);

enum class ReductionType {
    Good,
    SplitMultiplicative,
    NonsplitMultiplicative,
    AdditivePotentiallyGood,
    AdditivePotentiallyMultiplicative,
};
std::string to_string(ReductionType r);

bool is_multiplicative(ReductionType r);
bool is_additive(ReductionType r);

/// |I_q|. When the exact value is not determined, `min_order` is a proven
/// divisor of it and `parity` records whatever is known about 2 | |I_q|.
struct InertiaOrder {
    std::optional<unsigned> value;
    unsigned min_order = 1;
    Parity parity = Parity::Odd;

    bool known() const { return value.has_value(); }
    std::string to_string() const;
};

struct LocalData {
    Integer q;
    unsigned long v_disc = 0;
    std::optional<unsigned long> v_c4;  // empty when c4 = 0
    std::optional<unsigned long> v_c6;  // empty when c6 = 0
    unsigned long v_j_den = 0;          // max(0, -v_q(j))
    ReductionType reduction = ReductionType::Good;
    InertiaOrder inertia;
};

/// E must be a global minimal model.
LocalData reduction_type(const WeierstrassCurve& E, const Integer& q);

/// Throws DomainError when ld.q == p.
InertiaOrder inertia_order(const LocalData& ld, const Integer& p);

/// Minimal model, its invariants and the data at every bad prime.
struct LocalProfile {
    WeierstrassCurve model;
    CurveInvariants inv;
    Factorization disc;
    std::vector<LocalData> bad;

    const LocalData* at(const Integer& q) const;
    bool j_integral() const { return is_integral(inv.j); }
};

LocalProfile local_profile(const WeierstrassCurve& E);

/// Yes iff |I_q| is odd for every q != p (from the local rules alone).
Tristate odd_inertia_everywhere(const LocalProfile& prof, const Integer& p);
Tristate odd_inertia_everywhere(const WeierstrassCurve& E, const Integer& p);

}  // namespace taurank
