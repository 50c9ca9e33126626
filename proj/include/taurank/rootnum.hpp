#pragma once

// Root numbers over a field K containing Q(mu_p), and the splitting of
// rational primes in the cyclotomic tower Q(mu_{p^n}).

#include "taurank/arith.hpp"
#include "taurank/localdata.hpp"

#include <string>
#include <vector>

namespace taurank {

struct TowerContext {
    Integer p;
    Integer phi_p;
    Parity K_degree_parity_halved = Parity::Unknown;
    std::vector<std::string> notes;
};

/// Throws DomainError unless p is a prime >= 5.
TowerContext make_tower_context(const Integer& p);

struct SplittingCount {
    Integer q;
    Integer count_in_Qmu_p;
    Integer stable_count_in_cyc;
    unsigned stable_level = 1;  // n with Q(mu_{p^n}) where the count stops growing
};

struct RootNumber {
    int value = 1;
};

/// -1 at archimedean and split multiplicative places, +1 otherwise.
RootNumber local_root_number(const LocalData& ld, bool archimedean);

/// (-1)^{deg/2} (-1)^s for even deg.
RootNumber global_root_number_over_K(const Integer& K_degree, const Integer& s_K);

/// Number of primes above q in Q(mu_p) and in the whole cyclotomic Z_p-tower.
SplittingCount primes_above_in_cyclotomic(const Integer& q, const Integer& p);

struct SContribution {
    Integer q;
    SplittingCount split;
};

/// Sum over potentially multiplicative primes q != p of the number of primes
/// above q in Q(mu_p).
Integer s_over_Qmu_p(const LocalProfile& prof, const Integer& p, std::vector<SContribution>* terms = nullptr);
Integer s_over_Qmu_p(const WeierstrassCurve& E, const Integer& p);

Parity s_parity_transport(const Integer& s_K);

}  // namespace taurank
