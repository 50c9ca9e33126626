// Parity of |I_q| for a curve with a rational 7-isogeny.
//
// The isogeny character chi' (values in F_7^*) satisfies
//   a_l = chi'(Frob_l) + l / chi'(Frob_l)  (mod 7)
// at good l != 7.  Away from 7 the inertia image is {diag(c, c^-1)} with c in
// chi'(I_q), so |I_q| is even exactly when the quadratic character
// eps = chi'^3 ramifies at q.  eps belongs to Q(sqrt(D)) for a squarefree D
// built from 7 and the bad primes; we pin D down by sieving candidates
// against eps(Frob_l) = (u/7), u a root of X^2 - a_l X + l mod 7.
// Only l that split in Q(sqrt(-7)) are used, where both roots give the same
// symbol; D and -7D are then indistinguishable but agree away from 7.

#include "taurank/classify.hpp"

#include <algorithm>

namespace taurank {

namespace {

bool ramified_at(const Integer& d, const Integer& q) {
    if (q == 2) {
        Integer r = d % 4;
        if (r < 0) r += 4;
        return r != 1;
    }
    return d % q == 0;
}

}  // namespace

KernelCharacter kernel_character_parity(const LocalProfile& prof, const std::vector<Integer>& primes,
                                        unsigned long limit) {
    KernelCharacter out;
    const Integer seven(7);
    const Integer disc = prof.inv.disc;
    const bool good_at_2 = disc % 2 != 0;

    std::vector<Integer> candidates;
    for (const auto& d : squarefree_divisors(7 * disc, true)) {
        if (good_at_2 && ramified_at(d, Integer(2))) continue;
        candidates.push_back(d);
    }

    auto agree = [&]() {
        for (const auto& q : primes) {
            const bool r0 = ramified_at(candidates.front(), q);
            for (const auto& d : candidates) {
                if (ramified_at(d, q) != r0) return false;
            }
        }
        return true;
    };

    for (Integer l = 3; l < limit && !candidates.empty(); l = next_prime(l)) {
        if (agree()) break;
        if (l == 7 || disc % l == 0) continue;
        const unsigned long lm7 = l.get_ui() % 7;
        if (lm7 != 1 && lm7 != 2 && lm7 != 4) continue;
        Integer a = trace_of_frobenius(prof.model, l) % 7;
        if (a < 0) a += 7;
        const unsigned long av = a.get_ui();
        long root = -1;
        for (unsigned long u = 1; u < 7; ++u) {
            if ((u * u + 7 * 7 - av * u + lm7) % 7 == 0) {
                root = static_cast<long>(u);
                break;
            }
        }
        ++out.primes_used;
        out.last_prime = l.get_ui();
        if (root < 0) {
            // X^2 - a_l X + l has no root mod 7: there is no 7-isogeny.
            candidates.clear();
            break;
        }
        const int eps = legendre_symbol(Integer(root), seven);
        std::erase_if(candidates, [&](const Integer& d) { return legendre_symbol(d, l) != eps; });
    }

    out.survivors = candidates;
    if (candidates.empty() || !agree()) return out;
    out.resolved = true;
    for (const auto& q : primes) {
        out.inertia_parity[q.get_str()] = ramified_at(candidates.front(), q) ? Parity::Even : Parity::Odd;
    }
    return out;
}

}  // namespace taurank
