#pragma once

/**
 * @file arith.hpp
 * @brief Exact integer and rational arithmetic, factorization and a few
 *        elementary number-theoretic helpers.
 *
 * Integer and Rational are thin aliases over GMP's C++ classes. Everything
 * in this header is a pure function of its arguments.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace taurank {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct PrimePower {
    Integer prime;
    unsigned long exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// sign * prod(prime^exponent), primes strictly increasing.
struct Factorization {
    int sign = 1;
    std::vector<PrimePower> factors;

    Integer value() const;
    std::vector<Integer> primes() const;
    /// e.g. "-3^2*7*2647^3", "1" for the empty product.
    std::string to_string() const;
};

Integer make_integer(long long v);
Integer parse_integer(const std::string& text);
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
bool is_integral(const Rational& v);

/// Deterministic Miller-Rabin below 3.3e24, BPSW-strength test above.
bool is_prime(const Integer& n);
Integer next_prime(const Integer& n);

Factorization factor(const Integer& n);

/// Exponent of the prime q in n.
unsigned long valuation(const Integer& n, const Integer& q);
/// Valuation of a nonzero rational (may be negative).
long valuation(const Rational& x, const Integer& q);

/// Legendre symbol (a/q) for an odd prime q.
int legendre_symbol(const Integer& a, const Integer& q);

/// Kronecker symbol (d/n) for n an odd positive integer; thin wrapper kept
/// separate from legendre_symbol because it skips the primality check.
int kronecker_symbol(const Integer& d, const Integer& n);

/// Smallest k >= 1 with a^k = 1 (mod m).
Integer multiplicative_order(const Integer& a, const Integer& m);

/// Carmichael function lambda(m) for m >= 1.
Integer carmichael_lambda(const Integer& m);

/// Squarefree divisors of |n|, sorted ascending. With `signed_divisors` the
/// negatives are included as well.
std::vector<Integer> squarefree_divisors(const Integer& n, bool signed_divisors = false);

/// Squarefree part s of a nonzero integer: n = s * m^2 with s squarefree.
Integer squarefree_part(const Integer& n);
bool is_squarefree(const Integer& n);

/// Distinct rational roots of the integer polynomial sum coeffs[i] x^i,
/// sorted ascending.
std::vector<Rational> rational_roots(const std::vector<Integer>& coeffs);

/// Rational square root if x is a square in Q.
bool rational_sqrt(const Rational& x, Rational& root);

/// Positive divisors of |n| (factorization based), sorted.
std::vector<Integer> divisors(const Integer& n);

}  // namespace taurank
