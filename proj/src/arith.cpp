#include "taurank/arith.hpp"

#include <algorithm>
#include <sstream>

namespace taurank {

namespace {

constexpr unsigned long kTrialLimit = 1000000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= kTrialLimit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

// Jaeschke / Sorenson-Webster bound for the first 13 prime bases.
const Integer& mr_deterministic_bound() {
    static const Integer bound("3317044064679887385961981");
    return bound;
}

bool miller_rabin(const Integer& n, unsigned long base) {
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer a = base;
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Integer n1 = n - 1;
    if (x == 1 || x == n1) return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n1) return true;
        if (x == 1) return false;
    }
    return false;
}

Integer pollard_brent(const Integer& n, unsigned long seed) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    Integer c = seed;
    Integer y = 2 + seed, x, ys, q = 1, g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            const unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = f(y);
                q = q * abs(Integer(x - y)) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(Integer(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

void factor_large(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer root;
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                std::vector<Integer> sub;
                factor_large(root, sub);
                for (unsigned long i = 0; i < k; ++i) out.insert(out.end(), sub.begin(), sub.end());
                return;
            }
        }
    }
    for (unsigned long seed = 1;; ++seed) {
        Integer d = pollard_brent(n, seed);
        if (d != n && d != 1) {
            factor_large(d, out);
            factor_large(Integer(n / d), out);
            return;
        }
    }
}

}  // namespace

Integer Factorization::value() const {
    Integer v = sign;
    for (const auto& pp : factors) {
        Integer t;
        mpz_pow_ui(t.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        v *= t;
    }
    return v;
}

std::vector<Integer> Factorization::primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& pp : factors) out.push_back(pp.prime);
    return out;
}

std::string Factorization::to_string() const {
    std::ostringstream os;
    if (sign < 0) os << '-';
    if (factors.empty()) {
        os << '1';
        return os.str();
    }
    bool first = true;
    for (const auto& pp : factors) {
        if (!first) os << '*';
        first = false;
        os << pp.prime.get_str();
        if (pp.exponent > 1) os << '^' << pp.exponent;
    }
    return os.str();
}

Integer make_integer(long long v) { return Integer(static_cast<long>(v)); }

Integer parse_integer(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty() || s == "-") throw DomainError("not an integer: '" + text + "'");
    const std::size_t start = s[0] == '-' ? 1 : 0;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw DomainError("not an integer: '" + text + "'");
    }
    return Integer(s, 10);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(text));
    return make_rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string to_string(const Integer& v) { return v.get_str(); }

std::string to_string(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool is_integral(const Rational& v) { return v.get_den() == 1; }

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    for (unsigned long p : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < mr_deterministic_bound()) {
        for (unsigned long b : {2UL, 3UL, 5UL, 7UL, 11UL, 13UL, 17UL, 19UL, 23UL, 29UL, 31UL, 37UL, 41UL}) {
            if (!miller_rabin(n, b)) return false;
        }
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

Integer next_prime(const Integer& n) {
    Integer c = n < 2 ? Integer(2) : Integer(n + 1);
    while (!is_prime(c)) ++c;
    return c;
}

Factorization factor(const Integer& n) {
    if (n == 0) throw DomainError("factor: n must be nonzero");
    Factorization out;
    out.sign = sgn(n) < 0 ? -1 : 1;
    Integer m = abs(n);
    for (unsigned long p : small_primes()) {
        if (m == 1) break;
        if (Integer(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        out.factors.push_back({Integer(p), e});
    }
    if (m > 1) {
        std::vector<Integer> rest;
        factor_large(m, rest);
        std::sort(rest.begin(), rest.end());
        for (const auto& q : rest) {
            if (!out.factors.empty() && out.factors.back().prime == q) {
                ++out.factors.back().exponent;
            } else {
                out.factors.push_back({q, 1});
            }
        }
    }
    return out;
}

unsigned long valuation(const Integer& n, const Integer& q) {
    if (n == 0) throw DomainError("valuation: n must be nonzero");
    if (!is_prime(q)) throw DomainError("valuation: q must be prime");
    Integer m = n;
    unsigned long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), q.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
        ++v;
    }
    return v;
}

long valuation(const Rational& x, const Integer& q) {
    if (x == 0) throw DomainError("valuation: x must be nonzero");
    return static_cast<long>(valuation(x.get_num(), q)) - static_cast<long>(valuation(x.get_den(), q));
}

int legendre_symbol(const Integer& a, const Integer& q) {
    if (q == 2 || !is_prime(q)) throw DomainError("legendre_symbol: q must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), q.get_mpz_t());
}

int kronecker_symbol(const Integer& d, const Integer& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t())) throw DomainError("kronecker_symbol: n must be odd and positive");
    return mpz_jacobi(d.get_mpz_t(), n.get_mpz_t());
}

Integer carmichael_lambda(const Integer& m) {
    if (m < 1) throw DomainError("carmichael_lambda: m must be positive");
    if (m == 1) return 1;
    Integer result = 1;
    for (const auto& pp : factor(m).factors) {
        Integer part;
        if (pp.prime == 2) {
            if (pp.exponent <= 2) {
                part = pp.exponent == 1 ? 1 : 2;
            } else {
                mpz_ui_pow_ui(part.get_mpz_t(), 2, pp.exponent - 2);
            }
        } else {
            mpz_pow_ui(part.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent - 1);
            part *= pp.prime - 1;
        }
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), part.get_mpz_t());
    }
    return result;
}

Integer multiplicative_order(const Integer& a, const Integer& m) {
    if (m < 2) throw DomainError("multiplicative_order: modulus must be >= 2");
    if (gcd(a, m) != 1) throw DomainError("multiplicative_order: arguments must be coprime");
    Integer base = a % m;
    if (base < 0) base += m;
    Integer order = carmichael_lambda(m);
    Integer t;
    for (const auto& pp : factor(order).factors) {
        for (unsigned long i = 0; i < pp.exponent; ++i) {
            Integer candidate = order / pp.prime;
            mpz_powm(t.get_mpz_t(), base.get_mpz_t(), candidate.get_mpz_t(), m.get_mpz_t());
            if (t != 1) break;
            order = candidate;
        }
    }
    return order;
}

std::vector<Integer> squarefree_divisors(const Integer& n, bool signed_divisors) {
    if (n == 0) throw DomainError("squarefree_divisors: n must be nonzero");
    std::vector<Integer> out{1};
    for (const auto& q : factor(n).primes()) {
        const std::size_t k = out.size();
        for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * q);
    }
    if (signed_divisors) {
        const std::size_t k = out.size();
        for (std::size_t i = 0; i < k; ++i) out.push_back(-out[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw DomainError("squarefree_part: n must be nonzero");
    const Factorization f = factor(n);
    Integer s = f.sign;
    for (const auto& pp : f.factors) {
        if (pp.exponent % 2 == 1) s *= pp.prime;
    }
    return s;
}

bool is_squarefree(const Integer& n) {
    if (n == 0) return false;
    for (const auto& pp : factor(n).factors) {
        if (pp.exponent > 1) return false;
    }
    return true;
}

bool rational_sqrt(const Rational& x, Rational& root) {
    if (x < 0) return false;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    root = make_rational(sqrt(num), sqrt(den));
    return true;
}

std::vector<Integer> divisors(const Integer& n) {
    if (n == 0) throw DomainError("divisors: n must be nonzero");
    std::vector<Integer> out{1};
    for (const auto& pp : factor(n).factors) {
        const std::size_t k = out.size();
        Integer power = 1;
        for (unsigned long e = 1; e <= pp.exponent; ++e) {
            power *= pp.prime;
            for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace taurank
