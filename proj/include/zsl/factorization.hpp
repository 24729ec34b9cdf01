#pragma once

#include <utility>
#include <vector>

namespace zsl {

// Decomposition of a valid twisting pair (n,s) into coprime moduli on which
// s acts as -1 and +1 respectively:
//   case A: n = n1 * n2
//   case B: n = 2 * n1 * n2  (only for n = 2^t m with t >= 3 and s = n/2 +- 1
//           behavior mod 2^t; one power of two is unavoidably lost)
// Always: s == -1 (mod n1) when n1 > 1, s == +1 (mod n2) when n2 > 1,
// gcd(n1, n2) = 1.
enum class FactorCase { A, B };

const char* to_string(FactorCase c);

struct Factorization {
    int n = 0;
    int s = 0;   // canonical residue
    int n1 = 1;
    int n2 = 1;
    FactorCase case_tag = FactorCase::A;
    int t = 0;   // 2-adic valuation of n
    int m1 = 1;  // gcd(m, s+1) for the odd part m = n / 2^t
    int m2 = 1;  // gcd(m, s-1); m = m1 * m2
};

// Case analysis on t and the odd part m. Pre: (n,s) of the studied class.
Factorization factor(int n, long long s);

// The reduction map k -> (k mod n1, k mod n2). In case A it is a bijection
// from residues mod n; in case B it is exactly 2-to-1. It always satisfies
// the sign flip apply(s*k) = (-first(apply(k)), second(apply(k))).
struct CrtProjection {
    int n = 0;
    int n1 = 1;
    int n2 = 1;

    std::pair<int, int> apply(long long k) const {
        auto red = [](long long v, int mod) {
            return static_cast<int>(((v % mod) + mod) % mod);
        };
        return {red(k, n1), red(k, n2)};
    }
};

CrtProjection build_projection(const Factorization& f);

// All s in [0, n) making (n,s) a pair of the studied class. Empty exactly
// when no such twist exists (odd prime powers, twice odd prime powers, and
// small n).
std::vector<int> admissible_twists(int n);

}  // namespace zsl
