#include "zsl/factorization.hpp"

#include <numeric>

#include "zsl/errors.hpp"
#include "zsl/group.hpp"

namespace zsl {

const char* to_string(FactorCase c) { return c == FactorCase::A ? "A" : "B"; }

Factorization factor(int n, long long s) {
    GroupClass cls = validate_params(n, s);
    if (!cls.twisted_metacyclic())
        throw PreconditionError("factor: (n,s) is not of the studied class");

    Factorization f;
    f.n = n;
    f.s = static_cast<int>(((s % n) + n) % n);

    int m = n;
    while (m % 2 == 0) {
        m /= 2;
        ++f.t;
    }
    // s^2 == 1 (mod m) and m odd split m into coprime halves along s -+ 1.
    // s >= 3 here (smaller s never reaches this class), so both args are > 0.
    f.m1 = std::gcd(m, f.s + 1);
    f.m2 = std::gcd(m, f.s - 1);

    if (f.t == 0) {
        f.case_tag = FactorCase::A;
        f.n1 = f.m1;
        f.n2 = f.m2;
    } else if (f.t == 1) {
        // Two symmetric options exist; fixed convention: the factor 2 joins
        // n1 iff s == -1 (mod 2 m1). With s odd this always holds.
        f.case_tag = FactorCase::A;
        if ((f.s + 1) % (2 * f.m1) == 0) {
            f.n1 = 2 * f.m1;
            f.n2 = f.m2;
        } else {
            f.n1 = f.m1;
            f.n2 = 2 * f.m2;
        }
    } else {
        int two_t = 1 << f.t;
        int half = two_t / 2;
        int sm = f.s % two_t;
        if (sm == two_t - 1) {
            f.case_tag = FactorCase::A;
            f.n1 = two_t * f.m1;
            f.n2 = f.m2;
        } else if (sm == 1) {
            f.case_tag = FactorCase::A;
            f.n1 = f.m1;
            f.n2 = two_t * f.m2;
        } else if (sm == half - 1) {
            f.case_tag = FactorCase::B;
            f.n1 = half * f.m1;
            f.n2 = f.m2;
        } else if (sm == half + 1) {
            f.case_tag = FactorCase::B;
            f.n1 = f.m1;
            f.n2 = half * f.m2;
        } else {
            // s^2 == 1 (mod 2^t) leaves exactly the four residues above.
            throw std::logic_error("factor: impossible residue of s mod 2^t");
        }
    }
    return f;
}

CrtProjection build_projection(const Factorization& f) {
    if (f.n < 1 || f.n1 < 1 || f.n2 < 1)
        throw PreconditionError("build_projection: invalid factorization");
    return CrtProjection{f.n, f.n1, f.n2};
}

std::vector<int> admissible_twists(int n) {
    std::vector<int> out;
    if (n < 2) return out;
    for (int s = 0; s < n; ++s)
        if (validate_params(n, s).twisted_metacyclic()) out.push_back(s);
    return out;
}

}  // namespace zsl
