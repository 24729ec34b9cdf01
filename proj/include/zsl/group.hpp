#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zsl/errors.hpp"

namespace zsl {

// Classification of a parameter pair (n,s) for the semidirect product
// C_n x| C_2 with presentation  x^2 = y^n = 1, yx = xy^s.
//
//   AbelianCyclicLike : s == 1 (mod n); the product is abelian.
//   Dihedral          : s == -1 (mod n), n >= 3.
//   TwistedMetacyclic   : s^2 == 1 (mod n) and s != +-1 (mod n); this forces
//                       n >= 8 and gcd(s,n) = 1.
//   Invalid           : s^2 != 1 (mod n); the pair multiplication formula
//                       below is not associative, so no group is defined.
enum class GroupTag { AbelianCyclicLike, Dihedral, TwistedMetacyclic, Invalid };

enum class MetacyclicSubtag {
    None,                 // tag is not TwistedMetacyclic
    Quasidihedral,        // (n,s) = (2^t, 2^(t-1)-1), t >= 3
    ModularMaximalCyclic, // (n,s) = (2^t, 2^(t-1)+1), t >= 3
    Generic,
};

struct GroupClass {
    GroupTag tag = GroupTag::Invalid;
    MetacyclicSubtag subtag = MetacyclicSubtag::None;

    bool twisted_metacyclic() const { return tag == GroupTag::TwistedMetacyclic; }
    bool non_abelian() const {
        return tag == GroupTag::Dihedral || tag == GroupTag::TwistedMetacyclic;
    }
};

const char* to_string(GroupTag tag);
const char* to_string(MetacyclicSubtag subtag);

// Classify (n, s). Rejects n < 2; any integer s is accepted and reduced mod n.
GroupClass validate_params(int n, long long s);

// Canonical element x^a y^b with a in {0,1} and 0 <= b < n.
// For plain cyclic groups a is always 0.
struct GroupElement {
    int a = 0;
    int b = 0;
    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// A concrete finite group, either C_n x| C_2 (order 2n) or plain C_m (order m).
// Elements are indexed 0..order-1 with index = a*n + b; multiplication is
// precomputed into a flat table at construction. Immutable afterwards, safe
// to share across threads by reference.
class Group {
public:
    static Group metacyclic(int n, long long s);  // rejects Invalid params
    static Group cyclic(int m);                   // m >= 1

    int order() const { return order_; }
    int identity() const { return 0; }
    bool is_cyclic() const { return !has_x_; }

    // n and s of the presentation; for cyclic groups n = m and s = 1.
    int n() const { return n_; }
    int s() const { return s_; }
    const GroupClass& group_class() const { return cls_; }

    int mul(int g, int h) const { return mul_table_[static_cast<size_t>(g) * order_ + h]; }
    int inverse(int g) const { return inverse_[g]; }
    int pow(int g, long long k) const;
    int element_order(int g) const;

    GroupElement element(int idx) const;
    int index(const GroupElement& e) const;  // requires canonical form
    int index(int a, long long b) const;     // reduces a mod 2, b mod n

    // Membership predicates for the normal subgroup H = <y> and its coset N = xH.
    bool in_h(int idx) const { return idx < n_; }
    bool in_n(int idx) const { return idx >= n_; }

    std::string element_name(int idx) const;  // "1", "y^3", "x", "x*y^2"

    std::string spec_string() const;  // "metacyclic:n=8,s=3" / "cyclic:m=5"

private:
    Group() = default;
    void build_tables();

    int n_ = 1;
    int s_ = 1;
    bool has_x_ = false;
    int order_ = 1;
    GroupClass cls_;
    std::vector<int> mul_table_;
    std::vector<int> inverse_;
};

}  // namespace zsl
