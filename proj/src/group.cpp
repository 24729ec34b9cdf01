#include "zsl/group.hpp"

#include <numeric>
#include <sstream>

namespace zsl {

namespace {

// Largest group we will materialize a flat order^2 table for.
constexpr int kMaxOrder = 1024;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

const char* to_string(GroupTag tag) {
    switch (tag) {
        case GroupTag::AbelianCyclicLike: return "abelian";
        case GroupTag::Dihedral: return "dihedral";
        case GroupTag::TwistedMetacyclic: return "metacyclic";
        case GroupTag::Invalid: return "invalid";
    }
    return "?";
}

const char* to_string(MetacyclicSubtag subtag) {
    switch (subtag) {
        case MetacyclicSubtag::None: return "none";
        case MetacyclicSubtag::Quasidihedral: return "quasidihedral";
        case MetacyclicSubtag::ModularMaximalCyclic: return "modular-maximal-cyclic";
        case MetacyclicSubtag::Generic: return "generic";
    }
    return "?";
}

GroupClass validate_params(int n, long long s) {
    if (n < 2) throw PreconditionError("validate_params: n must be >= 2");
    int sr = static_cast<int>(((s % n) + n) % n);

    GroupClass cls;
    if (static_cast<long long>(sr) * sr % n != 1) {
        cls.tag = GroupTag::Invalid;
        return cls;
    }
    if (sr == 1 % n) {
        cls.tag = GroupTag::AbelianCyclicLike;
        return cls;
    }
    if (sr == n - 1) {
        // s == -1: dihedral for n >= 3 (n = 2 has -1 == 1, caught above).
        cls.tag = GroupTag::Dihedral;
        return cls;
    }
    cls.tag = GroupTag::TwistedMetacyclic;
    cls.subtag = MetacyclicSubtag::Generic;
    if (is_power_of_two(n) && n >= 8) {
        int half = n / 2;
        if (sr == half - 1) cls.subtag = MetacyclicSubtag::Quasidihedral;
        if (sr == half + 1) cls.subtag = MetacyclicSubtag::ModularMaximalCyclic;
    }
    return cls;
}

Group Group::metacyclic(int n, long long s) {
    GroupClass cls = validate_params(n, s);
    if (cls.tag == GroupTag::Invalid)
        throw PreconditionError("metacyclic group requires s^2 == 1 (mod n)");
    if (2 * n > kMaxOrder)
        throw PreconditionError("group order exceeds supported table size");
    Group g;
    g.n_ = n;
    g.s_ = static_cast<int>(((s % n) + n) % n);
    g.has_x_ = true;
    g.order_ = 2 * n;
    g.cls_ = cls;
    g.build_tables();
    return g;
}

Group Group::cyclic(int m) {
    if (m < 1) throw PreconditionError("cyclic group requires m >= 1");
    if (m > kMaxOrder)
        throw PreconditionError("group order exceeds supported table size");
    Group g;
    g.n_ = m;
    g.s_ = 1 % m;
    g.has_x_ = false;
    g.order_ = m;
    g.cls_.tag = GroupTag::AbelianCyclicLike;
    g.build_tables();
    return g;
}

void Group::build_tables() {
    mul_table_.assign(static_cast<size_t>(order_) * order_, 0);
    inverse_.assign(order_, 0);
    // (a,b) * (c,d) = ((a+c) mod 2, (b*s^c + d) mod n); s^c twists only when
    // the right factor carries an x.
    for (int g = 0; g < order_; ++g) {
        int a = g / n_, b = g % n_;
        for (int h = 0; h < order_; ++h) {
            int c = h / n_, d = h % n_;
            long long twisted = (c == 1) ? static_cast<long long>(b) * s_ : b;
            int bb = static_cast<int>((twisted + d) % n_);
            mul_table_[static_cast<size_t>(g) * order_ + h] = ((a + c) % 2) * n_ + bb;
        }
    }
    for (int g = 0; g < order_; ++g) {
        for (int h = 0; h < order_; ++h) {
            if (mul(g, h) == 0) {
                inverse_[g] = h;
                break;
            }
        }
    }
}

int Group::pow(int g, long long k) const {
    if (k < 0) return pow(inverse_[g], -k);
    int acc = 0;  // identity
    int base = g;
    while (k > 0) {
        if (k & 1) acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

int Group::element_order(int g) const {
    int acc = g;
    int k = 1;
    while (acc != 0) {
        acc = mul(acc, g);
        ++k;
    }
    return k;
}

GroupElement Group::element(int idx) const { return GroupElement{idx / n_, idx % n_}; }

int Group::index(const GroupElement& e) const { return e.a * n_ + e.b; }

int Group::index(int a, long long b) const {
    int br = static_cast<int>(((b % n_) + n_) % n_);
    int ar = ((a % 2) + 2) % 2;
    if (ar == 1 && !has_x_)
        throw PreconditionError("cyclic group has no x component");
    return ar * n_ + br;
}

std::string Group::element_name(int idx) const {
    GroupElement e = element(idx);
    if (e.a == 0 && e.b == 0) return "1";
    std::ostringstream out;
    if (e.a == 1) {
        out << "x";
        if (e.b != 0) out << "*y^" << e.b;
    } else {
        out << "y^" << e.b;
    }
    return out.str();
}

std::string Group::spec_string() const {
    std::ostringstream out;
    if (has_x_)
        out << "metacyclic:n=" << n_ << ",s=" << s_;
    else
        out << "cyclic:m=" << n_;
    return out.str();
}

}  // namespace zsl
