#include "gradiv/abgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gradiv {

Group::Group(std::vector<int> orders) : orders_(std::move(orders)) {
    for (int d : orders_)
        if (d < 2) throw std::invalid_argument("Group: every cyclic factor order must be >= 2");
    for (int d : orders_) size_ *= d;
    if (size_ > (1L << 20)) throw std::invalid_argument("Group: order too large for desk scale");
    // enumerate in lexicographic exponent order
    elems_.reserve(static_cast<size_t>(size_));
    GroupElement cur(orders_.size(), 0);
    for (long k = 0; k < size_; ++k) {
        elems_.push_back(cur);
        for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
            if (++cur[i] < orders_[i]) break;
            cur[i] = 0;
        }
    }
}

GroupElement Group::generator(int k) const {
    GroupElement g(orders_.size(), 0);
    g.at(static_cast<size_t>(k)) = 1;
    return g;
}

GroupElement Group::reduce(const GroupElement& a) const {
    if (a.size() != orders_.size()) throw std::invalid_argument("GroupElement: rank mismatch");
    GroupElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        int m = a[i] % orders_[i];
        r[i] = m < 0 ? m + orders_[i] : m;
    }
    return r;
}

GroupElement Group::mul(const GroupElement& a, const GroupElement& b) const {
    if (a.size() != orders_.size() || b.size() != orders_.size())
        throw std::invalid_argument("GroupElement: rank mismatch");
    GroupElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % orders_[i];
    return r;
}

GroupElement Group::inv(const GroupElement& a) const {
    GroupElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
    return r;
}

GroupElement Group::pow(const GroupElement& a, long e) const {
    GroupElement r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        long m = (static_cast<long>(a[i]) * e) % orders_[i];
        r[i] = static_cast<int>(m < 0 ? m + orders_[i] : m);
    }
    return r;
}

int Group::element_order(const GroupElement& a) const {
    long o = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int d = std::gcd(a[i], orders_[i]);
        o = std::lcm(o, static_cast<long>(orders_[i] / d));
    }
    return static_cast<int>(o);
}

bool Group::is_identity(const GroupElement& a) const {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

bool Group::is_elementary_2() const {
    return std::all_of(orders_.begin(), orders_.end(), [](int d) { return d == 2; });
}

int Group::exponent() const {
    long e = 1;
    for (int d : orders_) e = std::lcm(e, static_cast<long>(d));
    return static_cast<int>(e);
}

long Group::index_of(const GroupElement& a) const {
    long idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + a[i];
    return idx;
}

std::string Group::element_str(const GroupElement& a) const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << "]";
    return os.str();
}

Subgroup::Subgroup(const Group& parent, std::vector<GroupElement> generators)
    : parent_(&parent), gens_(std::move(generators)) {
    std::set<GroupElement> closure;
    closure.insert(parent.identity());
    std::vector<GroupElement> frontier{parent.identity()};
    for (const auto& raw : gens_) {
        GroupElement g = parent.reduce(raw);
        std::vector<GroupElement> snapshot(closure.begin(), closure.end());
        for (const auto& x : snapshot) {
            GroupElement y = x;
            do {
                y = parent.mul(y, g);
                closure.insert(y);
            } while (y != x);
        }
    }
    elems_.assign(closure.begin(), closure.end());
}

Subgroup Subgroup::from_elements(const Group& parent, std::vector<GroupElement> elems) {
    Subgroup s;
    s.parent_ = &parent;
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    s.elems_ = std::move(elems);
    s.gens_ = s.elems_;  // coarse but valid
    // sanity: closed under product and inverse, contains identity
    std::set<GroupElement> set(s.elems_.begin(), s.elems_.end());
    if (!set.count(parent.identity())) throw std::invalid_argument("Subgroup: missing identity");
    for (const auto& a : s.elems_)
        for (const auto& b : s.elems_)
            if (!set.count(parent.mul(a, b))) throw std::invalid_argument("Subgroup: not closed");
    return s;
}

bool Subgroup::contains(const GroupElement& a) const {
    return std::binary_search(elems_.begin(), elems_.end(), parent_->reduce(a));
}

Subgroup torsion_subgroup(const Group& t, int n) {
    if (n < 1) throw std::invalid_argument("torsion_subgroup: n >= 1 required");
    std::vector<GroupElement> elems;
    for (const auto& a : t.elements())
        if (t.is_identity(t.pow(a, n))) elems.push_back(a);
    return Subgroup::from_elements(t, std::move(elems));
}

Subgroup power_subgroup(const Group& t, int n) {
    if (n < 1) throw std::invalid_argument("power_subgroup: n >= 1 required");
    std::vector<GroupElement> elems;
    for (const auto& a : t.elements()) elems.push_back(t.pow(a, n));
    return Subgroup::from_elements(t, std::move(elems));
}

std::vector<Subgroup> index2_subgroups(const Group& t) {
    std::vector<Subgroup> out;
    if (t.order() % 2 != 0) return out;
    // homomorphisms T -> {±1} are parameterized by a sign choice on each even
    // cyclic factor; the kernel of a nontrivial one has index exactly 2
    std::vector<int> even_factors;
    for (int i = 0; i < t.rank(); ++i)
        if (t.orders()[i] % 2 == 0) even_factors.push_back(i);
    const int r = static_cast<int>(even_factors.size());
    for (long mask = 1; mask < (1L << r); ++mask) {
        std::vector<GroupElement> kernel;
        for (const auto& a : t.elements()) {
            int parity = 0;
            for (int b = 0; b < r; ++b)
                if (mask & (1L << b)) parity += a[static_cast<size_t>(even_factors[b])];
            if (parity % 2 == 0) kernel.push_back(a);
        }
        out.push_back(Subgroup::from_elements(t, std::move(kernel)));
    }
    return out;
}

int two_rank(const Group& t) {
    int r = 0;
    for (int d : t.orders())
        if (d % 2 == 0) ++r;
    return r;
}

}  // namespace gradiv
