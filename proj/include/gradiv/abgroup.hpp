#pragma once

#include <map>
#include <string>
#include <vector>

namespace gradiv {

/// Element of a finite abelian group, as an exponent vector on the fixed
/// cyclic factors. Componentwise reduced; comparable for use as a map key.
using GroupElement = std::vector<int>;

/// Finite abelian group presented as an ordered product of cyclic factors.
/// The factor ordering is part of the data (no normal-form canonicalization):
/// bicharacter tables and quadratic-form tables are indexed on it.
class Group {
public:
    Group() = default;
    explicit Group(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int rank() const { return static_cast<int>(orders_.size()); }
    long order() const { return size_; }

    GroupElement identity() const { return GroupElement(orders_.size(), 0); }
    GroupElement generator(int k) const;
    GroupElement reduce(const GroupElement& a) const;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;
    GroupElement pow(const GroupElement& a, long e) const;
    int element_order(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;
    bool is_elementary_2() const;
    int exponent() const;

    /// All elements in lexicographic exponent order.
    const std::vector<GroupElement>& elements() const { return elems_; }
    /// Index of an element within elements().
    long index_of(const GroupElement& a) const;

    bool operator==(const Group& o) const { return orders_ == o.orders_; }
    bool operator!=(const Group& o) const { return !(*this == o); }

    std::string element_str(const GroupElement& a) const;

private:
    std::vector<int> orders_;
    long size_ = 1;
    std::vector<GroupElement> elems_;
};

/// Subgroup stored with its full element set (desk scale keeps this cheap).
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(const Group& parent, std::vector<GroupElement> generators);
    static Subgroup from_elements(const Group& parent, std::vector<GroupElement> elems);

    const Group& parent() const { return *parent_; }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const std::vector<GroupElement>& elements() const { return elems_; }
    long order() const { return static_cast<long>(elems_.size()); }
    long index() const { return parent_->order() / order(); }
    bool contains(const GroupElement& a) const;

    bool operator==(const Subgroup& o) const { return elems_ == o.elems_; }
    bool operator<(const Subgroup& o) const { return elems_ < o.elems_; }

private:
    const Group* parent_ = nullptr;
    std::vector<GroupElement> gens_;
    std::vector<GroupElement> elems_;  // sorted
};

/// T_[n] = { t | t^n = e }
Subgroup torsion_subgroup(const Group& t, int n);
/// T^[n] = { t^n }
Subgroup power_subgroup(const Group& t, int n);

/// All subgroups of index exactly 2, via kernels of the nontrivial
/// homomorphisms T -> {±1}. Empty when |T| is odd.
std::vector<Subgroup> index2_subgroups(const Group& t);

/// Rank of T / T^[2] (number of even cyclic factors).
int two_rank(const Group& t);

}  // namespace gradiv
