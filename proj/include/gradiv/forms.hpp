#pragma once

#include "gradiv/abgroup.hpp"
#include "gradiv/cyclotomic.hpp"
#include "gradiv/error.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace gradiv {

/// Arf invariant of a ±1-valued map: majority sign, undefined on ties.
enum class Arf { plus, minus, undefined };

inline int arf_to_int(Arf a) { return a == Arf::plus ? 1 : a == Arf::minus ? -1 : 0; }
Arf arf_of_values(const std::vector<int>& values);

/// Alternating bicharacter on a finite abelian group, as an antisymmetric
/// table of rational rotation numbers on the generators:
/// beta(g_i, g_j) = e^{2 pi i q_ij}. Real-valued when all q_ij are in {0, 1/2}.
class Bicharacter {
public:
    Bicharacter() = default;
    Bicharacter(Group group, std::vector<std::vector<Rational>> q);

    static Bicharacter trivial(const Group& g);
    /// Consecutive generator pairs (g_0,g_1), (g_2,g_3), ... get
    /// beta(g_{2i}, g_{2i+1}) = e^{2 pi i / l} with l = order(g_{2i+1});
    /// leftover generators are radical.
    static Bicharacter standard_symplectic(const Group& g);

    const Group& group() const { return group_; }
    bool real_valued() const { return real_; }
    const std::vector<std::vector<Rational>>& q() const { return q_; }

    /// Rotation number of beta(u, v) in [0, 1).
    Rational rot(const GroupElement& u, const GroupElement& v) const;
    /// ±1 value; requires real_valued().
    int value(const GroupElement& u, const GroupElement& v) const;
    Cyclotomic cyclo_value(const GroupElement& u, const GroupElement& v) const;

    std::vector<GroupElement> radical() const;
    Subgroup perp(const GroupElement& u) const;

    bool operator==(const Bicharacter& o) const;

private:
    Group group_;
    std::vector<std::vector<Rational>> q_;
    bool real_ = true;
};

/// Type classification of a real alternating bicharacter (type I/II), over a
/// full group or a subgroup domain.
struct TypeInfo {
    enum Kind { I, II } type;
    std::optional<GroupElement> f_beta;  // radical generator (type II)
    std::optional<GroupElement> f_T;     // generator of D^[2] when nontrivial (Z4 shape)
    std::optional<std::vector<GroupElement>> rad_prime;  // extra 2-torsion radicals
};

/// Sign-valued pairing restricted to a domain (ambient coordinates).
using BetaFn = std::function<int(const GroupElement&, const GroupElement&)>;

TypeInfo classify_type(const Bicharacter& beta);
TypeInfo classify_type_on(const Group& g, const std::vector<GroupElement>& domain,
                          const BetaFn& beta);

/// ±1-valued quadratic form on a group or on a subgroup of it, stored as a
/// full table.
class QuadraticForm {
public:
    QuadraticForm() = default;
    /// Raw-table constructors validate the quadratic-form axioms.
    QuadraticForm(const Group& g, std::map<GroupElement, int> values);
    QuadraticForm(const Group& g, std::vector<GroupElement> domain,
                  std::map<GroupElement, int> values);

    const Group& group() const { return *group_; }
    const std::vector<GroupElement>& domain() const { return domain_; }
    bool domain_is_full() const { return static_cast<long>(domain_.size()) == group_->order(); }
    int value(const GroupElement& t) const;

    /// Polarization value mu(uv) mu(u) mu(v).
    int pol_value(const GroupElement& u, const GroupElement& v) const;
    TypeInfo type_info() const;

    Arf arf() const;
    bool operator==(const QuadraticForm& o) const;
    bool operator!=(const QuadraticForm& o) const { return !(*this == o); }

private:
    const Group* group_ = nullptr;
    std::vector<GroupElement> domain_;  // sorted
    std::map<GroupElement, int> values_;

    void validate_table();
    struct Prevalidated {};
    QuadraticForm(Prevalidated, const Group& g, std::vector<GroupElement> domain,
                  std::map<GroupElement, int> values);
    friend std::vector<QuadraticForm> enumerate_forms_on(const Group&,
                                                         const std::vector<GroupElement>&,
                                                         const std::vector<GroupElement>&,
                                                         const Bicharacter&, bool);
    friend QuadraticForm extend_form_impl(const Group&, const std::vector<GroupElement>&,
                                          const std::vector<GroupElement>&,
                                          const std::vector<int>&, const Bicharacter&, bool);
};

/// Polarization as a generator-table bicharacter; requires a full domain.
/// Throws NotAQuadraticForm if the table fails the axioms.
Bicharacter polarization(const QuadraticForm& mu);

/// Does the polarization of mu agree with beta on mu's domain?
bool polarization_matches(const QuadraticForm& mu, const Bicharacter& beta);

/// Extend generator values along canonical words,
/// mu(t g) = mu(t) mu(g) beta(t, g); verifies global consistency.
QuadraticForm extend_form(const Group& t, const std::vector<int>& generator_values,
                          const Bicharacter& beta);
/// Same with an explicit subgroup domain and generating set for it.
QuadraticForm extend_form_on(const Group& t, const std::vector<GroupElement>& domain,
                             const std::vector<GroupElement>& gens,
                             const std::vector<int>& gen_values, const Bicharacter& beta);

/// S = { t | mu(t) = eta(t) }: always a subgroup of index exactly 2.
Subgroup agreement_subgroup(const QuadraticForm& mu, const QuadraticForm& eta);

/// Symplectic basis data: pairs (a_i, b_i) with beta(a_i, b_i) = -1, all other
/// basis values +1; for type II either f_beta is adjoined (elementary case) or
/// the last pair has order(b_m) = 4 with b_m^2 = f_beta.
struct SymplecticBasis {
    std::vector<std::pair<GroupElement, GroupElement>> pairs;
    std::optional<GroupElement> f_adjoined;
};

SymplecticBasis symplectic_basis(const Bicharacter& beta);
SymplecticBasis symplectic_basis_on(const Group& g, const std::vector<GroupElement>& domain,
                                    const BetaFn& beta);

/// Arf via the product formula over a symplectic basis; an independent route
/// cross-checked against counting in the test suite.
Arf arf_from_symplectic_basis(const QuadraticForm& mu);

/// All quadratic forms with the given polarization, deterministic order.
/// Parallelized over generator assignments when OpenMP is enabled.
std::vector<QuadraticForm> enumerate_forms(const Bicharacter& beta);
/// Serial reference twin.
std::vector<QuadraticForm> enumerate_forms_serial(const Bicharacter& beta);
/// Subgroup-domain version: domain given by its elements and a generating set.
std::vector<QuadraticForm> enumerate_forms_on(const Group& t,
                                              const std::vector<GroupElement>& domain,
                                              const std::vector<GroupElement>& gens,
                                              const Bicharacter& beta, bool parallel);

/// Nice map on T \ K (K of index 2): every difference quotient
/// mu_g(k) = nu(gk) nu(g) is a quadratic form on K with a common polarization.
class NiceMap {
public:
    NiceMap() = default;
    NiceMap(const Group& t, Subgroup k, std::map<GroupElement, int> values);

    const Group& group() const { return *group_; }
    const Subgroup& k() const { return k_; }
    const std::vector<GroupElement>& coset() const { return coset_; }
    int value(const GroupElement& t) const;

    QuadraticForm mu(const GroupElement& g) const;
    /// Polarization value on K (independent of the reference point).
    int pol_value(const GroupElement& u, const GroupElement& v) const;
    TypeInfo type_info() const;

    /// nu(f_beta) := mu_g(f_beta), independent of g (type II polarization).
    int value_at_f_beta() const;
    /// nu(rad'(beta)) via an order-2 reference point (Z4-shape case).
    int value_at_rad_prime() const;

    Arf arf() const;

    bool operator==(const NiceMap& o) const;
    NiceMap negated() const;
    bool same_class(const NiceMap& o) const;

private:
    const Group* group_ = nullptr;
    Subgroup k_;
    std::vector<GroupElement> coset_;  // sorted
    std::map<GroupElement, int> values_;
};

bool polarization_matches(const NiceMap& nu, const Bicharacter& beta);

/// All nice maps on T \ K whose polarization is beta_on_k (a bicharacter given
/// on the ambient group, restricted to K).
std::vector<NiceMap> enumerate_nice_maps(const Group& t, const Subgroup& k,
                                         const Bicharacter& beta);

/// Enumeration guard (forms and nice maps).
inline constexpr long kEnumerationBound = 1L << 12;

}  // namespace gradiv
