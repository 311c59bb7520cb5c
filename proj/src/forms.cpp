#include "gradiv/forms.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gradiv {

Arf arf_of_values(const std::vector<int>& values) {
    long plus = 0, minus = 0;
    for (int v : values) (v > 0 ? plus : minus)++;
    if (plus > minus) return Arf::plus;
    if (minus > plus) return Arf::minus;
    return Arf::undefined;
}

namespace {
Rational mod1(Rational r) {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r - Rational(q);
}
}  // namespace

Bicharacter::Bicharacter(Group group, std::vector<std::vector<Rational>> q)
    : group_(std::move(group)), q_(std::move(q)) {
    const int r = group_.rank();
    if (static_cast<int>(q_.size()) != r)
        throw Error(ErrorCode::BadInput, "bicharacter table has wrong rank");
    for (auto& row : q_) {
        if (static_cast<int>(row.size()) != r)
            throw Error(ErrorCode::BadInput, "bicharacter table not square");
        for (auto& x : row) x = mod1(x);
    }
    for (int i = 0; i < r; ++i) {
        if (q_[i][i] != 0)
            throw Error(ErrorCode::BadInput, "bicharacter not alternating on a generator");
        for (int j = 0; j < r; ++j) {
            if (mod1(q_[i][j] + q_[j][i]) != 0)
                throw Error(ErrorCode::BadInput, "bicharacter table not antisymmetric");
            // order(g_i) * q_ij must be integral
            if (mod1(Rational(group_.orders()[i]) * q_[i][j]) != 0)
                throw Error(ErrorCode::BadInput, "bicharacter incompatible with factor orders");
            if (q_[i][j] != 0 && q_[i][j] != Rational(1, 2)) real_ = false;
        }
    }
}

Bicharacter Bicharacter::trivial(const Group& g) {
    return Bicharacter(g, std::vector<std::vector<Rational>>(
                              g.rank(), std::vector<Rational>(g.rank(), Rational(0))));
}

Bicharacter Bicharacter::standard_symplectic(const Group& g) {
    std::vector<std::vector<Rational>> q(g.rank(), std::vector<Rational>(g.rank(), Rational(0)));
    for (int i = 0; i + 1 < g.rank(); i += 2) {
        int l = g.orders()[i + 1];
        q[i][i + 1] = Rational(1, l);
        q[i + 1][i] = mod1(Rational(-1, l));
    }
    return Bicharacter(g, std::move(q));
}

Rational Bicharacter::rot(const GroupElement& u, const GroupElement& v) const {
    Rational s(0);
    for (int i = 0; i < group_.rank(); ++i) {
        if (u[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < group_.rank(); ++j) {
            if (v[static_cast<size_t>(j)] == 0) continue;
            s += Rational(u[static_cast<size_t>(i)]) * Rational(v[static_cast<size_t>(j)]) *
                 q_[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
    }
    return mod1(s);
}

int Bicharacter::value(const GroupElement& u, const GroupElement& v) const {
    Rational r = rot(u, v);
    if (r == 0) return 1;
    if (r == Rational(1, 2)) return -1;
    throw Error(ErrorCode::BadInput, "bicharacter value is not real");
}

Cyclotomic Bicharacter::cyclo_value(const GroupElement& u, const GroupElement& v) const {
    Rational r = rot(u, v);
    if (r == 0) return Cyclotomic::one();
    long den = r.get_den().get_si();
    long num = r.get_num().get_si();
    return Cyclotomic::root_of_unity(static_cast<int>(den), num);
}

std::vector<GroupElement> Bicharacter::radical() const {
    std::vector<GroupElement> rad;
    for (const auto& t : group_.elements()) {
        bool in = true;
        for (const auto& u : group_.elements())
            if (rot(t, u) != 0) {
                in = false;
                break;
            }
        if (in) rad.push_back(t);
    }
    return rad;
}

Subgroup Bicharacter::perp(const GroupElement& u) const {
    std::vector<GroupElement> elems;
    for (const auto& v : group_.elements())
        if (rot(u, v) == 0) elems.push_back(v);
    return Subgroup::from_elements(group_, std::move(elems));
}

bool Bicharacter::operator==(const Bicharacter& o) const {
    return group_ == o.group_ && q_ == o.q_;
}

namespace {

std::vector<GroupElement> radical_of(const Group& g, const std::vector<GroupElement>& domain,
                                     const BetaFn& beta) {
    std::vector<GroupElement> rad;
    for (const auto& t : domain) {
        bool in = true;
        for (const auto& u : domain)
            if (beta(t, u) != 1) {
                in = false;
                break;
            }
        if (in) rad.push_back(t);
    }
    return rad;
}

}  // namespace

TypeInfo classify_type_on(const Group& g, const std::vector<GroupElement>& domain,
                          const BetaFn& beta) {
    TypeInfo info;
    auto rad = radical_of(g, domain, beta);
    if (rad.size() == 1) {
        info.type = TypeInfo::I;
        return info;
    }
    if (rad.size() != 2) throw Error(ErrorCode::NotTypeIorII, "radical has order > 2");
    info.type = TypeInfo::II;
    const GroupElement f = g.is_identity(rad[0]) ? rad[1] : rad[0];
    if (g.element_order(f) != 2) throw Error(ErrorCode::NotTypeIorII, "radical generator order != 2");
    info.f_beta = f;

    // D^[2] within the domain
    std::set<GroupElement> squares;
    for (const auto& t : domain) squares.insert(g.pow(t, 2));
    if (squares.size() == 2) {
        GroupElement ft;
        for (const auto& s : squares)
            if (!g.is_identity(s)) ft = s;
        info.f_T = ft;
        // rad'(beta) = rad(beta| D_[2] x D_[2]) \ rad(beta)
        std::vector<GroupElement> two_torsion;
        for (const auto& t : domain)
            if (g.is_identity(g.pow(t, 2))) two_torsion.push_back(t);
        auto rad2 = radical_of(g, two_torsion, beta);
        std::vector<GroupElement> rp;
        for (const auto& t : rad2)
            if (t != rad[0] && t != rad[1]) rp.push_back(t);
        if (!rp.empty()) info.rad_prime = rp;
    }
    return info;
}

TypeInfo classify_type(const Bicharacter& beta) {
    if (!beta.real_valued())
        throw Error(ErrorCode::BadInput, "classify_type requires a real-valued bicharacter");
    return classify_type_on(beta.group(), beta.group().elements(),
                            [&beta](const GroupElement& u, const GroupElement& v) {
                                return beta.value(u, v);
                            });
}

QuadraticForm::QuadraticForm(const Group& g, std::map<GroupElement, int> values)
    : group_(&g), domain_(g.elements()), values_(std::move(values)) {
    validate_table();
}

QuadraticForm::QuadraticForm(const Group& g, std::vector<GroupElement> domain,
                             std::map<GroupElement, int> values)
    : group_(&g), domain_(std::move(domain)), values_(std::move(values)) {
    std::sort(domain_.begin(), domain_.end());
    validate_table();
}

QuadraticForm::QuadraticForm(Prevalidated, const Group& g, std::vector<GroupElement> domain,
                             std::map<GroupElement, int> values)
    : group_(&g), domain_(std::move(domain)), values_(std::move(values)) {}

void QuadraticForm::validate_table() {
    if (values_.size() != domain_.size())
        throw Error(ErrorCode::NotAQuadraticForm, "value table does not cover the domain");
    for (const auto& [t, v] : values_)
        if (v != 1 && v != -1) throw Error(ErrorCode::NotAQuadraticForm, "values must be ±1");
    if (value(group_->identity()) != 1)
        throw Error(ErrorCode::NotAQuadraticForm, "mu(e) must be +1");
    // bimultiplicativity of the polarization, checked on all triples
    const auto& d = domain_;
    for (const auto& u : d)
        for (const auto& v : d) {
            int buv = pol_value(u, v);
            for (const auto& w : d) {
                // beta(uv, w) = beta(u, w) beta(v, w)
                if (pol_value(group_->mul(u, v), w) != pol_value(u, w) * pol_value(v, w))
                    throw Error(ErrorCode::NotAQuadraticForm, "polarization is not bilinear");
            }
            (void)buv;
        }
}

int QuadraticForm::value(const GroupElement& t) const {
    auto it = values_.find(group_->reduce(t));
    if (it == values_.end())
        throw Error(ErrorCode::BadInput, "element outside the form's domain");
    return it->second;
}

int QuadraticForm::pol_value(const GroupElement& u, const GroupElement& v) const {
    return value(group_->mul(u, v)) * value(u) * value(v);
}

TypeInfo QuadraticForm::type_info() const {
    return classify_type_on(*group_, domain_, [this](const GroupElement& u, const GroupElement& v) {
        return pol_value(u, v);
    });
}

Arf QuadraticForm::arf() const {
    std::vector<int> vals;
    vals.reserve(values_.size());
    for (const auto& [t, v] : values_) vals.push_back(v);
    return arf_of_values(vals);
}

bool QuadraticForm::operator==(const QuadraticForm& o) const {
    return group_ == o.group_ ? (domain_ == o.domain_ && values_ == o.values_)
                              : (group_->orders() == o.group_->orders() && domain_ == o.domain_ &&
                                 values_ == o.values_);
}

Bicharacter polarization(const QuadraticForm& mu) {
    if (!mu.domain_is_full())
        throw Error(ErrorCode::BadInput, "polarization as a table needs a full-group form");
    const Group& g = mu.group();
    std::vector<std::vector<Rational>> q(g.rank(), std::vector<Rational>(g.rank(), Rational(0)));
    for (int i = 0; i < g.rank(); ++i)
        for (int j = 0; j < g.rank(); ++j)
            if (i != j && mu.pol_value(g.generator(i), g.generator(j)) == -1)
                q[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(1, 2);
    Bicharacter beta(g, std::move(q));
    if (!polarization_matches(mu, beta))
        throw Error(ErrorCode::NotAQuadraticForm, "polarization not bilinear");
    return beta;
}

bool polarization_matches(const QuadraticForm& mu, const Bicharacter& beta) {
    if (mu.group().orders() != beta.group().orders()) return false;
    for (const auto& u : mu.domain())
        for (const auto& v : mu.domain()) {
            Rational r = beta.rot(u, v);
            int b;
            if (r == 0)
                b = 1;
            else if (r == Rational(1, 2))
                b = -1;
            else
                return false;
            if (mu.pol_value(u, v) != b) return false;
        }
    return true;
}

QuadraticForm extend_form_impl(const Group& t, const std::vector<GroupElement>& domain,
                               const std::vector<GroupElement>& gens,
                               const std::vector<int>& gen_values, const Bicharacter& beta,
                               bool verify) {
    if (gens.size() != gen_values.size())
        throw Error(ErrorCode::BadInput, "generator value count mismatch");
    if (!beta.real_valued())
        throw Error(ErrorCode::InconsistentExtension, "quadratic forms need a real bicharacter");
    std::map<GroupElement, int> values;
    values[t.identity()] = 1;
    // grow by canonical words over the generating sequence
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gen_values[i] != 1 && gen_values[i] != -1)
            throw Error(ErrorCode::BadInput, "generator values must be ±1");
        std::map<GroupElement, int> next = values;
        for (const auto& [w, mw] : values) {
            GroupElement cur = w;
            int mcur = mw;
            int ord = t.element_order(gens[i]);
            for (int e = 1; e < ord; ++e) {
                // mu(cur * g) = mu(cur) mu(g) beta(cur, g)
                int bval = beta.value(cur, gens[i]);
                mcur = mcur * gen_values[i] * bval;
                cur = t.mul(cur, gens[i]);
                auto it = next.find(cur);
                if (it == next.end())
                    next[cur] = mcur;
                else if (it->second != mcur)
                    throw Error(ErrorCode::InconsistentExtension,
                                "conflicting values along generator relations");
            }
        }
        values = std::move(next);
    }
    // the words must exactly cover the domain
    std::vector<GroupElement> dom = domain;
    std::sort(dom.begin(), dom.end());
    std::vector<GroupElement> covered;
    covered.reserve(values.size());
    for (const auto& [w, mv] : values) covered.push_back(w);
    if (covered != dom)
        throw Error(ErrorCode::InconsistentExtension,
                    "generators do not generate the stated domain");
    QuadraticForm mu(QuadraticForm::Prevalidated{}, t, dom, std::move(values));
    if (verify && !polarization_matches(mu, beta))
        throw Error(ErrorCode::InconsistentExtension,
                    "extension polarization disagrees with the bicharacter");
    return mu;
}

QuadraticForm extend_form(const Group& t, const std::vector<int>& generator_values,
                          const Bicharacter& beta) {
    std::vector<GroupElement> gens;
    for (int i = 0; i < t.rank(); ++i) gens.push_back(t.generator(i));
    return extend_form_impl(t, t.elements(), gens, generator_values, beta, true);
}

QuadraticForm extend_form_on(const Group& t, const std::vector<GroupElement>& domain,
                             const std::vector<GroupElement>& gens,
                             const std::vector<int>& gen_values, const Bicharacter& beta) {
    return extend_form_impl(t, domain, gens, gen_values, beta, true);
}

Subgroup agreement_subgroup(const QuadraticForm& mu, const QuadraticForm& eta) {
    if (mu.group().orders() != eta.group().orders() || mu.domain() != eta.domain())
        throw Error(ErrorCode::BadInput, "agreement_subgroup: domains differ");
    if (mu == eta) throw Error(ErrorCode::FormsEqual, "forms are equal");
    for (const auto& u : mu.domain())
        for (const auto& v : mu.domain())
            if (mu.pol_value(u, v) != eta.pol_value(u, v))
                throw Error(ErrorCode::DifferentPolarizations, "polarizations differ");
    std::vector<GroupElement> s;
    for (const auto& u : mu.domain())
        if (mu.value(u) == eta.value(u)) s.push_back(u);
    Subgroup sub = Subgroup::from_elements(mu.group(), std::move(s));
    if (2 * sub.order() != static_cast<long>(mu.domain().size()))
        throw Error(ErrorCode::BadInput, "agreement set does not have index 2");
    return sub;
}

SymplecticBasis symplectic_basis_on(const Group& g, const std::vector<GroupElement>& domain,
                                    const BetaFn& beta) {
    TypeInfo info = classify_type_on(g, domain, beta);
    auto rad = radical_of(g, domain, beta);
    std::set<GroupElement> radset(rad.begin(), rad.end());

    SymplecticBasis out;
    std::vector<GroupElement> cur = domain;  // shrinking perp subgroup, sorted
    while (true) {
        // candidates outside the radical, minimal order first, then lex
        GroupElement a, b;
        bool found = false;
        for (int target_order : {2, 4}) {
            for (const auto& cand : cur) {
                if (radset.count(cand) || g.element_order(cand) != target_order) continue;
                // minimal-order partner
                for (int partner_order : {2, 4}) {
                    for (const auto& p : cur) {
                        if (g.element_order(p) != partner_order) continue;
                        if (beta(cand, p) == -1) {
                            a = cand;
                            b = p;
                            found = true;
                            break;
                        }
                    }
                    if (found) break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
        out.pairs.emplace_back(a, b);
        std::vector<GroupElement> next;
        for (const auto& v : cur)
            if (beta(a, v) == 1 && beta(b, v) == 1) next.push_back(v);
        cur = std::move(next);
    }
    if (info.type == TypeInfo::II) {
        // leftover must be {e, f}; adjoin f in the elementary case
        bool z4_shape = false;
        for (const auto& [a, b] : out.pairs)
            if (g.element_order(b) == 4) z4_shape = true;
        if (!z4_shape) out.f_adjoined = *info.f_beta;
    }
    // validation: symplectic values and generation
    std::vector<GroupElement> gens;
    for (const auto& [a, b] : out.pairs) {
        gens.push_back(a);
        gens.push_back(b);
    }
    if (out.f_adjoined) gens.push_back(*out.f_adjoined);
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            int expect = 1;
            for (size_t p = 0; p + 1 < gens.size(); p += 2)
                if ((i == p && j == p + 1) || (i == p + 1 && j == p)) expect = -1;
            if (beta(gens[i], gens[j]) != expect)
                throw Error(ErrorCode::NotTypeIorII, "symplectic basis construction failed");
        }
    Subgroup span(g, gens);
    if (span.order() != static_cast<long>(domain.size()))
        throw Error(ErrorCode::NotTypeIorII, "symplectic family does not generate the domain");
    return out;
}

SymplecticBasis symplectic_basis(const Bicharacter& beta) {
    if (!beta.real_valued())
        throw Error(ErrorCode::BadInput, "symplectic_basis requires a real bicharacter");
    return symplectic_basis_on(beta.group(), beta.group().elements(),
                               [&beta](const GroupElement& u, const GroupElement& v) {
                                   return beta.value(u, v);
                               });
}

Arf arf_from_symplectic_basis(const QuadraticForm& mu) {
    const Group& g = mu.group();
    SymplecticBasis basis = symplectic_basis_on(
        g, mu.domain(),
        [&mu](const GroupElement& u, const GroupElement& v) { return mu.pol_value(u, v); });
    int acc = 1;
    for (const auto& [a, b] : basis.pairs)
        if (mu.value(a) == -1 && mu.value(b) == -1) acc = -acc;
    if (basis.f_adjoined && mu.value(*basis.f_adjoined) == -1) return Arf::undefined;
    // a Z4-shape domain may still have extra radical inside its 2-torsion that
    // is not spanned with a -1 value; the pairs + f cover the group, so the
    // remaining tie case is exactly the adjoined-radical sign above
    return acc == 1 ? Arf::plus : Arf::minus;
}

std::vector<QuadraticForm> enumerate_forms_on(const Group& t,
                                              const std::vector<GroupElement>& domain,
                                              const std::vector<GroupElement>& gens,
                                              const Bicharacter& beta, bool parallel) {
    if (static_cast<long>(domain.size()) > kEnumerationBound)
        throw Error(ErrorCode::DomainTooLarge, "form enumeration domain exceeds the bound");
    const size_t r = gens.size();
    const long total = 1L << r;
    std::vector<QuadraticForm> out(static_cast<size_t>(total));
    std::vector<char> ok(static_cast<size_t>(total), 0);

    auto build = [&](long mask) {
        std::vector<int> vals(r);
        for (size_t i = 0; i < r; ++i) vals[i] = (mask >> i) & 1 ? -1 : 1;
        try {
            out[static_cast<size_t>(mask)] = extend_form_impl(t, domain, gens, vals, beta, true);
            ok[static_cast<size_t>(mask)] = 1;
        } catch (const Error&) {
            ok[static_cast<size_t>(mask)] = 0;
        }
    };

#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long mask = 0; mask < total; ++mask) build(mask);
    } else
#endif
    {
        (void)parallel;
        for (long mask = 0; mask < total; ++mask) build(mask);
    }

    std::vector<QuadraticForm> result;
    std::set<std::map<GroupElement, int>> seen;
    for (long mask = 0; mask < total; ++mask) {
        if (!ok[static_cast<size_t>(mask)]) continue;
        std::map<GroupElement, int> table;
        for (const auto& d : out[static_cast<size_t>(mask)].domain())
            table[d] = out[static_cast<size_t>(mask)].value(d);
        if (seen.insert(table).second) result.push_back(out[static_cast<size_t>(mask)]);
    }
    return result;
}

std::vector<QuadraticForm> enumerate_forms(const Bicharacter& beta) {
    const Group& t = beta.group();
    std::vector<GroupElement> gens;
    for (int i = 0; i < t.rank(); ++i) gens.push_back(t.generator(i));
    return enumerate_forms_on(t, t.elements(), gens, beta, true);
}

std::vector<QuadraticForm> enumerate_forms_serial(const Bicharacter& beta) {
    const Group& t = beta.group();
    std::vector<GroupElement> gens;
    for (int i = 0; i < t.rank(); ++i) gens.push_back(t.generator(i));
    return enumerate_forms_on(t, t.elements(), gens, beta, false);
}

NiceMap::NiceMap(const Group& t, Subgroup k, std::map<GroupElement, int> values)
    : group_(&t), k_(std::move(k)), values_(std::move(values)) {
    if (k_.index() != 2) throw Error(ErrorCode::NotANiceMap, "K must have index 2");
    for (const auto& a : t.elements())
        if (!k_.contains(a)) coset_.push_back(a);
    std::sort(coset_.begin(), coset_.end());
    if (values_.size() != coset_.size())
        throw Error(ErrorCode::NotANiceMap, "value table does not cover T \\ K");
    for (const auto& [g, v] : values_) {
        if (v != 1 && v != -1) throw Error(ErrorCode::NotANiceMap, "values must be ±1");
        if (k_.contains(g)) throw Error(ErrorCode::NotANiceMap, "value table touches K");
    }
    // one family member must be a quadratic form; the rest follows
    mu(coset_.front());
}

int NiceMap::value(const GroupElement& t) const {
    auto it = values_.find(group_->reduce(t));
    if (it == values_.end()) throw Error(ErrorCode::BadInput, "element not in T \\ K");
    return it->second;
}

QuadraticForm NiceMap::mu(const GroupElement& g) const {
    if (k_.contains(g)) throw Error(ErrorCode::BadInput, "reference point must lie in T \\ K");
    std::map<GroupElement, int> table;
    for (const auto& kk : k_.elements()) table[kk] = value(group_->mul(g, kk)) * value(g);
    try {
        return QuadraticForm(*group_, k_.elements(), std::move(table));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotAQuadraticForm)
            throw Error(ErrorCode::NotANiceMap, "difference quotient is not a quadratic form");
        throw;
    }
}

int NiceMap::pol_value(const GroupElement& u, const GroupElement& v) const {
    return mu(coset_.front()).pol_value(u, v);
}

TypeInfo NiceMap::type_info() const { return mu(coset_.front()).type_info(); }

int NiceMap::value_at_f_beta() const {
    TypeInfo info = type_info();
    if (info.type != TypeInfo::II)
        throw Error(ErrorCode::BadInput, "nu(f_beta) needs a type II polarization");
    return mu(coset_.front()).value(*info.f_beta);
}

int NiceMap::value_at_rad_prime() const {
    TypeInfo info = type_info();
    if (!info.rad_prime)
        throw Error(ErrorCode::BadInput, "nu(rad') needs the Z4-shape polarization");
    for (const auto& g : coset_) {
        if (group_->element_order(g) != 2) continue;
        QuadraticForm m = mu(g);
        int v = m.value(info.rad_prime->front());
        for (const auto& r : *info.rad_prime)
            if (m.value(r) != v)
                throw Error(ErrorCode::NotANiceMap, "rad' values disagree within one mu_g");
        return v;
    }
    throw Error(ErrorCode::BadInput, "no order-2 reference point in T \\ K");
}

Arf NiceMap::arf() const {
    std::vector<int> vals;
    vals.reserve(values_.size());
    for (const auto& [g, v] : values_) vals.push_back(v);
    return arf_of_values(vals);
}

bool NiceMap::operator==(const NiceMap& o) const {
    return group_->orders() == o.group_->orders() && k_.elements() == o.k_.elements() &&
           values_ == o.values_;
}

NiceMap NiceMap::negated() const {
    std::map<GroupElement, int> vals;
    for (const auto& [g, v] : values_) vals[g] = -v;
    return NiceMap(*group_, k_, std::move(vals));
}

bool NiceMap::same_class(const NiceMap& o) const { return *this == o || *this == o.negated(); }

bool polarization_matches(const NiceMap& nu, const Bicharacter& beta) {
    if (nu.group().orders() != beta.group().orders()) return false;
    QuadraticForm m = nu.mu(nu.coset().front());
    return polarization_matches(m, beta);
}

std::vector<NiceMap> enumerate_nice_maps(const Group& t, const Subgroup& k,
                                         const Bicharacter& beta) {
    if (t.order() > kEnumerationBound)
        throw Error(ErrorCode::DomainTooLarge, "nice-map enumeration domain exceeds the bound");
    if (k.index() != 2) throw Error(ErrorCode::BadInput, "K must have index 2");
    // nu is determined by nu(g0) and the quadratic form mu_{g0} on K
    std::vector<GroupElement> coset;
    for (const auto& a : t.elements())
        if (!k.contains(a)) coset.push_back(a);
    std::sort(coset.begin(), coset.end());
    const GroupElement g0 = coset.front();

    // enumerate forms on K with the given polarization
    std::vector<GroupElement> kgens;
    {
        Subgroup built(t, {});
        for (const auto& e : k.elements()) {
            if (built.contains(e)) continue;
            kgens.push_back(e);
            std::vector<GroupElement> gg = kgens;
            built = Subgroup(t, gg);
            if (built.order() == k.order()) break;
        }
    }
    auto forms = enumerate_forms_on(t, k.elements(), kgens, beta, false);

    std::vector<NiceMap> out;
    for (int s : {1, -1}) {
        for (const auto& m : forms) {
            std::map<GroupElement, int> vals;
            for (const auto& kk : k.elements()) vals[t.mul(g0, kk)] = s * m.value(kk);
            out.emplace_back(t, k, std::move(vals));
        }
    }
    return out;
}

}  // namespace gradiv
