#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "idemdim/poly.hpp"

namespace idemdim {

// The atom of congruence reasoning: an ordered pair of elements of one
// semiring.  Stored ordered for reproducible printing; membership
// treats pairs as unordered (all families are symmetric predicates).
struct Pair {
    Poly lhs, rhs;

    Pair(Poly l, Poly r) : lhs(std::move(l)), rhs(std::move(r)) {
        Poly::require_same(lhs, rhs);
    }
    const Ring& ring() const { return lhs.ring(); }
    std::string str() const { return "(" + lhs.str() + ", " + rhs.str() + ")"; }
};

// (a1*b1 + a2*b2, a1*b2 + a2*b1); the pair analogue of (a-b)(c-d).
inline Pair twisted_product(const Pair& a, const Pair& b) {
    return Pair(poly_add(poly_mul(a.lhs, b.lhs), poly_mul(a.rhs, b.rhs)),
                poly_add(poly_mul(a.lhs, b.rhs), poly_mul(a.rhs, b.lhs)));
}

inline Pair twisted_power(const Pair& a, unsigned n) {
    Pair r(Poly::one(a.ring()), Poly::zero(a.ring()));
    for (unsigned i = 0; i < n; ++i) r = twisted_product(r, a);
    return r;
}

enum class Family {
    Trivial,
    Improper,
    FiniteExplicit,
    WeightPrime,
    LiftedPrime,
    TopCollapse,
    EvalPullback,
    QuotientPullback,
    Principal,
    FracExtension,
    IntersectQC,
    Restriction,
};

class CongruenceNode {
public:
    virtual ~CongruenceNode() = default;
    virtual Family family() const = 0;
    virtual const Ring& ring() const = 0;
    virtual bool member(const Poly& a, const Poly& b) const = 0;
    virtual std::string describe() const = 0;
    // Known structural facts, when the family guarantees them.
    virtual std::optional<bool> prime_hint() const { return std::nullopt; }
    virtual std::optional<bool> trivial_kernel_hint() const { return std::nullopt; }
    virtual bool proper() const { return true; }
};

// Value wrapper; immutable and freely shareable.
class Congruence {
public:
    Congruence() = default;
    explicit Congruence(std::shared_ptr<const CongruenceNode> n) : node_(std::move(n)) {}

    const CongruenceNode& node() const { return *node_; }
    bool valid() const { return node_ != nullptr; }
    Family family() const { return node_->family(); }
    const Ring& ring() const { return node_->ring(); }
    std::string describe() const { return node_->describe(); }
    std::optional<bool> prime_hint() const { return node_->prime_hint(); }
    std::optional<bool> trivial_kernel_hint() const { return node_->trivial_kernel_hint(); }
    bool proper() const { return node_->proper(); }

    bool member(const Poly& a, const Poly& b) const {
        // A polynomial-mode element may be queried against a Laurent-mode
        // congruence of the same base (the subsemiring embedding), not
        // vice versa.
        auto fits = [&](const Ring& r) {
            return r.same_base(ring()) && r.nvars == ring().nvars &&
                   (r.laurent == ring().laurent || ring().laurent);
        };
        if (!fits(a.ring()) || !fits(b.ring()))
            throw RingMismatch("pair ring " + a.ring().describe() + " vs congruence ring " +
                               ring().describe());
        return node_->member(a, b);
    }
    bool member(const Pair& p) const { return member(p.lhs, p.rhs); }
    bool kernel_member(const Poly& e) const { return member(e, Poly::zero(ring())); }

private:
    std::shared_ptr<const CongruenceNode> node_;
};

namespace detail {

class TrivialNode final : public CongruenceNode {
public:
    explicit TrivialNode(Ring r) : ring_(std::move(r)) {}
    Family family() const override { return Family::Trivial; }
    const Ring& ring() const override { return ring_; }
    bool member(const Poly& a, const Poly& b) const override { return Poly::equal(a, b); }
    std::string describe() const override { return "trivial"; }
    std::optional<bool> trivial_kernel_hint() const override { return true; }

private:
    Ring ring_;
};

class ImproperNode final : public CongruenceNode {
public:
    explicit ImproperNode(Ring r) : ring_(std::move(r)) {}
    Family family() const override { return Family::Improper; }
    const Ring& ring() const override { return ring_; }
    bool member(const Poly&, const Poly&) const override { return true; }
    std::string describe() const override { return "improper"; }
    std::optional<bool> prime_hint() const override { return false; }  // not proper
    std::optional<bool> trivial_kernel_hint() const override { return false; }
    bool proper() const override { return false; }

private:
    Ring ring_;
};

}  // namespace detail

inline Congruence trivial_congruence(Ring r) {
    return Congruence(std::make_shared<detail::TrivialNode>(std::move(r)));
}
inline Congruence improper_congruence(Ring r) {
    return Congruence(std::make_shared<detail::ImproperNode>(std::move(r)));
}

// ---------------------------------------------------------------------------
// Extensional congruences on finite carriers.

namespace detail {

// Canonical form: classes numbered by first occurrence in carrier order.
inline std::vector<int> canonical_partition(std::vector<int> cls) {
    std::map<int, int> renum;
    for (int& c : cls) {
        auto [it, fresh] = renum.emplace(c, static_cast<int>(renum.size()));
        c = it->second;
    }
    return cls;
}

class FiniteExplicitNode final : public CongruenceNode {
public:
    FiniteExplicitNode(Ring r, std::vector<int> cls)
        : ring_(std::move(r)), class_of_(canonical_partition(std::move(cls))) {
        if (ring_.base != Base::Finite || ring_.nvars != 0)
            throw UnsupportedFamily("finite explicit congruence needs a finite scalar ring");
        const FiniteSemiring& F = *ring_.table;
        if (static_cast<int>(class_of_.size()) != F.size())
            throw MalformedTable("partition size");
        nclasses_ = 0;
        for (int c : class_of_) nclasses_ = std::max(nclasses_, c + 1);
        // Closure check: stability under a -> a+c and a -> a*c.
        for (int a = 0; a < F.size(); ++a)
            for (int b = 0; b < F.size(); ++b) {
                if (class_of_[a] != class_of_[b]) continue;
                for (int c = 0; c < F.size(); ++c) {
                    if (class_of_[F.plus(a, c)] != class_of_[F.plus(b, c)] ||
                        class_of_[F.times(a, c)] != class_of_[F.times(b, c)])
                        throw MalformedTable("partition not closed under translations");
                }
            }
    }

    Family family() const override { return Family::FiniteExplicit; }
    const Ring& ring() const override { return ring_; }

    bool member(const Poly& a, const Poly& b) const override {
        return class_of_[index(a)] == class_of_[index(b)];
    }

    std::string describe() const override {
        const FiniteSemiring& F = *ring_.table;
        std::vector<std::string> classes(nclasses_);
        for (int i = 0; i < F.size(); ++i) {
            if (!classes[class_of_[i]].empty()) classes[class_of_[i]] += ",";
            classes[class_of_[i]] += F.label(i);
        }
        std::string s = "{";
        for (int c = 0; c < nclasses_; ++c) {
            if (c) s += " | ";
            s += classes[c];
        }
        return s + "}";
    }

    std::optional<bool> trivial_kernel_hint() const override {
        const FiniteSemiring& F = *ring_.table;
        for (int i = 0; i < F.size(); ++i)
            if (i != F.zero && class_of_[i] == class_of_[F.zero]) return false;
        return true;
    }
    bool proper() const override { return nclasses_ > 1; }

    const std::vector<int>& classes() const { return class_of_; }
    int nclasses() const { return nclasses_; }

    int index(const Poly& a) const {
        if (!a.is_constant()) throw RingMismatch("finite congruence expects carrier elements");
        return a.constant_value().finite_index();
    }

private:
    Ring ring_;
    std::vector<int> class_of_;
    int nclasses_ = 0;
};

}  // namespace detail

inline Congruence finite_explicit(Ring r, std::vector<int> class_of) {
    return Congruence(std::make_shared<detail::FiniteExplicitNode>(std::move(r), std::move(class_of)));
}

inline const detail::FiniteExplicitNode& as_finite_explicit(const Congruence& c) {
    if (c.family() != Family::FiniteExplicit) throw UnsupportedQuery("not a finite explicit congruence");
    return static_cast<const detail::FiniteExplicitNode&>(c.node());
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        // deterministic: smaller root wins
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace detail

// Least congruence on a finite carrier containing the generator pairs:
// union-find merged to fixpoint under symmetry/transitivity and the
// translations a -> a+c, a -> a*c.  Terminates by finiteness.
inline Congruence closure_finite(const Ring& r, const std::vector<std::pair<int, int>>& generators,
                                 int cap = kDefaultEnumerationCap) {
    if (r.base != Base::Finite || r.nvars != 0)
        throw UnsupportedFamily("closure_finite needs a finite scalar ring");
    const FiniteSemiring& F = *r.table;
    if (F.size() > cap)
        throw CarrierCap(F.name + " has " + std::to_string(F.size()) + " elements, cap " +
                         std::to_string(cap));
    detail::UnionFind uf(F.size());
    for (auto [a, b] : generators) uf.unite(a, b);
    bool dirty = true;
    while (dirty) {
        dirty = false;
        for (int a = 0; a < F.size(); ++a)
            for (int b = a + 1; b < F.size(); ++b) {
                if (uf.find(a) != uf.find(b)) continue;
                for (int c = 0; c < F.size(); ++c) {
                    dirty |= uf.unite(F.plus(a, c), F.plus(b, c));
                    dirty |= uf.unite(F.times(a, c), F.times(b, c));
                }
            }
    }
    std::vector<int> cls(F.size());
    for (int i = 0; i < F.size(); ++i) cls[i] = uf.find(i);
    return finite_explicit(r, std::move(cls));
}

inline Congruence closure_finite_pairs(const Ring& r, const std::vector<Pair>& generators,
                                       int cap = kDefaultEnumerationCap) {
    std::vector<std::pair<int, int>> gens;
    for (const Pair& p : generators) {
        if (!(p.ring() == r)) throw RingMismatch("generator ring");
        gens.emplace_back(p.lhs.constant_value().finite_index(),
                          p.rhs.constant_value().finite_index());
    }
    return closure_finite(r, gens, cap);
}

// ---------------------------------------------------------------------------
// Evaluation pullback and restriction views.

namespace detail {

class EvalPullbackNode final : public CongruenceNode {
public:
    EvalPullbackNode(Ring r, std::map<int, Scalar> assignment, Congruence inner)
        : ring_(std::move(r)), assignment_(std::move(assignment)), inner_(std::move(inner)) {
        if (inner_.ring().nvars == 0) {
            // inner lives on the coefficient semiring; assignment must be total
            if (static_cast<int>(assignment_.size()) != ring_.nvars)
                throw UnsupportedFamily("scalar inner congruence needs a total assignment");
            if (!inner_.ring().same_base(ring_))
                throw RingMismatch("inner congruence base");
        } else if (!(inner_.ring() == ring_)) {
            throw RingMismatch("inner congruence ring");
        }
    }

    Family family() const override { return Family::EvalPullback; }
    const Ring& ring() const override { return ring_; }

    bool member(const Poly& a, const Poly& b) const override {
        Poly ea = evaluate_hom(a, assignment_);
        Poly eb = evaluate_hom(b, assignment_);
        if (inner_.ring().nvars == 0)
            return inner_.member(Poly::constant(inner_.ring(), ea.constant_value()),
                                 Poly::constant(inner_.ring(), eb.constant_value()));
        return inner_.member(ea, eb);
    }

    std::string describe() const override {
        std::string s = "evalpull(";
        auto names = default_var_names(ring_.nvars);
        bool first = true;
        for (const auto& [i, v] : assignment_) {
            if (!first) s += ",";
            first = false;
            s += names[i] + "=" + v.str();
        }
        return s + "; " + inner_.describe() + ")";
    }

    const Congruence& inner() const { return inner_; }

private:
    Ring ring_;
    std::map<int, Scalar> assignment_;
    Congruence inner_;
};

// View of a polynomial-ring congruence on its coefficient semiring:
// member((a,b)) = member(C, (a,b)) with a, b embedded as constants.
class RestrictionNode final : public CongruenceNode {
public:
    // keep_vars < inner nvars: restriction to the subring generated by the
    // first keep_vars variables (0 = the coefficient semiring itself).
    RestrictionNode(Congruence inner, int keep_vars)
        : inner_(std::move(inner)), keep_(keep_vars) {
        if (keep_ < 0 || keep_ > inner_.ring().nvars)
            throw UnsupportedQuery("restriction variable count");
        ring_ = inner_.ring().with_vars(keep_, inner_.ring().laurent);
    }

    Family family() const override { return Family::Restriction; }
    const Ring& ring() const override { return ring_; }

    bool member(const Poly& a, const Poly& b) const override {
        return inner_.member(embed(a), embed(b));
    }

    std::string describe() const override {
        return "restrict(" + inner_.describe() + ", " + std::to_string(keep_) + " vars)";
    }
    std::optional<bool> trivial_kernel_hint() const override {
        return inner_.trivial_kernel_hint();
    }

    const Congruence& inner() const { return inner_; }

private:
    Poly embed(const Poly& a) const {
        Poly out(inner_.ring());
        for (const auto& [e, c] : a.terms()) {
            Exps full(inner_.ring().nvars, Int(0));
            for (int i = 0; i < keep_; ++i) full[i] = e[i];
            out.accumulate(full, c);
        }
        return out;
    }

    Congruence inner_;
    Ring ring_;
    int keep_;
};

}  // namespace detail

inline Congruence eval_pullback(Ring r, std::map<int, Scalar> assignment, Congruence inner) {
    return Congruence(std::make_shared<detail::EvalPullbackNode>(std::move(r), std::move(assignment),
                                                                std::move(inner)));
}

// Restriction of a congruence over A[x..] / A(x..) to the coefficient
// semiring A (constants).
inline Congruence restrict_to_base(const Congruence& c) {
    switch (c.family()) {
        case Family::Trivial: return trivial_congruence(c.ring().scalar_ring());
        case Family::Improper: return improper_congruence(c.ring().scalar_ring());
        default:
            return Congruence(std::make_shared<detail::RestrictionNode>(c, 0));
    }
}

inline Congruence restrict_to_subring(const Congruence& c, int keep_vars) {
    return Congruence(std::make_shared<detail::RestrictionNode>(c, keep_vars));
}

}  // namespace idemdim
