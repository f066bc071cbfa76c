#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "idemdim/scalar.hpp"

namespace idemdim {

using Exps = std::vector<Int>;

// Graded-lexicographic order on exponent vectors; the deterministic term
// order used for storage and printing.
struct GradedLex {
    bool operator()(const Exps& a, const Exps& b) const {
        Int da = 0, db = 0;
        for (const Int& e : a) da += e;
        for (const Int& e : b) db += e;
        if (da != db) return da < db;
        return a < b;
    }
};

// Canonical (Laurent) polynomial: finite map from exponent vectors to
// nonzero coefficients.  The zero polynomial is the empty map; a scalar
// is the nvars = 0 case.  Polynomials are FORMAL: distinct supports are
// distinct elements even when they induce the same function.
class Poly {
public:
    using Terms = std::map<Exps, Scalar, GradedLex>;

    Poly() = default;
    explicit Poly(Ring r) : ring_(std::move(r)) {}

    static Poly zero(const Ring& r) { return Poly(r); }
    static Poly one(const Ring& r) { return constant(r, Scalar::one(r)); }

    static Poly constant(const Ring& r, const Scalar& c) {
        if (!r.same_base(c.ring())) throw RingMismatch("constant coefficient base");
        Poly p(r);
        if (!c.is_zero()) p.terms_.emplace(Exps(r.nvars, Int(0)), c);
        return p;
    }

    static Poly monomial(const Ring& r, Exps e, const Scalar& c) {
        if (static_cast<int>(e.size()) != r.nvars) throw RingMismatch("exponent arity");
        if (!r.laurent)
            for (const Int& x : e)
                if (x < 0) throw ModeError("negative exponent outside Laurent mode");
        Poly p(r);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    static Poly variable(const Ring& r, int i, Int power = 1) {
        Exps e(r.nvars, Int(0));
        e.at(i) = std::move(power);
        return monomial(r, std::move(e), Scalar::one(r));
    }

    const Ring& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() > 1) return false;
        for (const Int& e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    // The coefficient of the zero exponent vector (the constant term).
    Scalar constant_value() const {
        Exps z(ring_.nvars, Int(0));
        auto it = terms_.find(z);
        return it == terms_.end() ? Scalar::zero(ring_) : it->second;
    }

    Scalar coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar::zero(ring_) : it->second;
    }

    static void require_same(const Poly& f, const Poly& g) {
        if (!(f.ring_ == g.ring_))
            throw RingMismatch(f.ring_.describe() + " vs " + g.ring_.describe());
    }

    static bool equal(const Poly& f, const Poly& g) {
        require_same(f, g);
        if (f.terms_.size() != g.terms_.size()) return false;
        auto it = f.terms_.begin(), jt = g.terms_.begin();
        for (; it != f.terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!Scalar::equal(it->second, jt->second)) return false;
        }
        return true;
    }

    // Deterministic total order (term-by-term from the graded-lex top).
    static std::strong_ordering compare(const Poly& f, const Poly& g) {
        require_same(f, g);
        auto it = f.terms_.rbegin(), jt = g.terms_.rbegin();
        GradedLex lt;
        for (; it != f.terms_.rend() && jt != g.terms_.rend(); ++it, ++jt) {
            if (lt(it->first, jt->first)) return std::strong_ordering::less;
            if (lt(jt->first, it->first)) return std::strong_ordering::greater;
            auto c = Scalar::compare(it->second, jt->second);
            if (c != 0) return c;
        }
        if (it != f.terms_.rend()) return std::strong_ordering::greater;
        if (jt != g.terms_.rend()) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

    std::string str(const std::vector<std::string>& names = {}) const;

    // Internal: insert with coefficient-add on collision, dropping zeros.
    void accumulate(const Exps& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second = scalar_add(it->second, c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    Ring ring_;
    Terms terms_;
};

inline Poly poly_add(const Poly& f, const Poly& g) {
    Poly::require_same(f, g);
    Poly r = f;
    for (const auto& [e, c] : g.terms()) r.accumulate(e, c);
    return r;
}

inline Poly poly_mul(const Poly& f, const Poly& g) {
    Poly::require_same(f, g);
    Poly r(f.ring());
    for (const auto& [e1, c1] : f.terms())
        for (const auto& [e2, c2] : g.terms()) {
            Exps e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.accumulate(e, scalar_mul(c1, c2));
        }
    return r;
}

inline Poly poly_pow(const Poly& f, unsigned n) {
    Poly r = Poly::one(f.ring());
    for (unsigned i = 0; i < n; ++i) r = poly_mul(r, f);
    return r;
}

// f <= g in the natural order (g + f = g).
inline bool natural_leq_poly(const Poly& f, const Poly& g) {
    return Poly::equal(poly_add(g, f), g);
}

inline Scalar scalar_pow(const Scalar& a, const Int& n) {
    switch (a.base()) {
        case Base::IntMax:
            if (a.is_bottom()) return n == 0 ? Scalar::one(a.ring()) : a;
            return Scalar::int_max(a.int_value() * n);
        case Base::RatMax:
            if (a.is_bottom()) return n == 0 ? Scalar::one(a.ring()) : a;
            return Scalar::rat_max(a.rat_value() * Rat(n));
        case Base::LexMono: {
            if (a.is_bottom()) return n == 0 ? Scalar::one(a.ring()) : a;
            std::vector<Int> e(a.mono_exps());
            for (Int& x : e) x *= n;
            Ring r = a.ring();
            if (n < 0) r.lex_full = true;
            return Scalar::lexmono(r, std::move(e));
        }
        case Base::Bool:
            if (n == 0) return Scalar::one(a.ring());
            if (n < 0 && a.is_zero()) throw NegativeExponentAtZero("b0");
            return a;
        case Base::Finite: {
            if (n < 0) return scalar_pow(scalar_inv(a), -n);
            Scalar r = Scalar::one(a.ring());
            for (Int i = 0; i < n; ++i) r = scalar_mul(r, a);
            return r;
        }
    }
    throw TagMismatch("scalar_pow");
}

// Substitutes the assigned variables and canonicalizes.  Unassigned
// variables stay symbolic; a total assignment yields a constant.
// The assignment maps variable index -> scalar of the base.
inline Poly evaluate_hom(const Poly& f, const std::map<int, Scalar>& assignment) {
    const Ring& r = f.ring();
    for (const auto& [i, v] : assignment) {
        if (i < 0 || i >= r.nvars) throw RingMismatch("assignment variable out of range");
        if (!v.ring().same_base(r)) throw RingMismatch("assigned scalar base");
    }
    Poly out(r);
    for (const auto& [e, c] : f.terms()) {
        Scalar coeff = c;
        Exps rest = e;
        bool term_vanishes = false;
        for (const auto& [i, v] : assignment) {
            const Int& k = e[i];
            rest[i] = 0;
            if (k == 0) continue;
            if (v.is_zero()) {
                if (k < 0) throw NegativeExponentAtZero("variable " + std::to_string(i));
                term_vanishes = true;
                continue;
            }
            coeff = scalar_mul(coeff, scalar_pow(v, k));
        }
        if (!term_vanishes) out.accumulate(rest, coeff);
    }
    return out;
}

inline std::vector<std::string> default_var_names(int n) {
    std::vector<std::string> names;
    if (n <= 3) {
        const char* xyz[] = {"x", "y", "z"};
        for (int i = 0; i < n; ++i) names.push_back(xyz[i]);
    } else {
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    return names;
}

inline std::string Poly::str(const std::vector<std::string>& names_in) const {
    if (terms_.empty()) return "-inf";
    std::vector<std::string> names =
        names_in.empty() ? default_var_names(ring_.nvars) : names_in;
    std::string out;
    // highest graded-lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < ring_.nvars; ++i) {
            const Int& e = it->first[i];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e != 1) mono += "^" + e.str();
        }
        const Scalar& c = it->second;
        if (mono.empty())
            out += c.str();
        else if (c.is_one())
            out += mono;
        else
            out += c.str() + "*" + mono;
    }
    return out;
}

}  // namespace idemdim
