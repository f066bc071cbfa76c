#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "idemdim/prime_families.hpp"

namespace idemdim {

// Checks that a scalar carrier is cancellative, so its semifield of
// fractions exists.  Registered infinite families are cancellative by
// construction; finite carriers are checked exhaustively.
inline void require_cancellative(const Ring& r) {
    switch (r.base) {
        case Base::Bool:
        case Base::IntMax:
        case Base::RatMax:
        case Base::LexMono: return;
        case Base::Finite: {
            auto rep = finite_domain_report(*r.table);
            if (!rep.cancellative) throw NotCancellative(r.table->name);
            return;
        }
    }
}

// num / den over a cancellative carrier, den != 0.  Stored unreduced;
// equality is always cross-multiplication.
struct Fraction {
    Scalar num, den;

    Fraction(Scalar n, Scalar d) : num(std::move(n)), den(std::move(d)) {
        Scalar::require_same(num, den);
        require_cancellative(num.ring());
        if (den.is_zero()) throw UnsupportedQuery("zero denominator");
    }

    static Fraction of(const Scalar& s) { return Fraction(s, Scalar::one(s.ring())); }

    const Ring& ring() const { return num.ring(); }
    bool is_zero() const { return num.is_zero(); }
    std::string str() const { return num.str() + " / " + den.str(); }
};

inline bool frac_equal(const Fraction& a, const Fraction& b) {
    return Scalar::equal(scalar_mul(a.num, b.den), scalar_mul(b.num, a.den));
}

inline Fraction frac_add(const Fraction& a, const Fraction& b) {
    return Fraction(scalar_add(scalar_mul(a.num, b.den), scalar_mul(b.num, a.den)),
                    scalar_mul(a.den, b.den));
}

inline Fraction frac_mul(const Fraction& a, const Fraction& b) {
    return Fraction(scalar_mul(a.num, b.num), scalar_mul(a.den, b.den));
}

struct FracPair {
    Fraction lhs, rhs;
};

inline FracPair frac_twisted_product(const FracPair& a, const FracPair& b) {
    return {frac_add(frac_mul(a.lhs, b.lhs), frac_mul(a.rhs, b.rhs)),
            frac_add(frac_mul(a.lhs, b.rhs), frac_mul(a.rhs, b.lhs))};
}

// ---------------------------------------------------------------------------
// Archimedean classes for the registered semifield families.

inline bool is_arch_supported(const Ring& r) {
    if (r.nvars != 0) return false;
    switch (r.base) {
        case Base::Bool:
        case Base::IntMax:
        case Base::RatMax:
        case Base::LexMono: return true;
        case Base::Finite: return finite_domain_report(*r.table).isDomain;
    }
    return false;
}

// Dominance level of the archimedean class of a nonzero element:
// 0 for the class of the multiplicative identity, and for the lex
// families k - i where i is the position of the first nonzero exponent.
// Larger = harder to bound by powers of smaller-level elements.
inline int arch_dominance(const Scalar& s) {
    if (s.is_zero()) throw UnsupportedQuery("archimedean class of zero");
    switch (s.base()) {
        case Base::Bool: return 0;
        case Base::IntMax: return s.int_value() == 0 ? 0 : 1;
        case Base::RatMax: return s.rat_value() == 0 ? 0 : 1;
        case Base::LexMono: {
            const auto& e = s.mono_exps();
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) return static_cast<int>(e.size() - i);
            return 0;
        }
        case Base::Finite: {
            if (!is_arch_supported(s.ring())) throw UnsupportedFamily(s.ring().describe());
            return s.is_one() ? 0 : 1;  // a finite domain is B, so never reached for nonzero != 1
        }
    }
    throw UnsupportedFamily("arch_dominance");
}

// Number of nontrivial archimedean classes = dim of the semifield.
inline int semifield_dim(const Ring& r) {
    if (!is_arch_supported(r)) throw UnsupportedFamily(r.describe());
    switch (r.base) {
        case Base::Bool: return 0;
        case Base::IntMax:
        case Base::RatMax: return 1;
        case Base::LexMono: return r.lex_rank;
        case Base::Finite: return 0;  // the only finite domain is B
    }
    return 0;
}

// (a,b) in <(1,x)> iff a = b = 0, or both nonzero and the archimedean
// class of b/a is not strictly dominant over that of x.
inline bool principal_member(const Scalar& x, const Scalar& a, const Scalar& b) {
    if (x.is_zero()) throw UnsupportedQuery("principal congruence needs a nonzero generator");
    if (!is_arch_supported(x.ring())) throw UnsupportedFamily(x.ring().describe());
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return arch_dominance(scalar_div(b, a)) <= arch_dominance(x);
}

namespace detail {

class PrincipalNode final : public CongruenceNode {
public:
    PrincipalNode(Ring r, Scalar gen) : ring_(std::move(r)), gen_(std::move(gen)) {
        if (ring_.nvars != 0 || !gen_.ring().same_base(ring_))
            throw UnsupportedFamily("principal congruences live on a semifield carrier");
        if (!is_arch_supported(ring_)) throw UnsupportedFamily(ring_.describe());
        if (gen_.is_zero()) throw UnsupportedQuery("principal generator must be nonzero");
    }

    Family family() const override { return Family::Principal; }
    const Ring& ring() const override { return ring_; }
    bool member(const Poly& a, const Poly& b) const override {
        return principal_member(gen_, a.constant_value(), b.constant_value());
    }
    std::string describe() const override { return "principal(" + gen_.str() + ")"; }
    std::optional<bool> prime_hint() const override { return true; }
    std::optional<bool> trivial_kernel_hint() const override { return true; }

    const Scalar& generator() const { return gen_; }

private:
    Ring ring_;
    Scalar gen_;
};

}  // namespace detail

inline Congruence make_principal(const Ring& r, const Scalar& gen) {
    return Congruence(std::make_shared<detail::PrincipalNode>(r, gen));
}

// ---------------------------------------------------------------------------
// Congruence extension across the semifield of fractions.

// Extension of a QC trivial-kernel congruence C of a cancellative R to
// Frac(R): (r1/s1, r2/s2) related iff (r1 s2, r2 s1) in C.  Denominator
// clearing realizes the "exists s with (sa, sb) in C" test exactly for
// the implemented families.
class FracExtension {
public:
    explicit FracExtension(Congruence inner) : inner_(std::move(inner)) {
        require_cancellative(inner_.ring());
        if (inner_.ring().nvars != 0)
            throw UnsupportedFamily("fraction extension needs a scalar carrier");
        if (inner_.trivial_kernel_hint() != std::optional<bool>(true))
            throw NontrivialKernel("extension of " + inner_.describe() + " would be improper");
    }

    const Congruence& inner() const { return inner_; }
    const Ring& carrier() const { return inner_.ring(); }

    bool member(const Fraction& a, const Fraction& b) const {
        Scalar l = scalar_mul(a.num, b.den);
        Scalar r = scalar_mul(b.num, a.den);
        Ring sr = inner_.ring();
        return inner_.member(Poly::constant(sr, normalize(l, sr)), Poly::constant(sr, normalize(r, sr)));
    }

    bool member(const FracPair& p) const { return member(p.lhs, p.rhs); }

    // Restriction back to R: membership on the canonical images a/1.
    bool restricted_member(const Scalar& a, const Scalar& b) const {
        return member(Fraction::of(a), Fraction::of(b));
    }

    std::string describe() const { return "fracext(" + inner_.describe() + ")"; }

private:
    static Scalar normalize(const Scalar& s, const Ring& target) {
        if (target.base == Base::LexMono && !target.lex_full && !s.is_zero()) {
            for (const Int& e : s.mono_exps())
                if (e < 0) return s;  // outside the nonneg domain; inner ring check embeds
            return Scalar::lexmono(target, s.mono_exps());
        }
        return s;
    }

    Congruence inner_;
};

inline bool extend_member(const Congruence& C, const Fraction& a, const Fraction& b) {
    return FracExtension(C).member(a, b);
}

}  // namespace idemdim
