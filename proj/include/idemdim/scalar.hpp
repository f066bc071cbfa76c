#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <sstream>
#include <string>
#include <vector>

#include "idemdim/errors.hpp"
#include "idemdim/finite_semiring.hpp"

namespace idemdim {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Base semifield / semiring families.  RatMax is the exact-rational
// realization of the tropical semifield: no floating point anywhere.
// LexMono(k) is the monomial semifield over B with exponent group Z^k
// ordered lexicographically; with nonneg exponents it is the monomial
// domain (not a semifield, but cancellative and totally ordered).
enum class Base { Bool, IntMax, RatMax, Finite, LexMono };

struct Ring {
    Base base = Base::Bool;
    FiniteSemiringPtr table;  // Base::Finite only
    int lex_rank = 0;         // Base::LexMono only
    int nvars = 0;
    bool laurent = false;   // negative variable exponents allowed
    bool lex_full = true;   // Base::LexMono: full exponent group Z^k (false = nonneg domain)

    // The nonneg monomial domain is treated as a subsemiring of the
    // full-group semifield, so lex_full does not separate bases.
    bool same_base(const Ring& o) const {
        return base == o.base && table == o.table && lex_rank == o.lex_rank;
    }
    bool operator==(const Ring& o) const {
        return same_base(o) && nvars == o.nvars && laurent == o.laurent &&
               (base != Base::LexMono || lex_full == o.lex_full);
    }

    Ring scalar_ring() const {
        Ring r = *this;
        r.nvars = 0;
        return r;
    }
    Ring with_vars(int n, bool l) const {
        Ring r = *this;
        r.nvars = n;
        r.laurent = l;
        return r;
    }

    std::string describe() const {
        std::string s;
        switch (base) {
            case Base::Bool: s = "b"; break;
            case Base::IntMax: s = "zmax"; break;
            case Base::RatMax: s = "qmax"; break;
            case Base::Finite: s = table ? table->name : "finite"; break;
            case Base::LexMono: s = (lex_full ? "lex" : "mono") + std::to_string(lex_rank); break;
        }
        if (nvars > 0)
            s += (laurent ? "(" : "[") + std::to_string(nvars) + (laurent ? ")" : "]");
        return s;
    }
};

inline Ring bool_ring() { return Ring{Base::Bool}; }
inline Ring zmax_ring() { return Ring{Base::IntMax}; }
inline Ring qmax_ring() { return Ring{Base::RatMax}; }
inline Ring finite_ring(FiniteSemiringPtr F) { return Ring{Base::Finite, std::move(F)}; }
inline Ring lexmono_ring(int k, bool full_group = true) {
    Ring r{Base::LexMono};
    r.lex_rank = k;
    r.lex_full = full_group;
    return r;
}

// An element of a base semifield or of a table-defined finite semiring.
// Immutable in practice: operations return fresh values.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const Ring& r) {
        Scalar s;
        s.ring_ = r.scalar_ring();
        switch (r.base) {
            case Base::Bool: s.b_ = false; break;
            case Base::IntMax:
            case Base::RatMax:
            case Base::LexMono: s.bottom_ = true; break;
            case Base::Finite: s.idx_ = r.table->zero; break;
        }
        return s;
    }
    static Scalar one(const Ring& r) {
        Scalar s;
        s.ring_ = r.scalar_ring();
        switch (r.base) {
            case Base::Bool: s.b_ = true; break;
            case Base::IntMax: s.z_ = 0; break;
            case Base::RatMax: s.q_ = 0; break;
            case Base::LexMono: s.mono_.assign(r.lex_rank, Int(0)); break;
            case Base::Finite: s.idx_ = r.table->one; break;
        }
        return s;
    }
    static Scalar boolean(bool v) {
        Scalar s;
        s.ring_ = bool_ring();
        s.b_ = v;
        return s;
    }
    static Scalar int_max(Int v) {
        Scalar s;
        s.ring_ = zmax_ring();
        s.z_ = std::move(v);
        return s;
    }
    static Scalar rat_max(Rat v) {
        Scalar s;
        s.ring_ = qmax_ring();
        s.q_ = std::move(v);
        return s;
    }
    static Scalar finite(FiniteSemiringPtr F, int idx) {
        Scalar s;
        s.ring_ = finite_ring(std::move(F));
        s.idx_ = idx;
        return s;
    }
    static Scalar lexmono(const Ring& r, std::vector<Int> exps) {
        if (static_cast<int>(exps.size()) != r.lex_rank)
            throw TagMismatch("lexmono exponent rank");
        if (!r.lex_full)
            for (const Int& e : exps)
                if (e < 0) throw ModeError("negative exponent in nonneg monomial domain");
        Scalar s;
        s.ring_ = r.scalar_ring();
        s.mono_ = std::move(exps);
        return s;
    }

    const Ring& ring() const { return ring_; }
    Base base() const { return ring_.base; }
    bool is_bottom() const { return bottom_; }
    bool bool_value() const { return b_; }
    const Int& int_value() const { return z_; }
    const Rat& rat_value() const { return q_; }
    int finite_index() const { return idx_; }
    const std::vector<Int>& mono_exps() const { return mono_; }

    bool is_zero() const {
        switch (ring_.base) {
            case Base::Bool: return !b_;
            case Base::IntMax:
            case Base::RatMax:
            case Base::LexMono: return bottom_;
            case Base::Finite: return idx_ == ring_.table->zero;
        }
        return false;
    }
    bool is_one() const { return equal(*this, one(ring_)); }

    static void require_same(const Scalar& a, const Scalar& b) {
        if (!a.ring_.same_base(b.ring_))
            throw TagMismatch(a.ring_.describe() + " vs " + b.ring_.describe());
    }

    static bool equal(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        if (a.bottom_ != b.bottom_) return false;
        if (a.bottom_) return true;
        switch (a.ring_.base) {
            case Base::Bool: return a.b_ == b.b_;
            case Base::IntMax: return a.z_ == b.z_;
            case Base::RatMax: return a.q_ == b.q_;
            case Base::LexMono: return a.mono_ == b.mono_;
            case Base::Finite: return a.idx_ == b.idx_;
        }
        return false;
    }

    // Deterministic total order for canonical printing and map keys.
    // Not the natural semiring order.
    static std::strong_ordering compare(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        if (a.bottom_ != b.bottom_) return a.bottom_ ? std::strong_ordering::less
                                                     : std::strong_ordering::greater;
        if (a.bottom_) return std::strong_ordering::equal;
        switch (a.ring_.base) {
            case Base::Bool: return a.b_ <=> b.b_;
            case Base::IntMax:
                return a.z_ < b.z_   ? std::strong_ordering::less
                       : a.z_ > b.z_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
            case Base::RatMax:
                return a.q_ < b.q_   ? std::strong_ordering::less
                       : a.q_ > b.q_ ? std::strong_ordering::greater
                                     : std::strong_ordering::equal;
            case Base::LexMono:
                for (int i = 0; i < a.ring_.lex_rank; ++i) {
                    if (a.mono_[i] < b.mono_[i]) return std::strong_ordering::less;
                    if (a.mono_[i] > b.mono_[i]) return std::strong_ordering::greater;
                }
                return std::strong_ordering::equal;
            case Base::Finite: return a.idx_ <=> b.idx_;
        }
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (ring_.base == Base::Finite) return ring_.table->label(idx_);
        if (bottom_) return "-inf";
        switch (ring_.base) {
            case Base::Bool: return b_ ? "b1" : "b0";
            case Base::IntMax: return z_.str();
            case Base::RatMax: {
                std::ostringstream os;
                os << q_;
                return os.str();
            }
            case Base::LexMono: {
                std::string s = "m[";
                for (int i = 0; i < ring_.lex_rank; ++i) {
                    if (i) s += ",";
                    s += mono_[i].str();
                }
                return s + "]";
            }
            default: return "?";
        }
    }

private:
    Ring ring_ = bool_ring();
    bool bottom_ = false;
    bool b_ = false;
    Int z_;
    Rat q_;
    int idx_ = 0;
    std::vector<Int> mono_;
};

// Idempotent addition: max for IntMax/RatMax, lex-max for LexMono,
// logical or for Bool, table lookup for FiniteElem.
inline Scalar scalar_add(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    switch (a.base()) {
        case Base::Bool: return Scalar::boolean(a.bool_value() || b.bool_value());
        case Base::Finite:
            return Scalar::finite(a.ring().table,
                                  a.ring().table->plus(a.finite_index(), b.finite_index()));
        default: break;
    }
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
    return Scalar::compare(a, b) < 0 ? b : a;
}

inline Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    switch (a.base()) {
        case Base::Bool: return Scalar::boolean(a.bool_value() && b.bool_value());
        case Base::Finite:
            return Scalar::finite(a.ring().table,
                                  a.ring().table->times(a.finite_index(), b.finite_index()));
        case Base::IntMax:
            if (a.is_bottom() || b.is_bottom()) return Scalar::zero(a.ring());
            return Scalar::int_max(a.int_value() + b.int_value());
        case Base::RatMax:
            if (a.is_bottom() || b.is_bottom()) return Scalar::zero(a.ring());
            return Scalar::rat_max(a.rat_value() + b.rat_value());
        case Base::LexMono: {
            if (a.is_bottom() || b.is_bottom()) return Scalar::zero(a.ring());
            std::vector<Int> e(a.mono_exps());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.mono_exps()[i];
            Ring r = a.ring();
            r.lex_full = true;  // products stay representable either way
            Scalar s = Scalar::lexmono(r, std::move(e));
            return s;
        }
    }
    throw TagMismatch("scalar_mul");
}

// a <= b in the natural order (b + a = b).
inline bool natural_leq(const Scalar& a, const Scalar& b) {
    return Scalar::equal(scalar_add(b, a), b);
}

// Multiplicative inverse; semifield bases only (and nonzero input).
inline Scalar scalar_inv(const Scalar& a) {
    if (a.is_zero()) throw UnsupportedQuery("inverse of zero");
    switch (a.base()) {
        case Base::Bool: return a;
        case Base::IntMax: return Scalar::int_max(-a.int_value());
        case Base::RatMax: return Scalar::rat_max(-a.rat_value());
        case Base::LexMono: {
            std::vector<Int> e(a.mono_exps());
            for (Int& x : e) x = -x;
            Ring r = a.ring();
            r.lex_full = true;
            return Scalar::lexmono(r, std::move(e));
        }
        case Base::Finite: {
            const auto& F = *a.ring().table;
            for (int i = 0; i < F.size(); ++i)
                if (F.times(a.finite_index(), i) == F.one)
                    return Scalar::finite(a.ring().table, i);
            throw UnsupportedQuery("element '" + a.str() + "' has no inverse");
        }
    }
    throw UnsupportedQuery("scalar_inv");
}

// b / a, where defined.
inline Scalar scalar_div(const Scalar& b, const Scalar& a) {
    return scalar_mul(b, scalar_inv(a));
}

}  // namespace idemdim
