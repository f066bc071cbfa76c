#pragma once

#include <random>
#include <vector>

#include "idemdim/fractions.hpp"

namespace idemdim {

inline constexpr std::uint64_t kDefaultSeed = 20240915;

// Seeded, deterministic element generators used by the verification
// harness and the property suites.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    std::mt19937_64& rng() { return rng_; }

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    Scalar scalar(const Ring& r, bool nonzero = false) {
        for (;;) {
            Scalar s = scalar_once(r);
            if (!nonzero || !s.is_zero()) return s;
        }
    }

    Exps exponents(const Ring& r) {
        Exps e(r.nvars);
        long lo = r.laurent ? -3 : 0;
        for (int i = 0; i < r.nvars; ++i) e[i] = Int(pick(lo, 3));
        return e;
    }

    Poly poly(const Ring& r, bool nonzero = false) {
        for (;;) {
            Poly p(r);
            long nterms = pick(0, 3);
            for (long t = 0; t < nterms; ++t) {
                Scalar c = scalar(r, true);
                p = poly_add(p, Poly::monomial(r, exponents(r), c));
            }
            if (!nonzero || !p.is_zero()) return p;
        }
    }

    Pair pair(const Ring& r) { return Pair(poly(r), poly(r)); }

    // A pair biased towards congruence membership: the second component
    // perturbs the first by one term.
    Pair near_pair(const Ring& r) {
        Poly f = poly(r);
        Poly g = poly_add(f, Poly::monomial(r, exponents(r), scalar(r, true)));
        return Pair(std::move(f), std::move(g));
    }

private:
    Scalar scalar_once(const Ring& r) {
        switch (r.base) {
            case Base::Bool: return Scalar::boolean(pick(0, 1) == 1);
            case Base::IntMax:
                if (pick(0, 7) == 0) return Scalar::zero(r);
                return Scalar::int_max(Int(pick(-6, 6)));
            case Base::RatMax:
                if (pick(0, 7) == 0) return Scalar::zero(r);
                return Scalar::rat_max(Rat(Int(pick(-12, 12)), Int(pick(1, 4))));
            case Base::LexMono: {
                if (pick(0, 7) == 0) return Scalar::zero(r);
                std::vector<Int> e(r.lex_rank);
                long lo = r.lex_full ? -4 : 0;
                for (int i = 0; i < r.lex_rank; ++i) e[i] = Int(pick(lo, 4));
                return Scalar::lexmono(r, std::move(e));
            }
            case Base::Finite:
                return Scalar::finite(r.table, static_cast<int>(pick(0, r.table->size() - 1)));
        }
        throw UnsupportedBase("sampler");
    }

    std::mt19937_64 rng_;
};

}  // namespace idemdim
