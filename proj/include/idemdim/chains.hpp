#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idemdim/lattice.hpp"
#include "idemdim/report.hpp"
#include "idemdim/sampling.hpp"

namespace idemdim {

// Ordered list of prime congruences with strictness witnesses:
// witnesses[i] lies in primes[i+1] \ primes[i].
struct PrimeChain {
    Ring ring;
    std::vector<Congruence> primes;
    std::vector<Pair> witnesses;
    bool kernels_trivial = true;  // annotation, re-verified by sampling

    int length() const { return static_cast<int>(primes.size()) - 1; }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (i) s += "  <  ";
            s += primes[i].describe();
        }
        return s;
    }
};

// A base-semiring prime chain usable as lifting input: congruences over
// the scalar ring, all with trivial kernels, quotient of the last one
// isomorphic to B.
struct BaseChain {
    Ring ring;
    std::vector<Congruence> primes;
    std::vector<Pair> witnesses;  // constant pairs
    int dim() const { return static_cast<int>(primes.size()) - 1; }
};

// The registered trivial-kernel maximal chains of the supported scalar
// carriers.  The lex-monomial chain is the principal-congruence chain
// indexed by archimedean dominance.
inline BaseChain registered_base_chain(const Ring& scalar_in) {
    Ring r = scalar_in.scalar_ring();
    BaseChain bc;
    bc.ring = r;
    auto unit = [&] { return Poly::one(r); };
    switch (r.base) {
        case Base::Bool:
            bc.primes = {trivial_congruence(r)};
            return bc;
        case Base::IntMax: {
            bc.primes = {trivial_congruence(r), make_principal(r, Scalar::int_max(1))};
            bc.witnesses = {Pair(unit(), Poly::constant(r, Scalar::int_max(1)))};
            return bc;
        }
        case Base::RatMax: {
            bc.primes = {trivial_congruence(r), make_principal(r, Scalar::rat_max(1))};
            bc.witnesses = {Pair(unit(), Poly::constant(r, Scalar::rat_max(1)))};
            return bc;
        }
        case Base::LexMono: {
            bc.primes.push_back(trivial_congruence(r));
            for (int d = 1; d <= r.lex_rank; ++d) {
                // generator with archimedean dominance d
                std::vector<Int> e(r.lex_rank, Int(0));
                e[r.lex_rank - d] = 1;
                Scalar gen = Scalar::lexmono(r, std::move(e));
                bc.primes.push_back(make_principal(r, gen));
                bc.witnesses.emplace_back(unit(), Poly::constant(r, gen));
            }
            return bc;
        }
        case Base::Finite: {
            auto rep = finite_domain_report(*r.table);
            if (!rep.isDomain || r.table->size() != 2)
                throw UnsupportedBase(r.table->name +
                                      " is not a domain; lift through a quotient instead");
            bc.primes = {trivial_congruence(r)};
            return bc;
        }
    }
    throw UnsupportedBase("registered_base_chain");
}

namespace detail {

inline Poly embed_coeff(const Poly& f, const Ring& target) {
    Poly out(target);
    for (const auto& [e, c] : f.terms()) {
        Exps full = e;
        full.push_back(Int(0));
        out.accumulate(full, c);
    }
    return out;
}

}  // namespace detail

// Lifted chain: each base prime p gives the leading-term prime of
// A[x] / A(x) with coefficients compared mod p; the final collapse-to-B
// step tops the chain.  Applied once per variable.
inline PrimeChain build_lifted_chain(const Ring& base_scalar, int nvars, bool laurent) {
    BaseChain bc = registered_base_chain(base_scalar);
    Ring prev = bc.ring;
    std::vector<Congruence> primes = bc.primes;
    std::vector<Pair> witnesses = bc.witnesses;
    for (int v = 1; v <= nvars; ++v) {
        Ring ring = base_scalar.with_vars(v, laurent);
        std::vector<Congruence> lifted;
        std::vector<Pair> wit;
        for (std::size_t i = 0; i < primes.size(); ++i)
            lifted.push_back(make_lifted_prime(ring, primes[i]));
        for (const Pair& w : witnesses)
            wit.emplace_back(detail::embed_coeff(w.lhs, ring), detail::embed_coeff(w.rhs, ring));
        lifted.push_back(make_top_collapse(ring));
        wit.emplace_back(Poly::variable(ring, v - 1), Poly::one(ring));
        primes = std::move(lifted);
        witnesses = std::move(wit);
        prev = ring;
    }
    PrimeChain chain;
    chain.ring = prev;
    chain.primes = std::move(primes);
    chain.witnesses = std::move(witnesses);
    return chain;
}

// Weight-matrix chain over B(x1..xn) / B[x1..xn]: row prefixes of the
// full-rank lex matrix, topped by the zero matrix; length n.
inline PrimeChain build_weight_chain(int nvars, bool laurent) {
    Ring ring = bool_ring().with_vars(nvars, laurent);
    PrimeChain chain;
    chain.ring = ring;
    for (int i = 0; i <= nvars; ++i)
        chain.primes.push_back(make_weight_prime(ring, WeightMatrix::lex_prefix(nvars, nvars - i)));
    for (int i = 0; i < nvars; ++i)
        // (x_{n-i}, 1): zero on the first n-i-1 lex rows, nonzero on row n-i
        chain.witnesses.emplace_back(Poly::variable(ring, nvars - i - 1), Poly::one(ring));
    return chain;
}

// Chain for a non-domain finite base: pick a prime p that is part of a
// maximal chain, pass to A/p (isomorphic to B), lift there, and pull the
// chain back along the coefficientwise surjection A(x) ->> B(x).
inline PrimeChain build_pullback_chain(const Ring& base_scalar, int nvars, bool laurent,
                                       int cap = enumeration_cap()) {
    CongruenceLattice lat = enumerate_congruences_finite(base_scalar, cap);
    std::vector<Congruence> primes = finite_primes(lat);
    if (primes.empty()) throw UnsupportedBase("no prime congruence found");
    Congruence p = primes.front();  // deterministic lattice order
    PrimeChain inner = build_lifted_chain(bool_ring(), nvars, laurent);
    Ring ring = base_scalar.with_vars(nvars, laurent);
    PrimeChain chain;
    chain.ring = ring;
    chain.kernels_trivial = p.trivial_kernel_hint().value_or(false);
    for (const Congruence& q : inner.primes)
        chain.primes.push_back(make_quotient_pullback(ring, p, q));
    for (const Pair& w : inner.witnesses) {
        // section of the surjection: coefficient 1 of B maps to 1 of A
        auto lift = [&](const Poly& f) {
            Poly out(ring);
            for (const auto& [e, c] : f.terms())
                if (c.bool_value()) out.accumulate(e, Scalar::one(ring));
            return out;
        };
        chain.witnesses.emplace_back(lift(w.lhs), lift(w.rhs));
    }
    return chain;
}

// Dispatch per the base: weight matrices over B in several variables,
// lifted chains over registered domains, quotient pullback otherwise.
inline PrimeChain build_polynomial_chain(const Ring& base_scalar, int nvars, bool laurent,
                                         int cap = enumeration_cap()) {
    if (nvars < 1) throw UnsupportedQuery("chain needs at least one variable");
    if (base_scalar.base == Base::Bool && nvars >= 2) return build_weight_chain(nvars, laurent);
    if (base_scalar.base == Base::Finite) {
        auto rep = finite_domain_report(*base_scalar.table);
        if (!rep.isDomain || base_scalar.table->size() != 2)
            return build_pullback_chain(base_scalar, nvars, laurent, cap);
    }
    return build_lifted_chain(base_scalar, nvars, laurent);
}

// Krull dimension of a registered base, used as the theorem's reference
// value: enumeration for finite carriers, archimedean classes for the
// semifield families, and the fraction-semifield dimension for the
// nonneg monomial domains.
inline int base_dimension(const Ring& base_scalar, int cap = enumeration_cap()) {
    Ring r = base_scalar.scalar_ring();
    if (r.base == Base::Finite) return dim_finite(r, cap);
    Ring frac = r;
    frac.lex_full = true;
    return semifield_dim(frac);
}

// ---------------------------------------------------------------------------
// Chain verification.

namespace detail {

// Restriction used for the stabilization check: one variable down, so
// the at-most-one-equality statement applies link by link.
inline Congruence stabilization_restriction(const Congruence& c, const Ring& chain_ring) {
    if (chain_ring.nvars == 1) return restrict_to_base(c);
    return restrict_to_subring(c, chain_ring.nvars - 1);
}

// Probe pairs over a ring: exhaustive constants for finite carriers,
// otherwise a deterministic grid plus seeded samples.
inline std::vector<Pair> probe_pairs(const Ring& r, Sampler& sampler, int nsamples) {
    std::vector<Pair> probes;
    if (r.base == Base::Finite && r.nvars == 0) {
        const FiniteSemiring& F = *r.table;
        for (int a = 0; a < F.size(); ++a)
            for (int b = 0; b < F.size(); ++b)
                probes.emplace_back(Poly::constant(r, Scalar::finite(r.table, a)),
                                    Poly::constant(r, Scalar::finite(r.table, b)));
        return probes;
    }
    for (int i = 0; i < nsamples; ++i) probes.push_back(sampler.pair(r));
    for (int i = 0; i < nsamples; ++i) probes.push_back(sampler.near_pair(r));
    return probes;
}

inline bool equal_on_probes(const Congruence& c1, const Congruence& c2,
                            const std::vector<Pair>& probes) {
    for (const Pair& p : probes)
        if (c1.member(p) != c2.member(p)) return false;
    return true;
}

}  // namespace detail

// Checks (a) strictness of every inclusion via its witness, (b) chain
// inclusions and kernel-equality annotations on samples, (c) when all
// kernels are equal: the one-variable-down restrictions stabilize at
// most once.
inline VerificationReport verify_chain(const PrimeChain& chain, std::uint64_t seed = kDefaultSeed,
                                       int nsamples = 200) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = "chain over " + chain.ring.describe();
    Sampler sampler(seed);
    const auto& P = chain.primes;

    if (chain.witnesses.size() + 1 != P.size()) {
        rep.fail("chain has " + std::to_string(P.size()) + " primes but " +
                 std::to_string(chain.witnesses.size()) + " witnesses");
        return rep;
    }

    // (a) strictness
    for (std::size_t i = 0; i + 1 < P.size(); ++i) {
        const Pair& w = chain.witnesses[i];
        if (!P[i + 1].member(w))
            rep.fail("witness " + w.str() + " not in " + P[i + 1].describe());
        else if (P[i].member(w))
            rep.fail("witness " + w.str() + " already in " + P[i].describe());
    }
    // witnesses respect all later links
    for (std::size_t i = 0; i + 1 < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j)
            if (!P[j].member(chain.witnesses[i]))
                rep.fail("witness " + chain.witnesses[i].str() + " escapes " + P[j].describe());

    // (b) sampled inclusion and kernel equality
    for (int s = 0; s < nsamples; ++s) {
        Pair p = (s % 2 == 0) ? sampler.pair(chain.ring) : sampler.near_pair(chain.ring);
        for (std::size_t i = 0; i + 1 < P.size(); ++i)
            if (P[i].member(p) && !P[i + 1].member(p)) {
                rep.fail("inclusion violated by " + p.str() + " between " + P[i].describe() +
                         " and " + P[i + 1].describe());
                break;
            }
        Poly e = sampler.poly(chain.ring);
        bool k0 = P[0].kernel_member(e);
        if (chain.kernels_trivial && k0 && !e.is_zero())
            rep.fail("nonzero kernel element " + e.str() + " in " + P[0].describe());
        for (std::size_t i = 1; i < P.size(); ++i)
            if (P[i].kernel_member(e) != k0) {
                rep.fail("kernel mismatch at " + e.str() + " in " + P[i].describe());
                break;
            }
    }

    // (c) stabilization of the restrictions (equal kernels hold per (b))
    if (P.size() >= 2) {
        Ring sub = chain.ring.nvars == 1
                       ? chain.ring.scalar_ring()
                       : chain.ring.with_vars(chain.ring.nvars - 1, chain.ring.laurent);
        std::vector<Pair> probes = detail::probe_pairs(sub, sampler, nsamples);
        int equalities = 0;
        for (std::size_t i = 0; i + 1 < P.size(); ++i) {
            Congruence r1 = detail::stabilization_restriction(P[i], chain.ring);
            Congruence r2 = detail::stabilization_restriction(P[i + 1], chain.ring);
            if (detail::equal_on_probes(r1, r2, probes)) ++equalities;
        }
        rep.note("restriction equalities: " + std::to_string(equalities));
        if (equalities > 1)
            rep.fail("restrictions stabilize " + std::to_string(equalities) + " times");
    }

    rep.note("length " + std::to_string(chain.length()));
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem-level verification.

namespace detail {

// No implemented-family congruence extends the chain while staying
// prime and strict.  The candidate pool is the registry the chain was
// built from plus the trivial and improper congruences.
inline void extension_check(const PrimeChain& chain, VerificationReport& rep, Sampler& sampler) {
    const Ring& R = chain.ring;
    std::vector<Pair> probes = detail::probe_pairs(R, sampler, 100);
    for (const Pair& w : chain.witnesses) probes.push_back(w);

    std::vector<std::pair<std::string, Congruence>> candidates;
    candidates.emplace_back("trivial", trivial_congruence(R));
    if (R.base == Base::Bool)
        for (int rows = 0; rows <= R.nvars; ++rows)
            candidates.emplace_back("weight prefix " + std::to_string(rows),
                                    make_weight_prime(R, WeightMatrix::lex_prefix(R.nvars, rows)));
    if (R.nvars == 1 && R.base != Base::Finite) {
        BaseChain bc = registered_base_chain(R.scalar_ring());
        for (const Congruence& p : bc.primes)
            candidates.emplace_back("lift of " + p.describe(), make_lifted_prime(R, p));
        candidates.emplace_back("collapse", make_top_collapse(R));
    }

    for (const auto& [name, cand] : candidates) {
        if (name == "trivial") {
            // prime would require a totally ordered quotient; x and 1 are
            // incomparable in any polynomial semiring with a variable
            Poly x = Poly::variable(R, 0), one = Poly::one(R);
            if (!natural_leq_poly(x, one) && !natural_leq_poly(one, x)) {
                rep.note("candidate trivial: not prime (x, 1 incomparable)");
                continue;
            }
        }
        bool duplicate = false;
        for (const Congruence& p : chain.primes)
            if (detail::equal_on_probes(cand, p, probes)) {
                duplicate = true;
                break;
            }
        if (duplicate) {
            rep.note("candidate " + name + ": already in the chain");
            continue;
        }
        rep.fail("candidate " + name + " is not accounted for by the chain");
    }
}

}  // namespace detail

// dim A(x) = dim A[x] = dim A + 1, verified as lower-bound exactness:
// the constructed chain has length exactly dim A + 1 and no
// implemented-family extension of it stays prime and strict.  The
// theorem's upper bound is trusted, not recomputed.
inline VerificationReport verify_dplusone(const Ring& base_scalar, bool laurent,
                                          std::uint64_t seed = kDefaultSeed,
                                          int cap = enumeration_cap()) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = std::string("dplusone ") + base_scalar.scalar_ring().describe() +
                (laurent ? " laurent" : " poly");
    int d = base_dimension(base_scalar, cap);
    rep.note("dim A = " + std::to_string(d));
    if (base_scalar.base == Base::RatMax)
        rep.note("exact-rational substitute for the real tropical semifield");
    PrimeChain chain = build_polynomial_chain(base_scalar, 1, laurent, cap);
    rep.note("chain: " + chain.str());
    for (std::size_t i = 0; i < chain.witnesses.size(); ++i)
        rep.note("witness " + std::to_string(i) + ": " + chain.witnesses[i].str());
    VerificationReport sub = verify_chain(chain, seed);
    rep.merge(sub);
    if (chain.length() != d + 1)
        rep.fail("chain length " + std::to_string(chain.length()) + " != dim A + 1 = " +
                 std::to_string(d + 1));
    else
        rep.note("chain length = dim A + 1 = " + std::to_string(d + 1) +
                 " (upper bound from the theorem, not recomputed)");
    Sampler sampler(seed);
    detail::extension_check(chain, rep, sampler);
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

// dim A = dim Frac(A) for domains, checked on the registered families:
// the chain of restricted principal congruences in A has the fraction
// semifield's archimedean-class dimension.
inline VerificationReport verify_trivkerchain(const Ring& base_scalar,
                                              std::uint64_t seed = kDefaultSeed,
                                              int cap = enumeration_cap()) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = "trivkerchain " + base_scalar.scalar_ring().describe();
    Ring r = base_scalar.scalar_ring();
    Ring frac = r;
    frac.lex_full = true;
    if (r.base == Base::Finite) {
        auto drep = finite_domain_report(*r.table);
        if (!drep.isDomain) {
            rep.fail(r.table->name + " is not a domain");
            return rep;
        }
        int dA = dim_finite(r, cap);
        int dF = semifield_dim(frac);
        rep.note("dim A = " + std::to_string(dA) + ", dim Frac(A) = " + std::to_string(dF));
        if (dA != dF) rep.fail("dimensions differ");
        rep.runtime_ms = sw.elapsed_ms();
        return rep;
    }
    int dF = semifield_dim(frac);
    BaseChain bc = registered_base_chain(r);
    rep.note("dim Frac(A) = " + std::to_string(dF) + ", restricted chain length = " +
             std::to_string(bc.dim()));
    if (bc.dim() != dF) rep.fail("restricted chain length != dim Frac(A)");
    // strictness of the restricted chain inside A itself
    for (std::size_t i = 0; i < bc.witnesses.size(); ++i) {
        const Pair& w = bc.witnesses[i];
        if (!bc.primes[i + 1].member(w) || bc.primes[i].member(w))
            rep.fail("witness " + w.str() + " does not separate level " + std::to_string(i));
    }
    Sampler sampler(seed);
    for (int s = 0; s < 200; ++s) {
        Poly a = Poly::constant(r, sampler.scalar(r));
        Poly b = Poly::constant(r, sampler.scalar(r));
        for (std::size_t i = 0; i + 1 < bc.primes.size(); ++i)
            if (bc.primes[i].member(a, b) && !bc.primes[i + 1].member(a, b))
                rep.fail("chain inclusion violated at " + a.str() + ", " + b.str());
    }
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

// dim F(x1..xn) = dim F + n for the registered semifields, by repeated
// one-variable lifts.
inline VerificationReport verify_laurentdim(const Ring& base_scalar, int nvars,
                                            std::uint64_t seed = kDefaultSeed) {
    Stopwatch sw;
    VerificationReport rep;
    rep.claim = "laurentdim " + base_scalar.scalar_ring().describe() + " n=" +
                std::to_string(nvars);
    Ring r = base_scalar.scalar_ring();
    if (!is_arch_supported(r) || !(r.base == Base::Bool || r.base == Base::IntMax ||
                                   r.base == Base::RatMax || r.base == Base::LexMono)) {
        rep.fail("not a registered semifield");
        return rep;
    }
    int dF = semifield_dim(r.base == Base::LexMono ? lexmono_ring(r.lex_rank) : r);
    PrimeChain chain = build_lifted_chain(r, nvars, /*laurent=*/true);
    rep.note("chain: " + chain.str());
    VerificationReport sub = verify_chain(chain, seed);
    rep.merge(sub);
    if (chain.length() != dF + nvars)
        rep.fail("chain length " + std::to_string(chain.length()) + " != dim F + n = " +
                 std::to_string(dF + nvars));
    else
        rep.note("chain length = dim F + n = " + std::to_string(dF + nvars));
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace idemdim
