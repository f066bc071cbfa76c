// Pairs, twisted products, explicit finite congruences, closures,
// pullbacks, and restrictions.
#include <catch_amalgamated.hpp>

#include <idemdim/corpus.hpp>
#include <idemdim/lattice.hpp>
#include <idemdim/parser.hpp>
#include <idemdim/sampling.hpp>

using namespace idemdim;

TEST_CASE("twisted product identities", "[congruence]") {
    Ring r = zmax_ring().with_vars(1, false);
    Sampler sampler;
    for (int i = 0; i < 200; ++i) {
        Pair a = sampler.pair(r), b = sampler.pair(r);
        Pair ab = twisted_product(a, b), ba = twisted_product(b, a);
        CHECK(Poly::equal(ab.lhs, ba.lhs));
        CHECK(Poly::equal(ab.rhs, ba.rhs));

        // (x, 0) * (c, d) = (xc, xd)
        Poly x = sampler.poly(r);
        Pair left(x, Poly::zero(r));
        Pair prod = twisted_product(left, b);
        CHECK(Poly::equal(prod.lhs, poly_mul(x, b.lhs)));
        CHECK(Poly::equal(prod.rhs, poly_mul(x, b.rhs)));

        // (1, 0) is the twisted unit
        Pair unit(Poly::one(r), Poly::zero(r));
        Pair same = twisted_product(unit, a);
        CHECK(Poly::equal(same.lhs, a.lhs));
        CHECK(Poly::equal(same.rhs, a.rhs));
    }
    // twisted square of (x, 1) over B[x]
    Ring br = bool_ring().with_vars(1, false);
    Pair w(parse_poly("x", br), parse_poly("b1", br));
    Pair sq = twisted_power(w, 2);
    CHECK(Poly::equal(sq.lhs, parse_poly("x^2 + b1", br)));
    CHECK(Poly::equal(sq.rhs, parse_poly("x", br)));
}

TEST_CASE("closures on finite carriers", "[congruence]") {
    Ring t3 = finite_ring(require_finite_semiring("corpus/t3.json"));
    CHECK(closure_finite(t3, {}).describe() == "{0 | 1 | a}");
    CHECK(closure_finite(t3, {{t3.table->index_of("1"), t3.table->index_of("a")}}).describe() ==
          "{0 | 1,a}");

    Ring b = finite_ring(require_finite_semiring("corpus/b.json"));
    Congruence all = closure_finite(b, {{b.table->index_of("1"), b.table->index_of("0")}});
    CHECK_FALSE(all.proper());  // identifying 1 with 0 collapses everything
}

TEST_CASE("closure is the least congruence containing its generators", "[congruence]") {
    for (const char* name : {"b", "t3", "l3", "bxb", "n4"}) {
        Ring r = finite_ring(require_finite_semiring(std::string("corpus/") + name + ".json"));
        INFO(name);
        CongruenceLattice lat = enumerate_congruences_finite(r);
        const int n = r.table->size();
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                auto cls = as_finite_explicit(closure_finite(r, {{a, b}})).classes();
                int self = lat.find(cls);
                REQUIRE(self >= 0);  // the closure is itself a congruence of the lattice
                for (std::size_t j = 0; j < lat.nodes.size(); ++j) {
                    const auto& p = lat.nodes[j].partition;
                    if (p[a] == p[b]) CHECK(lat.contained(self, static_cast<int>(j)));
                }
            }
    }
}

TEST_CASE("explicit partitions must be translation-closed", "[congruence]") {
    Ring t3 = finite_ring(require_finite_semiring("corpus/t3.json"));
    // {0,1 | a} splits under multiplication by a
    CHECK_THROWS_AS(finite_explicit(t3, {0, 0, 1}), MalformedTable);
    CHECK_NOTHROW(finite_explicit(t3, {0, 1, 1}));  // {0 | 1,a}
}

TEST_CASE("membership respects pair translation on all lattice nodes", "[congruence]") {
    for (const char* name : {"t3", "l3", "bxb", "n3"}) {
        Ring r = finite_ring(require_finite_semiring(std::string("corpus/") + name + ".json"));
        INFO(name);
        const FiniteSemiring& F = *r.table;
        auto elem = [&](int i) { return Poly::constant(r, Scalar::finite(r.table, i)); };
        for (const auto& node : enumerate_congruences_finite(r).nodes) {
            const Congruence& C = node.congruence;
            for (int a = 0; a < F.size(); ++a)
                for (int b = 0; b < F.size(); ++b) {
                    if (!C.member(elem(a), elem(b))) continue;
                    for (int c = 0; c < F.size(); ++c) {
                        CHECK(C.member(elem(F.plus(a, c)), elem(F.plus(b, c))));
                        CHECK(C.member(elem(F.times(a, c)), elem(F.times(b, c))));
                    }
                    // interval: a <= c <= b pins c to the same class
                    for (int c = 0; c < F.size(); ++c)
                        if (F.leq(a, c) && F.leq(c, b)) {
                            CHECK(C.member(elem(a), elem(c)));
                            CHECK(C.member(elem(b), elem(c)));
                        }
                }
        }
    }
}

TEST_CASE("pairs in a congruence absorb twisted products", "[congruence]") {
    // alpha in C and beta arbitrary imply alpha*beta in C
    Sampler sampler;
    Ring r = bool_ring().with_vars(2, true);
    std::vector<Congruence> congs = {parse_congruence("weight[[1,0]]", r),
                                     parse_congruence("weight[[1,1];[0,1]]", r),
                                     parse_congruence("iqc(2)", r), make_top_collapse(r)};
    for (const Congruence& C : congs) {
        INFO(C.describe());
        int hits = 0;
        for (int i = 0; i < 400; ++i) {
            Pair a = (i % 2) ? sampler.near_pair(r) : sampler.pair(r);
            if (!C.member(a)) continue;
            ++hits;
            Pair b = sampler.pair(r);
            CHECK(C.member(twisted_product(a, b)));
        }
        CHECK(hits > 20);
    }
}

TEST_CASE("evaluation pullback congruences", "[congruence]") {
    Ring r = zmax_ring().with_vars(2, false);
    // total assignment against the trivial congruence of the base:
    // related iff the evaluations agree
    std::map<int, Scalar> at{{0, Scalar::int_max(1)}, {1, Scalar::int_max(0)}};
    Congruence C = eval_pullback(r, at, trivial_congruence(zmax_ring()));
    Sampler sampler;
    for (int i = 0; i < 300; ++i) {
        Pair p = sampler.near_pair(r);
        bool expect = Poly::equal(evaluate_hom(p.lhs, at), evaluate_hom(p.rhs, at));
        CHECK(C.member(p) == expect);
    }
    CHECK(C.member(parse_pair("(x, y + 1)", r)));   // both evaluate to 1
    CHECK_FALSE(C.member(parse_pair("(x, y)", r)));

    // partial assignment against a congruence of the same ring
    Congruence D = eval_pullback(r, {{1, Scalar::int_max(5)}}, trivial_congruence(r));
    CHECK(D.member(parse_pair("(x + y, x + 5)", r)));
    CHECK_FALSE(D.member(parse_pair("(x*y, x)", r)));

    // a scalar inner congruence demands a total assignment
    CHECK_THROWS_AS(eval_pullback(r, {{0, Scalar::int_max(0)}}, trivial_congruence(zmax_ring())),
                    UnsupportedFamily);
}

TEST_CASE("restriction views", "[congruence]") {
    Ring r2 = bool_ring().with_vars(2, true);
    Congruence W = parse_congruence("weight[[1,0];[0,1]]", r2);
    Congruence Rx = restrict_to_subring(W, 1);
    CHECK(Rx.ring().nvars == 1);
    Ring r1 = bool_ring().with_vars(1, true);
    // on x-polynomials the full lex matrix restricts to the single-row rule
    Sampler sampler;
    for (int i = 0; i < 200; ++i) {
        Pair p = sampler.pair(r1);
        Congruence direct = parse_congruence("weight[[1,0]]", r2);
        Congruence Rd = restrict_to_subring(direct, 1);
        CHECK(Rx.member(p) == Rd.member(p));
    }

    // restricting to the base turns trivial/improper into their scalar forms
    Congruence t = restrict_to_base(trivial_congruence(r2));
    CHECK(t.family() == Family::Trivial);
    CHECK(t.ring().nvars == 0);
    Congruence im = restrict_to_base(improper_congruence(r2));
    CHECK(im.family() == Family::Improper);

    // restriction of a lifted congruence agrees with the inner congruence
    // on constants
    Ring zr = zmax_ring().with_vars(1, true);
    Congruence L = parse_congruence("lift(1)", zr);
    Congruence R0 = restrict_to_base(L);
    for (int i = 0; i < 200; ++i) {
        Scalar a = sampler.scalar(zmax_ring()), b = sampler.scalar(zmax_ring());
        Poly pa = Poly::constant(zmax_ring(), a), pb = Poly::constant(zmax_ring(), b);
        bool expect = make_principal(zmax_ring(), Scalar::int_max(1)).member(pa, pb);
        CHECK(R0.member(pa, pb) == expect);
    }
}

TEST_CASE("congruence membership guards ring compatibility", "[congruence]") {
    Ring poly = bool_ring().with_vars(2, false);
    Ring laur = bool_ring().with_vars(2, true);
    Congruence C = parse_congruence("weight[[1,0]]", laur);
    // poly-mode elements embed into the Laurent congruence
    CHECK(C.member(parse_pair("(x + y, x)", poly)));
    // but a Laurent element cannot be queried against a poly congruence
    Congruence D = parse_congruence("weight[[1,0]]", poly);
    CHECK_THROWS_AS(D.member(parse_pair("(x^-1, b1)", laur)), RingMismatch);
    CHECK_THROWS_AS(D.member(parse_pair("(x, 1)", zmax_ring().with_vars(2, false))), RingMismatch);
}
