// Scalar carriers: arithmetic axioms, the natural order, table loading
// and validation, and the domain characterization.
#include <catch_amalgamated.hpp>

#include <idemdim/corpus.hpp>
#include <idemdim/lattice.hpp>
#include <idemdim/sampling.hpp>

using namespace idemdim;

namespace {

const std::vector<std::string> kCorpus = {"b",  "t3",   "t4",   "t5",   "l3",  "l4",  "l5",
                                          "bxb", "n3",  "n4",   "n5",   "rnd3", "rnd4", "rnd5"};

std::string corpus_path(const std::string& name) { return "corpus/" + name + ".json"; }

std::vector<Ring> sampled_scalar_rings() {
    return {bool_ring(),         zmax_ring(),
            qmax_ring(),         lexmono_ring(2),
            lexmono_ring(2, false),
            finite_ring(require_finite_semiring(corpus_path("t3"))),
            finite_ring(require_finite_semiring(corpus_path("bxb")))};
}

}  // namespace

TEST_CASE("scalar semiring axioms hold on samples", "[scalar]") {
    Sampler sampler;
    for (const Ring& r : sampled_scalar_rings()) {
        INFO(r.describe());
        Scalar z = Scalar::zero(r), u = Scalar::one(r);
        for (int i = 0; i < 300; ++i) {
            Scalar a = sampler.scalar(r), b = sampler.scalar(r), c = sampler.scalar(r);
            CHECK(Scalar::equal(scalar_add(a, a), a));
            CHECK(Scalar::equal(scalar_add(a, b), scalar_add(b, a)));
            CHECK(Scalar::equal(scalar_add(scalar_add(a, b), c), scalar_add(a, scalar_add(b, c))));
            CHECK(Scalar::equal(scalar_mul(a, b), scalar_mul(b, a)));
            CHECK(Scalar::equal(scalar_mul(scalar_mul(a, b), c), scalar_mul(a, scalar_mul(b, c))));
            CHECK(Scalar::equal(scalar_mul(a, scalar_add(b, c)),
                                scalar_add(scalar_mul(a, b), scalar_mul(a, c))));
            CHECK(Scalar::equal(scalar_add(z, a), a));
            CHECK(Scalar::equal(scalar_mul(z, a), z));
            CHECK(Scalar::equal(scalar_mul(u, a), a));
        }
    }
}

TEST_CASE("natural order basics", "[scalar]") {
    CHECK(natural_leq(Scalar::int_max(1), Scalar::int_max(2)));
    CHECK_FALSE(natural_leq(Scalar::int_max(2), Scalar::int_max(1)));
    CHECK(natural_leq(Scalar::zero(zmax_ring()), Scalar::int_max(-100)));
    CHECK(natural_leq(Scalar::rat_max(Rat(1, 3)), Scalar::rat_max(Rat(1, 2))));

    Ring lex = lexmono_ring(2);
    // lexicographic: the first coordinate dominates
    CHECK(natural_leq(Scalar::lexmono(lex, {Int(0), Int(5)}), Scalar::lexmono(lex, {Int(1), Int(0)})));
    CHECK_FALSE(
        natural_leq(Scalar::lexmono(lex, {Int(1), Int(0)}), Scalar::lexmono(lex, {Int(0), Int(5)})));

    auto bxb = require_finite_semiring(corpus_path("bxb"));
    Scalar p = Scalar::finite(bxb, bxb->index_of("01"));
    Scalar q = Scalar::finite(bxb, bxb->index_of("10"));
    CHECK_FALSE(natural_leq(p, q));
    CHECK_FALSE(natural_leq(q, p));  // incomparable: B x B is not totally ordered
}

TEST_CASE("natural order is a partial order on every table", "[scalar]") {
    for (const auto& name : kCorpus) {
        auto F = require_finite_semiring(corpus_path(name));
        INFO(name);
        const int n = F->size();
        for (int a = 0; a < n; ++a) {
            CHECK(F->leq(a, a));
            CHECK(F->leq(F->zero, a));
            for (int b = 0; b < n; ++b) {
                if (F->leq(a, b) && F->leq(b, a)) CHECK(a == b);
                for (int c = 0; c < n; ++c)
                    if (F->leq(a, b) && F->leq(b, c)) CHECK(F->leq(a, c));
            }
        }
    }
}

TEST_CASE("every bundled table validates", "[scalar][corpus]") {
    for (const auto& name : kCorpus) {
        LoadResult res = load_finite_semiring_file(corpus_path(name));
        INFO(name);
        CHECK(res.report.passed);
        REQUIRE(res.semiring != nullptr);
        CHECK(res.semiring->name == name);
    }
}

TEST_CASE("structural parse failures are reported", "[scalar][corpus]") {
    using nlohmann::json;
    CHECK_THROWS_AS(parse_finite_semiring(json{{"add", json::array()}}), MalformedTable);
    CHECK_THROWS_AS(
        parse_finite_semiring(json{{"carrier", {"a", "a"}},
                                   {"add", {{"a", "a"}, {"a", "a"}}},
                                   {"mul", {{"a", "a"}, {"a", "a"}}},
                                   {"zero", "a"},
                                   {"one", "a"}}),
        MalformedTable);
    json nonsquare = {{"carrier", {"0", "1"}},
                      {"add", {{"0", "1"}}},
                      {"mul", {{"0", "0"}, {"0", "1"}}},
                      {"zero", "0"},
                      {"one", "1"}};
    CHECK_THROWS_AS(parse_finite_semiring(nonsquare), MalformedTable);
    json bad_label = {{"carrier", {"0", "1"}},
                      {"add", {{"0", "1"}, {"1", "q"}}},
                      {"mul", {{"0", "0"}, {"0", "1"}}},
                      {"zero", "0"},
                      {"one", "1"}};
    CHECK_THROWS_AS(parse_finite_semiring(bad_label), MalformedTable);
}

TEST_CASE("axiom violations come back as reports with witnesses", "[scalar][corpus]") {
    // T3 with the top element squared to 1 breaks distributivity
    nlohmann::json j;
    std::ifstream in(corpus_path("t3"));
    in >> j;
    j["mul"][2][2] = "1";  // a * a := 1
    LoadResult res = load_finite_semiring(j, "t3bad");
    CHECK_FALSE(res.report.passed);
    CHECK(res.semiring == nullptr);
    REQUIRE_FALSE(res.report.violations.empty());
    bool found = false;
    for (const auto& v : res.report.violations)
        if (v.axiom == "distributive" || v.axiom == "mul-associative") found = true;
    CHECK(found);
    for (const auto& v : res.report.violations) CHECK_FALSE(v.witness.empty());
}

TEST_CASE("validation cap on carrier size", "[scalar][corpus]") {
    nlohmann::json j;
    for (int i = 0; i < kValidationCap + 1; ++i) j["carrier"].push_back("e" + std::to_string(i));
    j["zero"] = "e0";
    j["one"] = "e1";
    CHECK_THROWS_AS(parse_finite_semiring(j), CarrierCap);
}

TEST_CASE("domain report witnesses", "[scalar]") {
    auto b = require_finite_semiring(corpus_path("b"));
    auto rep = finite_domain_report(*b);
    CHECK(rep.isDomain);

    auto t3 = require_finite_semiring(corpus_path("t3"));
    rep = finite_domain_report(*t3);
    CHECK(rep.totallyOrdered);
    CHECK_FALSE(rep.cancellative);
    REQUIRE(rep.cancellativityWitness.size() == 3);
    // the witness really exhibits a*b = a*c with b != c, a != 0
    int a = t3->index_of(rep.cancellativityWitness[0]);
    int x = t3->index_of(rep.cancellativityWitness[1]);
    int y = t3->index_of(rep.cancellativityWitness[2]);
    CHECK(a != t3->zero);
    CHECK(x != y);
    CHECK(t3->times(a, x) == t3->times(a, y));

    auto bxb = require_finite_semiring(corpus_path("bxb"));
    rep = finite_domain_report(*bxb);
    CHECK_FALSE(rep.totallyOrdered);
    REQUIRE(rep.orderWitness.size() == 2);
    int p = bxb->index_of(rep.orderWitness[0]);
    int q = bxb->index_of(rep.orderWitness[1]);
    int s = bxb->plus(p, q);
    CHECK(s != p);
    CHECK(s != q);
}

TEST_CASE("domain iff trivial congruence is prime, across the corpus", "[scalar][corpus]") {
    for (const auto& name : kCorpus) {
        auto F = require_finite_semiring(corpus_path(name));
        if (F->size() > kDefaultEnumerationCap) continue;
        Ring r = finite_ring(F);
        INFO(name);
        bool trivial_prime = is_prime_finite(r, trivial_congruence(r));
        CHECK(trivial_prime == finite_domain_report(*F).isDomain);
    }
}

TEST_CASE("inverses where they exist", "[scalar]") {
    CHECK(Scalar::equal(scalar_inv(Scalar::int_max(3)), Scalar::int_max(-3)));
    CHECK(Scalar::equal(scalar_inv(Scalar::rat_max(Rat(1, 2))), Scalar::rat_max(Rat(-1, 2))));
    Ring lex = lexmono_ring(2);
    Scalar m = Scalar::lexmono(lex, {Int(1), Int(-2)});
    CHECK(Scalar::equal(scalar_mul(m, scalar_inv(m)), Scalar::one(lex)));
    CHECK_THROWS_AS(scalar_inv(Scalar::zero(zmax_ring())), UnsupportedQuery);

    auto t3 = require_finite_semiring(corpus_path("t3"));
    Scalar a = Scalar::finite(t3, t3->index_of("a"));
    CHECK_THROWS_AS(scalar_inv(a), UnsupportedQuery);
    CHECK(Scalar::equal(scalar_inv(Scalar::finite(t3, t3->one)), Scalar::finite(t3, t3->one)));
}

TEST_CASE("scalar construction guards", "[scalar]") {
    Ring lex = lexmono_ring(2);
    CHECK_THROWS_AS(Scalar::lexmono(lex, {Int(1)}), TagMismatch);
    Ring mono = lexmono_ring(2, false);
    CHECK_THROWS_AS(Scalar::lexmono(mono, {Int(-1), Int(0)}), ModeError);
    CHECK_THROWS_AS(scalar_add(Scalar::int_max(0), Scalar::boolean(true)), TagMismatch);
}
