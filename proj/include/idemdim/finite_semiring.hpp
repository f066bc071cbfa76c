#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "idemdim/errors.hpp"

namespace idemdim {

inline constexpr int kValidationCap = 16;  // hard limit for table validation
inline constexpr int kDefaultEnumerationCap = 6;

// One axiom violation with a witness (element labels involved).
struct AxiomViolation {
    std::string axiom;
    std::vector<std::string> witness;
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;
};

// A table-defined commutative semiring with idempotent addition.
// Carrier order is file order and is used for deterministic output.
class FiniteSemiring {
public:
    std::string name;
    std::vector<std::string> carrier;
    std::vector<std::vector<int>> add;  // add[i][j] = index of carrier[i] + carrier[j]
    std::vector<std::vector<int>> mul;
    int zero = -1;
    int one = -1;

    int size() const { return static_cast<int>(carrier.size()); }

    int plus(int a, int b) const { return add[a][b]; }
    int times(int a, int b) const { return mul[a][b]; }

    // Natural order: a <= b iff a + b = b.
    bool leq(int a, int b) const { return add[b][a] == b; }

    const std::string& label(int i) const { return carrier[i]; }

    int index_of(const std::string& lbl) const {
        auto it = std::find(carrier.begin(), carrier.end(), lbl);
        if (it == carrier.end()) throw MalformedTable("unknown label '" + lbl + "'");
        return static_cast<int>(it - carrier.begin());
    }

    // Exhaustive check of all B-algebra axioms.  Every failed axiom is
    // reported with one witness.
    AxiomReport validate() const {
        AxiomReport rep;
        const int n = size();
        auto fail = [&](std::string axiom, std::vector<int> w) {
            std::vector<std::string> labels;
            for (int i : w) labels.push_back(carrier[i]);
            rep.violations.push_back({std::move(axiom), std::move(labels)});
            rep.passed = false;
        };
        for (int a = 0; a < n; ++a) {
            if (add[a][a] != a) { fail("add-idempotent", {a}); break; }
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < a + 1; ++b) {
                if (add[a][b] != add[b][a]) { fail("add-commutative", {a, b}); goto add_assoc; }
            }
    add_assoc:
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (add[add[a][b]][c] != add[a][add[b][c]]) {
                        fail("add-associative", {a, b, c});
                        goto mul_comm;
                    }
    mul_comm:
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < a + 1; ++b)
                if (mul[a][b] != mul[b][a]) { fail("mul-commutative", {a, b}); goto mul_assoc; }
    mul_assoc:
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) {
                        fail("mul-associative", {a, b, c});
                        goto distrib;
                    }
    distrib:
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]) {
                        fail("distributive", {a, b, c});
                        goto units;
                    }
    units:
        for (int a = 0; a < n; ++a) {
            if (add[zero][a] != a) { fail("zero-additive-identity", {a}); break; }
        }
        for (int a = 0; a < n; ++a) {
            if (mul[zero][a] != zero) { fail("zero-annihilates", {a}); break; }
        }
        for (int a = 0; a < n; ++a) {
            if (mul[one][a] != a) { fail("one-multiplicative-identity", {a}); break; }
        }
        return rep;
    }
};

struct FiniteDomainReport {
    bool cancellative = true;
    bool totallyOrdered = true;
    bool isDomain = false;
    std::vector<std::string> cancellativityWitness;  // {a, b, c} with ab = ac, a != 0, b != c
    std::vector<std::string> orderWitness;           // incomparable {a, b}
};

// isDomain = cancellative and totally ordered (the idempotent-case
// characterization of "trivial congruence is prime").
inline FiniteDomainReport finite_domain_report(const FiniteSemiring& F) {
    FiniteDomainReport rep;
    const int n = F.size();
    for (int a = 0; a < n && rep.cancellative; ++a) {
        if (a == F.zero) continue;
        for (int b = 0; b < n && rep.cancellative; ++b)
            for (int c = b + 1; c < n; ++c)
                if (F.times(a, b) == F.times(a, c)) {
                    rep.cancellative = false;
                    rep.cancellativityWitness = {F.label(a), F.label(b), F.label(c)};
                    break;
                }
    }
    for (int a = 0; a < n && rep.totallyOrdered; ++a)
        for (int b = a + 1; b < n; ++b) {
            int s = F.plus(a, b);
            if (s != a && s != b) {
                rep.totallyOrdered = false;
                rep.orderWitness = {F.label(a), F.label(b)};
                break;
            }
        }
    rep.isDomain = rep.cancellative && rep.totallyOrdered;
    return rep;
}

using FiniteSemiringPtr = std::shared_ptr<const FiniteSemiring>;

}  // namespace idemdim
