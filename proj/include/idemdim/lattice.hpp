#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "idemdim/prime_families.hpp"

namespace idemdim {

inline int enumeration_cap() {
    if (const char* env = std::getenv("IDEMDIM_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultEnumerationCap;
}

struct LatticeNode {
    Congruence congruence;
    std::vector<int> partition;  // canonical form
    bool prime = false;
    bool qc = false;
    bool irreducible = false;
};

// All congruences of a finite semiring with per-node prime/QC/
// irreducible flags and the containment relation.
struct CongruenceLattice {
    Ring ring;
    std::vector<LatticeNode> nodes;

    // containment as relations: nodes[i] contained in nodes[j]
    bool contained(int i, int j) const {
        const auto& small = nodes[i].partition;
        const auto& big = nodes[j].partition;
        for (std::size_t a = 0; a < small.size(); ++a)
            for (std::size_t b = a + 1; b < small.size(); ++b)
                if (small[a] == small[b] && big[a] != big[b]) return false;
        return true;
    }

    int find(const std::vector<int>& partition) const {
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].partition == partition) return static_cast<int>(i);
        return -1;
    }
};

namespace detail {

// Join of two congruences: closure of the union of their relations.
inline std::vector<int> partition_join(const Ring& r, const std::vector<int>& p,
                                       const std::vector<int>& q, int cap) {
    const int n = r.table->size();
    std::vector<std::pair<int, int>> gens;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (p[a] == p[b] || q[a] == q[b]) gens.emplace_back(a, b);
    return as_finite_explicit(closure_finite(r, gens, cap)).classes();
}

}  // namespace detail

// Complete congruence list: principal congruences <(a,b)> for all pairs,
// closed under joins to fixpoint; each node flagged by the exhaustive
// deciders.  Deterministic order: by class count, then partition.
inline CongruenceLattice enumerate_congruences_finite(const Ring& r, int cap = enumeration_cap()) {
    if (r.base != Base::Finite || r.nvars != 0)
        throw UnsupportedFamily("congruence enumeration needs a finite scalar ring");
    const FiniteSemiring& F = *r.table;
    if (F.size() > cap)
        throw CarrierCap(F.name + " has " + std::to_string(F.size()) + " elements, cap " +
                         std::to_string(cap));

    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> worklist;
    auto insert = [&](std::vector<int> p) {
        p = detail::canonical_partition(std::move(p));
        if (found.insert(p).second) worklist.push_back(std::move(p));
    };

    std::vector<int> diag(F.size());
    std::iota(diag.begin(), diag.end(), 0);
    insert(diag);
    for (int a = 0; a < F.size(); ++a)
        for (int b = a + 1; b < F.size(); ++b)
            insert(as_finite_explicit(closure_finite(r, {{a, b}}, cap)).classes());

    // close under pairwise joins
    std::vector<std::vector<int>> all(found.begin(), found.end());
    while (!worklist.empty()) {
        std::vector<int> p = std::move(worklist.back());
        worklist.pop_back();
        all.assign(found.begin(), found.end());
        for (const auto& q : all) insert(detail::partition_join(r, p, q, cap));
    }

    CongruenceLattice lat;
    lat.ring = r;
    for (const auto& p : found) {
        LatticeNode node;
        node.partition = p;
        node.congruence = finite_explicit(r, p);
        lat.nodes.push_back(std::move(node));
    }
    std::sort(lat.nodes.begin(), lat.nodes.end(), [](const LatticeNode& a, const LatticeNode& b) {
        int ca = *std::max_element(a.partition.begin(), a.partition.end());
        int cb = *std::max_element(b.partition.begin(), b.partition.end());
        if (ca != cb) return ca > cb;  // finer first; diagonal leads
        return a.partition < b.partition;
    });

    std::vector<Congruence> congs;
    for (const auto& n : lat.nodes) congs.push_back(n.congruence);
    for (auto& n : lat.nodes) {
        n.prime = is_prime_finite(r, n.congruence, cap);
        n.qc = is_qc_finite(r, n.congruence, cap);
        n.irreducible = is_irreducible_finite(r, n.congruence, congs, cap);
    }
    return lat;
}

// Length (number of strict inclusions) of the longest chain of
// prime-flagged nodes.
inline int dim_finite(const CongruenceLattice& lat) {
    std::vector<int> primes;
    for (std::size_t i = 0; i < lat.nodes.size(); ++i)
        if (lat.nodes[i].prime) primes.push_back(static_cast<int>(i));
    // longest path in the strict-containment DAG among primes
    std::map<int, int> depth;
    int best = 0;
    // topological by class count (containment coarsens)
    std::sort(primes.begin(), primes.end(), [&](int a, int b) {
        int ca = *std::max_element(lat.nodes[a].partition.begin(), lat.nodes[a].partition.end());
        int cb = *std::max_element(lat.nodes[b].partition.begin(), lat.nodes[b].partition.end());
        return ca > cb;
    });
    for (int i : primes) {
        int d = 0;
        for (int j : primes) {
            if (j == i || !depth.count(j)) continue;
            if (lat.nodes[j].partition != lat.nodes[i].partition && lat.contained(j, i))
                d = std::max(d, depth[j] + 1);
        }
        depth[i] = d;
        best = std::max(best, d);
    }
    return best;
}

inline int dim_finite(const Ring& r, int cap = enumeration_cap()) {
    return dim_finite(enumerate_congruences_finite(r, cap));
}

// The primes of a finite semiring, in lattice order.
inline std::vector<Congruence> finite_primes(const CongruenceLattice& lat) {
    std::vector<Congruence> out;
    for (const auto& n : lat.nodes)
        if (n.prime) out.push_back(n.congruence);
    return out;
}

}  // namespace idemdim
