// Generates the rnd*.json corpus entries: random subsemirings of
// products of the handcrafted tables, closed under + and *, validated
// exhaustively before being written.  Deterministic given the seed.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>

#include <idemdim/idemdim.hpp>

using namespace idemdim;

static FiniteSemiring product(const FiniteSemiring& A, const FiniteSemiring& B) {
    FiniteSemiring P;
    P.name = A.name + "x" + B.name;
    const int n = A.size(), m = B.size();
    auto idx = [&](int a, int b) { return a * m + b; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < m; ++b) P.carrier.push_back(A.label(a) + B.label(b));
    P.add.assign(n * m, std::vector<int>(n * m));
    P.mul.assign(n * m, std::vector<int>(n * m));
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < m; ++b1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < m; ++b2) {
                    P.add[idx(a1, b1)][idx(a2, b2)] = idx(A.plus(a1, a2), B.plus(b1, b2));
                    P.mul[idx(a1, b1)][idx(a2, b2)] = idx(A.times(a1, a2), B.times(b1, b2));
                }
    P.zero = idx(A.zero, B.zero);
    P.one = idx(A.one, B.one);
    return P;
}

static FiniteSemiring subsemiring(const FiniteSemiring& P, std::set<int> seed_elems,
                                  const std::string& name) {
    seed_elems.insert(P.zero);
    seed_elems.insert(P.one);
    std::set<int> elems = seed_elems;
    bool dirty = true;
    while (dirty) {
        dirty = false;
        std::vector<int> cur(elems.begin(), elems.end());
        for (int a : cur)
            for (int b : cur) {
                dirty |= elems.insert(P.plus(a, b)).second;
                dirty |= elems.insert(P.times(a, b)).second;
            }
    }
    std::vector<int> order(elems.begin(), elems.end());
    std::map<int, int> renum;
    for (std::size_t i = 0; i < order.size(); ++i) renum[order[i]] = static_cast<int>(i);
    FiniteSemiring S;
    S.name = name;
    for (int e : order) S.carrier.push_back(P.label(e));
    S.add.assign(order.size(), std::vector<int>(order.size()));
    S.mul.assign(order.size(), std::vector<int>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j) {
            S.add[i][j] = renum.at(P.plus(order[i], order[j]));
            S.mul[i][j] = renum.at(P.times(order[i], order[j]));
        }
    S.zero = renum.at(P.zero);
    S.one = renum.at(P.one);
    return S;
}

static void write_table(const FiniteSemiring& F, const std::string& path) {
    nlohmann::json j;
    j["name"] = F.name;
    j["carrier"] = F.carrier;
    auto dump = [&](const std::vector<std::vector<int>>& t) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : t) {
            nlohmann::json r = nlohmann::json::array();
            for (int cell : row) r.push_back(F.label(cell));
            rows.push_back(std::move(r));
        }
        return rows;
    };
    j["add"] = dump(F.add);
    j["mul"] = dump(F.mul);
    j["zero"] = F.label(F.zero);
    j["one"] = F.label(F.one);
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_tables <corpus-dir>\n";
        return 2;
    }
    std::string dir = argv[1];
    std::vector<FiniteSemiring> pool;
    for (const char* a : {"t3", "t4", "n3", "bxb", "l3"})
        for (const char* b : {"t3", "t4", "n3", "l4"})
            pool.push_back(product(*require_finite_semiring(dir + "/" + a + ".json"),
                                   *require_finite_semiring(dir + "/" + b + ".json")));

    std::mt19937_64 rng(kDefaultSeed);
    std::map<int, bool> done;  // target size -> written
    for (int iter = 0; iter < 100000 && (!done[3] || !done[4] || !done[5]); ++iter) {
        const FiniteSemiring& P = pool[rng() % pool.size()];
        std::set<int> gens;
        int ngens = 1 + static_cast<int>(rng() % 2);
        for (int g = 0; g < ngens; ++g) gens.insert(static_cast<int>(rng() % P.size()));
        FiniteSemiring S = subsemiring(P, gens, "tmp");
        int sz = S.size();
        if (sz < 3 || sz > 5 || done[sz]) continue;
        S.name = "rnd" + std::to_string(sz);
        if (!S.validate().passed) {
            std::cerr << "validation failure in generated table (unexpected)\n";
            return 1;
        }
        write_table(S, dir + "/" + S.name + ".json");
        std::cout << "wrote " << S.name << " from " << P.name << "\n";
        done[sz] = true;
    }
    if (!done[3] || !done[4] || !done[5]) {
        std::cerr << "search exhausted without filling all sizes\n";
        return 1;
    }
    return 0;
}
