// Command-line front end: parse the expression/congruence language,
// dispatch to the library, print deterministic reports.
//
// Exit codes: 0 success / verification pass, 1 verification failure
// (counterexample printed), 2 usage or parse errors.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <idemdim/idemdim.hpp>

using namespace idemdim;

namespace {

struct Options {
    std::string ring_spec;
    std::string table_path;
    std::string cong;
    std::uint64_t seed = kDefaultSeed;
    std::string format = "text";
    int cap = 0;
    std::vector<std::string> args;
    std::string claim;  // verify only
    std::string base = "b";
    std::string mode = "laurent";
    int nvars = 1;
};

void add_common(CLI::App* cmd, Options& opt, bool with_cong) {
    cmd->add_option("--ring", opt.ring_spec, "ring descriptor: <base>[,<poly|laurent>[,<nvars>]]");
    cmd->add_option("--table", opt.table_path, "finite semiring table (JSON)");
    if (with_cong) cmd->add_option("--cong", opt.cong, "congruence literal");
    cmd->add_option("--seed", opt.seed, "RNG seed for sampled checks");
    cmd->add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--cap", opt.cap, "enumeration cap override");
}

Ring resolve_ring(const Options& opt, FiniteSemiringPtr* table_out = nullptr) {
    FiniteSemiringPtr table;
    if (!opt.table_path.empty()) table = require_finite_semiring(opt.table_path);
    if (table_out) *table_out = table;
    if (opt.ring_spec.empty()) {
        if (!table) throw UnsupportedQuery("one of --ring or --table is required");
        return finite_ring(table);
    }
    return parse_ring_spec(opt.ring_spec, table);
}

void emit(const Options& opt, const std::string& key, const nlohmann::json& value,
          const std::string& text) {
    if (opt.format == "json") {
        nlohmann::json j;
        j[key] = value;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

bool is_fracext(const std::string& c) { return c.rfind("fracext", 0) == 0; }

int cmd_eval(const Options& opt) {
    Ring r = resolve_ring(opt);
    Poly f = parse_poly(opt.args.at(0), r);
    emit(opt, "value", f.str(), f.str());
    return 0;
}

int cmd_leq(const Options& opt) {
    Ring r = resolve_ring(opt);
    Pair p = parse_pair(opt.args.at(0), r);
    bool v = natural_leq_poly(p.lhs, p.rhs);
    emit(opt, "leq", v, std::string("leq: ") + (v ? "true" : "false"));
    return 0;
}

int cmd_member(const Options& opt) {
    Ring r = resolve_ring(opt);
    bool v;
    if (is_fracext(opt.cong)) {
        FracExtension ext = parse_frac_extension(opt.cong, r);
        FracPair p = parse_fraction_pair(opt.args.at(0), r);
        v = ext.member(p);
    } else {
        Congruence c = parse_congruence(opt.cong, r);
        Pair p = parse_pair(opt.args.at(0), r);
        v = c.member(p);
    }
    emit(opt, "member", v, std::string("member: ") + (v ? "true" : "false"));
    return 0;
}

int cmd_kernel(const Options& opt) {
    Ring r = resolve_ring(opt);
    Congruence c = parse_congruence(opt.cong, r);
    Poly f = parse_poly(opt.args.at(0), r);
    bool v = c.kernel_member(f);
    emit(opt, "kernel", v, std::string("kernel: ") + (v ? "true" : "false"));
    return 0;
}

int cmd_decider(const Options& opt, const std::string& which) {
    Ring r = resolve_ring(opt);
    Congruence c = parse_congruence(opt.cong, r);
    std::optional<bool> v;
    if (r.base == Base::Finite && r.nvars == 0) {
        int cap = opt.cap > 0 ? opt.cap : enumeration_cap();
        if (which == "is-prime") {
            v = is_prime_finite(r, c, cap);
        } else if (which == "is-qc") {
            v = is_qc_finite(r, c, cap);
        } else {
            CongruenceLattice lat = enumerate_congruences_finite(r, cap);
            std::vector<Congruence> all;
            for (const auto& n : lat.nodes) all.push_back(n.congruence);
            v = is_irreducible_finite(r, c, all, cap);
        }
    } else if (which == "is-prime") {
        v = c.prime_hint();
    }
    if (!v)
        throw UnsupportedQuery(which + " is decided exhaustively on finite carriers only (" +
                               c.describe() + " over " + r.describe() + ")");
    emit(opt, which, *v, which + ": " + (*v ? "true" : "false"));
    return 0;
}

int cmd_congruences(const Options& opt) {
    Ring r = resolve_ring(opt);
    if (r.base != Base::Finite || r.nvars != 0)
        throw UnsupportedQuery("congruence enumeration needs a finite scalar ring");
    int cap = opt.cap > 0 ? opt.cap : enumeration_cap();
    CongruenceLattice lat = enumerate_congruences_finite(r, cap);
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& n : lat.nodes) {
            nlohmann::json j;
            j["classes"] = n.congruence.describe();
            j["prime"] = n.prime;
            j["qc"] = n.qc;
            j["irreducible"] = n.irreducible;
            out.push_back(std::move(j));
        }
        std::cout << nlohmann::json{{"congruences", out}}.dump() << "\n";
    } else {
        for (const auto& n : lat.nodes) {
            std::cout << n.congruence.describe() << (n.prime ? "  prime" : "")
                      << (n.qc ? "  qc" : "") << (n.irreducible ? "  irreducible" : "") << "\n";
        }
        std::cout << "total: " << lat.nodes.size() << "\n";
    }
    return 0;
}

int cmd_dim(const Options& opt) {
    Ring r = resolve_ring(opt);
    int cap = opt.cap > 0 ? opt.cap : enumeration_cap();
    int d;
    if (r.nvars != 0) throw UnsupportedQuery("dim is computed for base carriers; see `chain`");
    if (r.base == Base::Finite) d = dim_finite(r, cap);
    else d = base_dimension(r, cap);
    emit(opt, "dim", d, "dim = " + std::to_string(d));
    return 0;
}

int cmd_chain(const Options& opt) {
    Ring r = resolve_ring(opt);
    if (r.nvars < 1) throw UnsupportedQuery("chain needs a polynomial/Laurent ring");
    int cap = opt.cap > 0 ? opt.cap : enumeration_cap();
    PrimeChain chain = build_polynomial_chain(r.scalar_ring(), r.nvars, r.laurent, cap);
    VerificationReport rep = verify_chain(chain, opt.seed);
    if (opt.format == "json") {
        nlohmann::json j = rep.to_json();
        j["chain"] = chain.str();
        nlohmann::json w = nlohmann::json::array();
        for (const auto& p : chain.witnesses) w.push_back(p.str());
        j["witnesses"] = w;
        j["length"] = chain.length();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "chain: " << chain.str() << "\n";
        for (std::size_t i = 0; i < chain.witnesses.size(); ++i)
            std::cout << "witness " << i << ": " << chain.witnesses[i].str() << "\n";
        std::cout << "length: " << chain.length() << "\n" << rep.to_text();
    }
    return rep.passed ? 0 : 1;
}

int cmd_verify(const Options& opt) {
    FiniteSemiringPtr table;
    Ring base;
    if (!opt.table_path.empty()) {
        table = require_finite_semiring(opt.table_path);
        base = finite_ring(table);
    } else {
        base = parse_ring_spec(opt.base);
    }
    int cap = opt.cap > 0 ? opt.cap : enumeration_cap();
    VerificationReport rep;
    if (opt.claim == "dplusone") {
        rep = verify_dplusone(base, opt.mode == "laurent", opt.seed, cap);
    } else if (opt.claim == "trivkerchain") {
        rep = verify_trivkerchain(base, opt.seed, cap);
    } else if (opt.claim == "laurentdim") {
        rep = verify_laurentdim(base, opt.nvars, opt.seed);
    } else {
        throw UnsupportedQuery("unknown claim '" + opt.claim +
                               "' (expected dplusone|trivkerchain|laurentdim)");
    }
    if (opt.format == "json") std::cout << rep.to_json().dump() << "\n";
    else std::cout << rep.to_text();
    return rep.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic, congruences, and prime chains for idempotent semirings"};
    app.require_subcommand(1);
    Options opt;

    auto* eval = app.add_subcommand("eval", "parse and canonicalize an expression");
    eval->add_option("expr", opt.args)->required();
    auto* leq = app.add_subcommand("leq", "natural order on a pair (a, b)");
    leq->add_option("pair", opt.args)->required();
    auto* member = app.add_subcommand("member", "congruence membership of a pair");
    member->add_option("pair", opt.args)->required();
    auto* kernel = app.add_subcommand("kernel", "kernel membership of an element");
    kernel->add_option("expr", opt.args)->required();
    auto* isprime = app.add_subcommand("is-prime", "primality of a congruence");
    auto* isqc = app.add_subcommand("is-qc", "quotient cancellativity of a congruence");
    auto* isirr = app.add_subcommand("is-irreducible", "irreducibility of a congruence");
    auto* congs = app.add_subcommand("congruences", "enumerate the congruence lattice");
    auto* dim = app.add_subcommand("dim", "Krull dimension of a base carrier");
    auto* chain = app.add_subcommand("chain", "build and verify a maximal prime chain");
    auto* verify = app.add_subcommand("verify", "verify a named theorem instance");
    verify->add_option("claim", opt.claim, "dplusone|trivkerchain|laurentdim")->required();
    verify->add_option("--base", opt.base, "base ring descriptor (default b)");
    verify->add_option("--mode", opt.mode, "poly|laurent (default laurent)")
        ->check(CLI::IsMember({"poly", "laurent"}));
    verify->add_option("-n,--nvars", opt.nvars, "number of variables (laurentdim)");

    for (CLI::App* c : {eval, leq, member, kernel, isprime, isqc, isirr, congs, dim, chain, verify})
        add_common(c, opt, c == member || c == kernel || c == isprime || c == isqc || c == isirr);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (opt.cap > 0) {
            // propagate to library defaults read via the environment
            setenv("IDEMDIM_CAP", std::to_string(opt.cap).c_str(), 1);
        }
        if (eval->parsed()) return cmd_eval(opt);
        if (leq->parsed()) return cmd_leq(opt);
        if (member->parsed()) return cmd_member(opt);
        if (kernel->parsed()) return cmd_kernel(opt);
        if (isprime->parsed()) return cmd_decider(opt, "is-prime");
        if (isqc->parsed()) return cmd_decider(opt, "is-qc");
        if (isirr->parsed()) return cmd_decider(opt, "is-irreducible");
        if (congs->parsed()) return cmd_congruences(opt);
        if (dim->parsed()) return cmd_dim(opt);
        if (chain->parsed()) return cmd_chain(opt);
        if (verify->parsed()) return cmd_verify(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
