#pragma once

#include <cctype>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "idemdim/chains.hpp"
#include "idemdim/fractions.hpp"

namespace idemdim {

// f^e with arbitrary-precision e.  Monomials are powered directly
// (negative e inverts); multi-term powers are repeated multiplication
// with a sanity cap on the iteration count.
inline Poly poly_int_pow(const Poly& f, const Int& e) {
    const Ring& r = f.ring();
    if (e == 0) return Poly::one(r);
    if (f.is_zero()) {
        if (e < 0) throw NegativeExponentAtZero("0^" + e.str());
        return f;
    }
    if (f.nterms() == 1) {
        const auto& [exps, c] = *f.terms().begin();
        Exps out = exps;
        for (Int& x : out) x *= e;
        return Poly::monomial(r, std::move(out), scalar_pow(c, e));
    }
    if (e < 0) throw UnsupportedQuery("negative power of a multi-term polynomial");
    if (e > 64) throw UnsupportedQuery("exponent " + e.str() + " too large for expansion");
    Poly out = Poly::one(r);
    for (Int i = 0; i < e; ++i) out = poly_mul(out, f);
    return out;
}

namespace detail {

struct Token {
    enum class Kind { Integer, Rational, Ident, Punct, End };
    Kind kind = Kind::End;
    Int ival;
    Rat rval;
    std::string text;
    char punct = 0;
    std::size_t pos = 0;
};

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t last_end = 0;  // end of the last token, for error columns at EOF
    auto is_ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Token t;
        t.pos = i;
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < src.size() &&
             std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.text = src.substr(i, j - i);
            // tight p/q with no whitespace is a rational literal
            if (j + 1 < src.size() && src[j] == '/' &&
                std::isdigit(static_cast<unsigned char>(src[j + 1]))) {
                std::size_t k = j + 1;
                while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) ++k;
                t.kind = Token::Kind::Rational;
                t.rval = Rat(Int(t.text), Int(src.substr(j + 1, k - j - 1)));
                t.text = src.substr(i, k - i);
                i = k;
            } else {
                t.kind = Token::Kind::Integer;
                t.ival = Int(t.text);
                i = j;
            }
            last_end = i;
            out.push_back(std::move(t));
            continue;
        }
        if (c == '-' && src.compare(i, 4, "-inf") == 0) {
            t.kind = Token::Kind::Ident;
            t.text = "-inf";
            i += 4;
            last_end = i;
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && is_ident(src[j])) ++j;
            t.kind = Token::Kind::Ident;
            t.text = src.substr(i, j - i);
            i = j;
            last_end = i;
            out.push_back(std::move(t));
            continue;
        }
        if (std::string("+*^()[],;=/").find(c) != std::string::npos) {
            t.kind = Token::Kind::Punct;
            t.punct = c;
            t.text = std::string(1, c);
            ++i;
            last_end = i;
            out.push_back(std::move(t));
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
    }
    Token end;
    end.pos = last_end;
    out.push_back(std::move(end));
    return out;
}

class ExprParser {
public:
    ExprParser(const std::string& src, Ring ring)
        : ring_(std::move(ring)), toks_(lex(src)) {
        auto names = default_var_names(ring_.nvars);
        for (int i = 0; i < ring_.nvars; ++i) {
            vars_[names[i]] = i;
            vars_["x" + std::to_string(i + 1)] = i;
        }
    }

    const Token& peek() const { return toks_[i_]; }
    Token next() { return toks_[i_++]; }
    bool at_punct(char c) const {
        return peek().kind == Token::Kind::Punct && peek().punct == c;
    }
    void expect_punct(char c) {
        if (!at_punct(c))
            throw SyntaxError(std::string("expected '") + c + "'", peek().pos);
        ++i_;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End)
            throw SyntaxError("unexpected trailing input '" + peek().text + "'", peek().pos);
    }

    Poly expr() {
        Poly p = term();
        while (at_punct('+')) {
            ++i_;
            p = poly_add(p, term());
        }
        return p;
    }

    Pair pair() {
        expect_punct('(');
        Poly a = expr();
        expect_punct(',');
        Poly b = expr();
        expect_punct(')');
        return Pair(std::move(a), std::move(b));
    }

    Fraction fraction() {
        if (ring_.nvars != 0)
            throw UnsupportedQuery("fractions live over a scalar carrier");
        Poly num = expr();
        Poly den = Poly::one(ring_);
        if (at_punct('/')) {
            ++i_;
            den = expr();
        }
        return Fraction(num.constant_value(), den.constant_value());
    }

    FracPair frac_pair() {
        expect_punct('(');
        Fraction a = fraction();
        expect_punct(',');
        Fraction b = fraction();
        expect_punct(')');
        return FracPair{std::move(a), std::move(b)};
    }

    Congruence congruence();

    const Ring& ring() const { return ring_; }

private:
    Poly term() {
        Poly p = factor();
        while (at_punct('*')) {
            ++i_;
            p = poly_mul(p, factor());
        }
        return p;
    }

    Poly factor() {
        Poly p = primary();
        if (at_punct('^')) {
            ++i_;
            const Token& t = peek();
            if (t.kind != Token::Kind::Integer)
                throw SyntaxError("expected integer exponent", t.pos);
            Int e = t.ival;
            ++i_;
            if (e < 0 && !ring_.laurent && ring_.nvars > 0 && !p.is_constant())
                throw ModeError("negative exponent outside Laurent mode");
            p = poly_int_pow(p, e);
        }
        return p;
    }

    Poly primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::Punct:
                if (t.punct == '(') {
                    ++i_;
                    Poly p = expr();
                    expect_punct(')');
                    return p;
                }
                break;
            case Token::Kind::Integer:
                ++i_;
                switch (ring_.base) {
                    case Base::IntMax: return Poly::constant(ring_, Scalar::int_max(t.ival));
                    case Base::RatMax:
                        return Poly::constant(ring_, Scalar::rat_max(Rat(t.ival)));
                    case Base::Finite: return finite_label(t);
                    default:
                        throw BaseError("integer literal '" + t.text + "' not in base " +
                                        ring_.scalar_ring().describe());
                }
            case Token::Kind::Rational:
                ++i_;
                if (ring_.base == Base::RatMax)
                    return Poly::constant(ring_, Scalar::rat_max(t.rval));
                if (ring_.base == Base::Finite) return finite_label(t);
                throw BaseError("rational literal '" + t.text + "' not in base " +
                                ring_.scalar_ring().describe());
            case Token::Kind::Ident: return ident_primary();
            case Token::Kind::End: break;
        }
        throw SyntaxError("expected expression", t.pos);
    }

    Poly finite_label(const Token& t) {
        try {
            int idx = ring_.table->index_of(t.text);
            return Poly::constant(ring_, Scalar::finite(ring_.table, idx));
        } catch (const MalformedTable&) {
            throw SyntaxError("unknown carrier label '" + t.text + "'", t.pos);
        }
    }

    Poly ident_primary() {
        Token t = next();
        if (auto it = vars_.find(t.text); it != vars_.end())
            return Poly::variable(ring_, it->second);
        if (t.text == "-inf") {
            if (ring_.base == Base::Finite)
                return Poly::constant(ring_, Scalar::zero(ring_));
            return Poly::zero(ring_);
        }
        if (ring_.base == Base::Bool) {
            if (t.text == "b0") return Poly::zero(ring_);
            if (t.text == "b1") return Poly::one(ring_);
        }
        if (ring_.base == Base::Finite) return finite_label(t);
        if (ring_.base == Base::LexMono && t.text == "m" && at_punct('[')) {
            ++i_;
            std::vector<Int> e;
            for (int k = 0; k < ring_.lex_rank; ++k) {
                if (k) expect_punct(',');
                const Token& n = peek();
                if (n.kind != Token::Kind::Integer)
                    throw SyntaxError("expected integer exponent", n.pos);
                e.push_back(n.ival);
                ++i_;
            }
            expect_punct(']');
            return Poly::constant(ring_, Scalar::lexmono(ring_.scalar_ring(), std::move(e)));
        }
        throw SyntaxError("unknown identifier '" + t.text + "'", t.pos);
    }

    // Parse a sub-construct against a different ring on the same token
    // stream (used by evalpull's inner congruence).
    template <typename F>
    auto with_ring(const Ring& r, F body) {
        Ring saved_ring = ring_;
        std::map<std::string, int> saved_vars = std::move(vars_);
        ring_ = r;
        vars_.clear();
        auto names = default_var_names(ring_.nvars);
        for (int i = 0; i < ring_.nvars; ++i) {
            vars_[names[i]] = i;
            vars_["x" + std::to_string(i + 1)] = i;
        }
        auto out = body();
        ring_ = std::move(saved_ring);
        vars_ = std::move(saved_vars);
        return out;
    }

    Rat rational_entry() {
        const Token& t = peek();
        if (t.kind == Token::Kind::Integer) {
            ++i_;
            return Rat(t.ival);
        }
        if (t.kind == Token::Kind::Rational) {
            ++i_;
            return t.rval;
        }
        throw SyntaxError("expected rational entry", t.pos);
    }

    Ring ring_;
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    std::map<std::string, int> vars_;
};

inline Congruence ExprParser::congruence() {
    const Token& t = peek();
    if (t.kind != Token::Kind::Ident)
        throw SyntaxError("expected congruence literal", t.pos);
    std::string name = next().text;
    if (name == "trivial") return trivial_congruence(ring_);
    if (name == "improper") return improper_congruence(ring_);
    if (name == "collapse") return make_top_collapse(ring_);
    if (name == "gen") {
        if (ring_.base != Base::Finite || ring_.nvars != 0)
            throw UnsupportedFamily("gen[...] needs a finite scalar carrier");
        expect_punct('[');
        std::vector<Pair> gens;
        for (;;) {
            gens.push_back(pair());
            if (at_punct(';')) {
                ++i_;
                continue;
            }
            break;
        }
        expect_punct(']');
        return closure_finite_pairs(ring_, gens, enumeration_cap());
    }
    if (name == "weight") {
        int n = ring_.base == Base::Bool ? ring_.nvars : ring_.lex_rank;
        WeightMatrix V;
        V.nvars = n;
        expect_punct('[');
        for (;;) {
            expect_punct('[');
            std::vector<Rat> row;
            for (int k = 0; k < n; ++k) {
                if (k) expect_punct(',');
                row.push_back(rational_entry());
            }
            expect_punct(']');
            V.rows.push_back(std::move(row));
            if (at_punct(';')) {
                ++i_;
                continue;
            }
            break;
        }
        expect_punct(']');
        return make_weight_prime(ring_, std::move(V));
    }
    if (name == "lift") {
        expect_punct('(');
        const Token& n = peek();
        if (n.kind != Token::Kind::Integer)
            throw SyntaxError("expected chain index", n.pos);
        Int idx = n.ival;
        ++i_;
        expect_punct(')');
        if (ring_.nvars != 1)
            throw UnsupportedFamily("lift(i) literals are defined for one-variable rings");
        BaseChain bc = registered_base_chain(ring_.scalar_ring());
        if (idx < 0 || idx >= static_cast<int>(bc.primes.size()))
            throw UnsupportedQuery("chain index " + idx.str() + " out of range 0.." +
                                   std::to_string(bc.primes.size() - 1));
        return make_lifted_prime(ring_, bc.primes[static_cast<std::size_t>(idx.convert_to<long>())]);
    }
    if (name == "evalpull") {
        expect_punct('(');
        std::map<int, Scalar> assignment;
        for (;;) {
            const Token& v = peek();
            if (v.kind != Token::Kind::Ident || !vars_.count(v.text))
                throw SyntaxError("expected variable assignment", v.pos);
            int var = vars_[v.text];
            ++i_;
            expect_punct('=');
            Poly val = factor();
            if (!val.is_constant())
                throw SyntaxError("assignment value must be a base constant", v.pos);
            assignment.emplace(var, val.constant_value());
            if (at_punct(',')) {
                ++i_;
                continue;
            }
            break;
        }
        expect_punct(';');
        bool total = static_cast<int>(assignment.size()) == ring_.nvars;
        Ring inner_ring = total ? ring_.scalar_ring() : ring_;
        Congruence ic = with_ring(inner_ring, [&] { return congruence(); });
        expect_punct(')');
        return eval_pullback(ring_, std::move(assignment), std::move(ic));
    }
    if (name == "principal") {
        expect_punct('(');
        if (ring_.nvars != 0)
            throw UnsupportedFamily("principal congruences live on a semifield carrier");
        Poly gen = expr();
        expect_punct(')');
        return make_principal(ring_, gen.constant_value());
    }
    if (name == "iqc") {
        expect_punct('(');
        const Token& n = peek();
        if (n.kind != Token::Kind::Integer)
            throw SyntaxError("expected index", n.pos);
        long idx = n.ival.convert_to<long>();
        ++i_;
        expect_punct(')');
        return make_intersect_qc(ring_, idx);
    }
    if (name == "fracext")
        throw UnsupportedFamily(
            "fracext(...) relates fractions; use it with fraction-pair operands");
    throw SyntaxError("unknown congruence family '" + name + "'", t.pos);
}

}  // namespace detail

inline Poly parse_poly(const std::string& src, const Ring& r) {
    detail::ExprParser p(src, r);
    Poly out = p.expr();
    p.expect_end();
    return out;
}

inline Pair parse_pair(const std::string& src, const Ring& r) {
    detail::ExprParser p(src, r);
    Pair out = p.pair();
    p.expect_end();
    return out;
}

inline Fraction parse_fraction(const std::string& src, const Ring& r) {
    detail::ExprParser p(src, r);
    Fraction out = p.fraction();
    p.expect_end();
    return out;
}

inline FracPair parse_fraction_pair(const std::string& src, const Ring& r) {
    detail::ExprParser p(src, r);
    FracPair out = p.frac_pair();
    p.expect_end();
    return out;
}

inline Congruence parse_congruence(const std::string& src, const Ring& r) {
    detail::ExprParser p(src, r);
    Congruence out = p.congruence();
    p.expect_end();
    return out;
}

// `fracext(inner)` over a scalar carrier.
inline FracExtension parse_frac_extension(const std::string& src, const Ring& r) {
    std::string s = src;
    // strip whitespace at the ends
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.rfind("fracext(", 0) != 0 || s.back() != ')')
        throw SyntaxError("expected fracext(inner)", 0);
    return FracExtension(parse_congruence(s.substr(8, s.size() - 9), r));
}

// Ring descriptor: `<base>[,<poly|laurent>[,<nvars>]]`, where base is
// one of b, zmax, qmax, lexK, monoK, or the name of a loaded table
// ("finite" also accepted).  With a table present the base may be
// omitted: `poly,1`.
inline Ring parse_ring_spec(const std::string& spec, FiniteSemiringPtr table = nullptr) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : spec) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    parts.push_back(cur);
    if (parts.back().empty() && parts.size() == 1) parts.clear();

    Ring r = table ? finite_ring(table) : bool_ring();
    std::size_t i = 0;
    auto is_mode = [](const std::string& s) { return s == "poly" || s == "laurent"; };
    if (!parts.empty() && !is_mode(parts[0])) {
        const std::string& b = parts[0];
        if (b == "b") r = bool_ring();
        else if (b == "zmax") r = zmax_ring();
        else if (b == "qmax") r = qmax_ring();
        else if (b.rfind("lex", 0) == 0 && b.size() > 3)
            r = lexmono_ring(std::stoi(b.substr(3)), true);
        else if (b.rfind("mono", 0) == 0 && b.size() > 4)
            r = lexmono_ring(std::stoi(b.substr(4)), false);
        else if (b == "finite" || (table && b == table->name)) {
            if (!table) throw UnsupportedQuery("ring base 'finite' needs --table");
            r = finite_ring(table);
        } else {
            throw SyntaxError("unknown ring base '" + b + "'", 0);
        }
        ++i;
    } else if (!table && parts.empty()) {
        throw SyntaxError("empty ring descriptor", 0);
    }
    bool laurent = false;
    int nvars = 0;
    if (i < parts.size()) {
        if (!is_mode(parts[i])) throw SyntaxError("expected poly|laurent in '" + spec + "'", 0);
        laurent = parts[i] == "laurent";
        ++i;
    }
    if (i < parts.size()) {
        try {
            nvars = std::stoi(parts[i]);
        } catch (...) {
            throw SyntaxError("bad variable count '" + parts[i] + "'", 0);
        }
        if (nvars < 0) throw SyntaxError("negative variable count", 0);
        ++i;
    }
    if (i < parts.size()) throw SyntaxError("trailing ring descriptor parts", 0);
    return r.with_vars(nvars, laurent);
}

}  // namespace idemdim
