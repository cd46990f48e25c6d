#include "ncalc/parser.hpp"

#include <cctype>

namespace ncalc {

bool operator==(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.args != b.args || a.signs != b.signs) return false;
    if (a.kind == Expr::Kind::Number) return a.value == b.value;
    if (a.kind == Expr::Kind::Symbol) return a.name == b.name && a.index == b.index;
    return true;
}

int Env::find(const std::string& name) const {
    for (std::size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

struct Token {
    enum class Type { Number, Ident, Punct, End };
    Type type = Type::End;
    std::string text;
    int line = 1, column = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^'; }

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        std::size_t j = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j + 1 < s.size() && s[j] == '/' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                ++j;
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            }
            t.type = Token::Type::Number;
        } else if (ident_start(c)) {
            while (j < s.size() && ident_char(s[j])) ++j;
            t.type = Token::Type::Ident;
        } else if (std::string("+-*()[],").find(c) != std::string::npos) {
            j = i + 1;
            t.type = Token::Type::Punct;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        t.text = s.substr(i, j - i);
        advance(j - i);
        out.push_back(t);
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    Parser(const std::string& text, const Env& env) : toks_(lex(text)), env_(env) {}

    Expr parse_all() {
        Expr e = expr();
        if (peek().type != Token::Type::End) fail("unexpected '" + peek().text + "'");
        return e;
    }

private:
    const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    bool is_punct(const std::string& p, std::size_t k = 0) const {
        return peek(k).type == Token::Type::Punct && peek(k).text == p;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(t.type == Token::Type::End ? msg + " at end of input" : msg, t.line, t.column);
    }
    void expect(const std::string& p) {
        if (!is_punct(p)) fail("expected '" + p + "'");
        ++pos_;
    }
    Expr node(Expr::Kind k, const Token& at) const {
        Expr e;
        e.kind = k;
        e.line = at.line;
        e.column = at.column;
        return e;
    }

    Expr expr() {
        Expr sum = node(Expr::Kind::Sum, peek());
        int sign = 1;
        if (is_punct("+") || is_punct("-")) {
            sign = peek().text == "-" ? -1 : 1;
            ++pos_;
        }
        sum.args.push_back(term());
        sum.signs.push_back(sign);
        while (is_punct("+") || is_punct("-")) {
            sign = peek().text == "-" ? -1 : 1;
            ++pos_;
            sum.args.push_back(term());
            sum.signs.push_back(sign);
        }
        if (sum.args.size() == 1 && sign == 1) return std::move(sum.args[0]);
        return sum;
    }

    Expr term() {
        Expr prod = node(Expr::Kind::Product, peek());
        prod.args.push_back(factor());
        while (is_punct("*")) {
            ++pos_;
            prod.args.push_back(factor());
        }
        if (peek().type == Token::Type::Number || peek().type == Token::Type::Ident || is_punct("(") || is_punct("["))
            fail("juxtaposition is not multiplication; expected '*'");
        if (prod.args.size() == 1) return std::move(prod.args[0]);
        return prod;
    }

    Expr wrapped(Expr::Kind k, const Token& at, int arity) {
        ++pos_;
        expect("(");
        Expr e = node(k, at);
        e.args.push_back(expr());
        for (int i = 1; i < arity; ++i) {
            expect(",");
            e.args.push_back(expr());
        }
        expect(")");
        return e;
    }

    Expr factor() {
        const Token t = peek();
        switch (t.type) {
            case Token::Type::Number: {
                ++pos_;
                Expr e = node(Expr::Kind::Number, t);
                try {
                    e.value = parse_rational(t.text);
                } catch (const std::exception& ex) {
                    fail(ex.what());
                }
                return e;
            }
            case Token::Type::Ident: {
                if (is_punct("(", 1)) {
                    if (t.text == "d") return wrapped(Expr::Kind::D, t, 1);
                    if (t.text == "cyc") return wrapped(Expr::Kind::Cyc, t, 1);
                    if (t.text == "tr") return wrapped(Expr::Kind::Trace, t, 1);
                    if (t.text == "star") return wrapped(Expr::Kind::Star, t, 2);
                    fail("unknown function '" + t.text + "'");
                }
                int idx = env_.find(t.text);
                if (idx < 0) fail("unknown symbol '" + t.text + "'");
                ++pos_;
                Expr e = node(Expr::Kind::Symbol, t);
                e.name = t.text;
                e.index = idx;
                return e;
            }
            case Token::Type::Punct:
                if (t.text == "(") {
                    ++pos_;
                    Expr e = expr();
                    expect(")");
                    return e;
                }
                if (t.text == "[") {
                    ++pos_;
                    Expr e = node(Expr::Kind::Commutator, t);
                    e.args.push_back(expr());
                    expect(",");
                    e.args.push_back(expr());
                    expect("]");
                    return e;
                }
                fail("unexpected '" + t.text + "'");
            case Token::Type::End:
                break;
        }
        fail("unexpected end of input");
    }

    std::vector<Token> toks_;
    const Env& env_;
    std::size_t pos_ = 0;
};

std::string wrap_if(const Expr& e, bool cond) { return cond ? "(" + print(e) + ")" : print(e); }

[[noreturn]] void eval_fail(const Expr& e, const std::string& msg) { throw ParseError(msg, e.line, e.column); }

const char* kind_name(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Number: return "number";
        case Expr::Kind::Symbol: return "symbol";
        case Expr::Kind::Sum: return "sum";
        case Expr::Kind::Product: return "product";
        case Expr::Kind::Commutator: return "[.,.]";
        case Expr::Kind::D: return "d(.)";
        case Expr::Kind::Cyc: return "cyc(.)";
        case Expr::Kind::Star: return "star(.,.)";
        case Expr::Kind::Trace: return "tr(.)";
    }
    return "?";
}

[[noreturn]] void unsupported(const Expr& e, const std::string& context) {
    eval_fail(e, std::string(kind_name(e.kind)) + " is not available in " + context);
}

bool contains(const Expr& e, Expr::Kind k) {
    if (e.kind == k) return true;
    for (const auto& a : e.args)
        if (contains(a, k)) return true;
    return false;
}

}  // namespace

Expr parse(const std::string& text, const Env& env) { return Parser(text, env).parse_all(); }

std::string print(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Number: return to_string(e.value);
        case Expr::Kind::Symbol: return e.name;
        case Expr::Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                bool neg = e.signs[i] < 0;
                if (i == 0)
                    s += neg ? "-" : "";
                else
                    s += neg ? " - " : " + ";
                s += wrap_if(e.args[i], e.args[i].kind == Expr::Kind::Sum);
            }
            return s;
        }
        case Expr::Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (i) s += "*";
                s += wrap_if(e.args[i], e.args[i].kind == Expr::Kind::Sum || e.args[i].kind == Expr::Kind::Product);
            }
            return s;
        }
        case Expr::Kind::Commutator: return "[" + print(e.args[0]) + ", " + print(e.args[1]) + "]";
        case Expr::Kind::D: return "d(" + print(e.args[0]) + ")";
        case Expr::Kind::Cyc: return "cyc(" + print(e.args[0]) + ")";
        case Expr::Kind::Star: return "star(" + print(e.args[0]) + ", " + print(e.args[1]) + ")";
        case Expr::Kind::Trace: return "tr(" + print(e.args[0]) + ")";
    }
    return "";
}

std::vector<std::string> generator_names(int gens) {
    std::vector<std::string> out;
    for (int i = 0; i < gens; ++i) out.push_back(gens <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1));
    return out;
}

Env free_env(int gens) { return Env{generator_names(gens)}; }

Env phase_env(int pairs) {
    Env env;
    for (int i = 1; i <= pairs; ++i) env.symbols.push_back("x" + std::to_string(i));
    for (int i = 1; i <= pairs; ++i) env.symbols.push_back("y" + std::to_string(i));
    env.symbols.push_back("t");
    return env;
}

Env algebra_env(const BasedAlgebra& a) {
    if (a.kind() == BasedAlgebra::Kind::FinDim) return Env{a.structure().basis_names()};
    return free_env(a.generator_count());
}

Env alphabet_env(const SuperAlphabet& a) { return Env{a.names}; }

FreePoly to_free(const Expr& e, int gens) {
    switch (e.kind) {
        case Expr::Kind::Number: return FreePoly::constant(gens, e.value);
        case Expr::Kind::Symbol: return FreePoly::generator(gens, e.index);
        case Expr::Kind::Sum: {
            FreePoly r(gens);
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (e.signs[i] < 0)
                    r -= to_free(e.args[i], gens);
                else
                    r += to_free(e.args[i], gens);
            }
            return r;
        }
        case Expr::Kind::Product: {
            FreePoly r = FreePoly::constant(gens, 1);
            for (const auto& a : e.args) r = r * to_free(a, gens);
            return r;
        }
        case Expr::Kind::Commutator: return free_commutator(to_free(e.args[0], gens), to_free(e.args[1], gens));
        default: unsupported(e, "the free algebra");
    }
}

NecklaceElement to_necklace(const Expr& e, int gens) {
    if (!contains(e, Expr::Kind::Cyc)) return project_cyclic(to_free(e, gens));
    switch (e.kind) {
        case Expr::Kind::Cyc:
            if (contains(e.args[0], Expr::Kind::Cyc)) eval_fail(e, "nested cyc(.)");
            return project_cyclic(to_free(e.args[0], gens));
        case Expr::Kind::Sum: {
            NecklaceElement r(gens);
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (e.signs[i] < 0)
                    r -= to_necklace(e.args[i], gens);
                else
                    r += to_necklace(e.args[i], gens);
            }
            return r;
        }
        case Expr::Kind::Product: {
            Rational scale = 1;
            const Expr* cyc = nullptr;
            for (const auto& a : e.args) {
                if (a.kind == Expr::Kind::Number) {
                    scale *= a.value;
                } else if (!cyc) {
                    cyc = &a;
                } else {
                    eval_fail(a, "necklaces can only be scaled by numbers");
                }
            }
            return to_necklace(*cyc, gens).scaled(scale);
        }
        default: unsupported(e, "necklace expressions");
    }
}

Elem to_elem(const Expr& e, const BasedAlgebra& a) {
    switch (e.kind) {
        case Expr::Kind::Number: return elem_scaled(elem_unit(), e.value);
        case Expr::Kind::Symbol:
            if (a.kind() == BasedAlgebra::Kind::FinDim) return Elem{{e.index == 0 ? Word{} : Word{e.index}, Rational(1)}};
            return Elem{{Word{e.index}, Rational(1)}};
        case Expr::Kind::Sum: {
            Elem r;
            for (std::size_t i = 0; i < e.args.size(); ++i) elem_add(r, to_elem(e.args[i], a), e.signs[i]);
            return r;
        }
        case Expr::Kind::Product: {
            Elem r = elem_unit();
            for (const auto& x : e.args) r = a.mul(r, to_elem(x, a));
            return r;
        }
        case Expr::Kind::Commutator: {
            Elem x = to_elem(e.args[0], a), y = to_elem(e.args[1], a);
            Elem r = a.mul(x, y);
            elem_add(r, a.mul(y, x), -1);
            return r;
        }
        default: unsupported(e, "algebra elements");
    }
}

NCForm to_form(const Expr& e, const BasedAlgebra& a) {
    switch (e.kind) {
        case Expr::Kind::Number:
        case Expr::Kind::Symbol: return NCForm::from_elem(to_elem(e, a));
        case Expr::Kind::Sum: {
            NCForm r;
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (e.signs[i] < 0)
                    r -= to_form(e.args[i], a);
                else
                    r += to_form(e.args[i], a);
            }
            return r;
        }
        case Expr::Kind::Product: {
            NCForm r = NCForm::from_elem(elem_unit());
            for (const auto& x : e.args) r = form_mul(a, r, to_form(x, a));
            return r;
        }
        case Expr::Kind::Commutator: {
            NCForm x = to_form(e.args[0], a), y = to_form(e.args[1], a);
            if (!x.homogeneous() || !y.homogeneous()) eval_fail(e, "graded commutator of inhomogeneous forms");
            NCForm r = form_mul(a, x, y), s = form_mul(a, y, x);
            bool odd = !x.is_zero() && !y.is_zero() && (x.degree() * y.degree()) % 2 != 0;
            return odd ? r + s : r - s;
        }
        case Expr::Kind::D: return de_rham_d(a, to_form(e.args[0], a));
        default: unsupported(e, "noncommutative forms");
    }
}

PhasePoly to_phase(const Expr& e, int pairs) {
    switch (e.kind) {
        case Expr::Kind::Number: return PhasePoly::constant(pairs, TPoly(e.value));
        case Expr::Kind::Symbol:
            if (e.index < pairs) return PhasePoly::x(pairs, e.index);
            if (e.index < 2 * pairs) return PhasePoly::y(pairs, e.index - pairs);
            return PhasePoly::constant(pairs, TPoly::t_power(1));
        case Expr::Kind::Sum: {
            PhasePoly r(pairs);
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (e.signs[i] < 0)
                    r -= to_phase(e.args[i], pairs);
                else
                    r += to_phase(e.args[i], pairs);
            }
            return r;
        }
        case Expr::Kind::Product: {
            PhasePoly r = PhasePoly::constant(pairs, 1);
            for (const auto& x : e.args) r = r * to_phase(x, pairs);
            return r;
        }
        case Expr::Kind::Star: return moyal_star(to_phase(e.args[0], pairs), to_phase(e.args[1], pairs));
        case Expr::Kind::Commutator: {
            PhasePoly f = to_phase(e.args[0], pairs), g = to_phase(e.args[1], pairs);
            return moyal_star(f, g) - moyal_star(g, f);
        }
        default: unsupported(e, "phase-space polynomials");
    }
}

SuperPoly to_super(const Expr& e, const AlphabetPtr& al, const std::function<SuperPoly(const SuperPoly&)>& d) {
    switch (e.kind) {
        case Expr::Kind::Number: return SuperPoly::constant(al, e.value);
        case Expr::Kind::Symbol: return SuperPoly::letter(al, e.index);
        case Expr::Kind::Sum: {
            SuperPoly r(al);
            for (std::size_t i = 0; i < e.args.size(); ++i) {
                if (e.signs[i] < 0)
                    r -= to_super(e.args[i], al, d);
                else
                    r += to_super(e.args[i], al, d);
            }
            return r;
        }
        case Expr::Kind::Product: {
            SuperPoly r = SuperPoly::constant(al, 1);
            for (const auto& x : e.args) r = r * to_super(x, al, d);
            return r;
        }
        case Expr::Kind::Commutator: {
            SuperPoly r(al);
            auto xs = to_super(e.args[0], al, d).homogeneous_parts();
            auto ys = to_super(e.args[1], al, d).homogeneous_parts();
            for (const auto& [p, x] : xs)
                for (const auto& [q, y] : ys) r += (p * q) % 2 ? x * y + y * x : x * y - y * x;
            return r;
        }
        case Expr::Kind::Cyc: return supercyclic_project(to_super(e.args[0], al, d));
        case Expr::Kind::D:
            if (!d) unsupported(e, "this context");
            return d(to_super(e.args[0], al, d));
        default: unsupported(e, "graded words");
    }
}

}  // namespace ncalc
