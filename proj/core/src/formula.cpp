#include "cltop/formula.hpp"

#include <algorithm>
#include <cctype>

namespace cltop {

// Grants the implementation access to the private node constructor without
// widening the public surface.
class FormulaBuilderAccess {
public:
    static Formula make(std::shared_ptr<const Formula::Node> n) { return Formula(std::move(n)); }
    static const std::shared_ptr<const Formula::Node>& node(const Formula& f) { return f.node_; }
    using Node = Formula::Node;
};

namespace {

using Node = FormulaBuilderAccess::Node;

Formula make_leaf(Conn k, int var = -1) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->var = var;
    return FormulaBuilderAccess::make(std::move(n));
}

Formula make_unary(Conn k, Formula f) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = FormulaBuilderAccess::node(f);
    return FormulaBuilderAccess::make(std::move(n));
}

Formula make_binary(Conn k, Formula a, Formula b) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->lhs = FormulaBuilderAccess::node(a);
    n->rhs = FormulaBuilderAccess::node(b);
    return FormulaBuilderAccess::make(std::move(n));
}

}  // namespace

Formula Formula::var(int index) {
    if (index < 0) throw InvalidInputError("variable index must be nonnegative");
    return make_leaf(Conn::Var, index);
}
Formula Formula::top() { return make_leaf(Conn::Top); }
Formula Formula::bot() { return make_leaf(Conn::Bot); }
Formula Formula::neg(Formula f) { return make_unary(Conn::Neg, std::move(f)); }
Formula Formula::conj(Formula a, Formula b) { return make_binary(Conn::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return make_binary(Conn::Or, std::move(a), std::move(b)); }
Formula Formula::imp(Formula a, Formula b) { return make_binary(Conn::Imp, std::move(a), std::move(b)); }
Formula Formula::box(Formula f) { return make_unary(Conn::Box, std::move(f)); }
Formula Formula::dia(Formula f) { return make_unary(Conn::Dia, std::move(f)); }
Formula Formula::rhd(Formula a, Formula b) { return make_binary(Conn::Rhd, std::move(a), std::move(b)); }

int Formula::var_index() const {
    if (node_->kind != Conn::Var) throw InvalidInputError("var_index on a non-variable");
    return node_->var;
}

Formula Formula::left() const {
    if (!node_->lhs) throw InvalidInputError("left() on a leaf formula");
    return Formula(node_->lhs);
}

Formula Formula::right() const {
    if (!node_->rhs) throw InvalidInputError("right() on a non-binary formula");
    return Formula(node_->rhs);
}

bool Formula::equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case Conn::Var: return a.var == b.var;
        case Conn::Top:
        case Conn::Bot: return true;
        case Conn::Neg:
        case Conn::Box:
        case Conn::Dia: return equal(*a.lhs, *b.lhs);
        default: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    }
}

int Formula::depth() const {
    switch (kind()) {
        case Conn::Var:
        case Conn::Top:
        case Conn::Bot: return 0;
        case Conn::Neg:
        case Conn::Box:
        case Conn::Dia: return 1 + left().depth();
        default: return 1 + std::max(left().depth(), right().depth());
    }
}

void Formula::collect_vars(const Node& n, std::vector<int>& out) {
    switch (n.kind) {
        case Conn::Var: out.push_back(n.var); return;
        case Conn::Top:
        case Conn::Bot: return;
        case Conn::Neg:
        case Conn::Box:
        case Conn::Dia: collect_vars(*n.lhs, out); return;
        default:
            collect_vars(*n.lhs, out);
            collect_vars(*n.rhs, out);
            return;
    }
}

std::vector<int> Formula::variables() const {
    std::vector<int> out;
    collect_vars(*node_, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok { Top, Bot, Neg, And, Or, Imp, Box, Dia, Rhd, LParen, RParen, Var, End };

struct Token {
    Tok kind;
    int var = -1;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void bump() {
        if (pos_ < text_.size() && text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
        tok_.line = line_;
        tok_.column = col_;
        if (pos_ >= text_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        char c = text_[pos_];
        switch (c) {
            case 'T': bump(); tok_.kind = Tok::Top; return;
            case 'F': bump(); tok_.kind = Tok::Bot; return;
            case '~': bump(); tok_.kind = Tok::Neg; return;
            case '&': bump(); tok_.kind = Tok::And; return;
            case '(': bump(); tok_.kind = Tok::LParen; return;
            case ')': bump(); tok_.kind = Tok::RParen; return;
            case '|':
                bump();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    bump();
                    tok_.kind = Tok::Rhd;
                } else {
                    tok_.kind = Tok::Or;
                }
                return;
            case '-':
                bump();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    bump();
                    tok_.kind = Tok::Imp;
                    return;
                }
                fail("expected '>' after '-'");
            case '[':
                bump();
                if (pos_ < text_.size() && text_[pos_] == ']') {
                    bump();
                    tok_.kind = Tok::Box;
                    return;
                }
                fail("expected ']' after '['");
            case '<':
                bump();
                if (pos_ < text_.size() && text_[pos_] == '>') {
                    bump();
                    tok_.kind = Tok::Dia;
                    return;
                }
                fail("expected '>' after '<'");
            case 'p': {
                bump();
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    fail("expected digits after 'p'");
                long idx = 0;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    idx = idx * 10 + (text_[pos_] - '0');
                    if (idx > 1000000) fail("variable index too large");
                    bump();
                }
                tok_.kind = Tok::Var;
                tok_.var = static_cast<int>(idx);
                return;
            }
            default:
                fail(std::string("unexpected character '") + c + "'");
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

const char* token_name(Tok t) {
    switch (t) {
        case Tok::Top: return "'T'";
        case Tok::Bot: return "'F'";
        case Tok::Neg: return "'~'";
        case Tok::And: return "'&'";
        case Tok::Or: return "'|'";
        case Tok::Imp: return "'->'";
        case Tok::Box: return "'[]'";
        case Tok::Dia: return "'<>'";
        case Tok::Rhd: return "'|>'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Var: return "variable";
        case Tok::End: return "end of input";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Formula parse_all() {
        Formula f = parse_imp();
        const Token& t = lex_.peek();
        if (t.kind != Tok::End)
            throw ParseError(std::string("unexpected ") + token_name(t.kind), t.line, t.column);
        return f;
    }

private:
    Formula parse_imp() {
        Formula lhs = parse_rhd();
        if (lex_.peek().kind == Tok::Imp) {
            lex_.take();
            return Formula::imp(std::move(lhs), parse_imp());
        }
        return lhs;
    }

    Formula parse_rhd() {
        Formula lhs = parse_or();
        if (lex_.peek().kind == Tok::Rhd) {
            lex_.take();
            Formula rhs = parse_or();
            const Token& t = lex_.peek();
            if (t.kind == Tok::Rhd)
                throw ParseError("'|>' is non-associative; parenthesize the chain", t.line, t.column);
            return Formula::rhd(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (lex_.peek().kind == Tok::Or) {
            lex_.take();
            f = Formula::disj(std::move(f), parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (lex_.peek().kind == Tok::And) {
            lex_.take();
            f = Formula::conj(std::move(f), parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        const Token t = lex_.peek();
        switch (t.kind) {
            case Tok::Neg: lex_.take(); return Formula::neg(parse_unary());
            case Tok::Box: lex_.take(); return Formula::box(parse_unary());
            case Tok::Dia: lex_.take(); return Formula::dia(parse_unary());
            case Tok::Top: lex_.take(); return Formula::top();
            case Tok::Bot: lex_.take(); return Formula::bot();
            case Tok::Var: lex_.take(); return Formula::var(t.var);
            case Tok::LParen: {
                lex_.take();
                Formula f = parse_imp();
                const Token& r = lex_.peek();
                if (r.kind != Tok::RParen)
                    throw ParseError(std::string("expected ')', got ") + token_name(r.kind),
                                     r.line, r.column);
                lex_.take();
                return f;
            }
            default:
                throw ParseError(std::string("unexpected ") + token_name(t.kind), t.line, t.column);
        }
    }

    Lexer lex_;
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

// --------------------------------------------------------------- printing

namespace {

// Binding strength used for minimal parenthesization.
int precedence(Conn k) {
    switch (k) {
        case Conn::Imp: return 1;
        case Conn::Rhd: return 2;
        case Conn::Or: return 3;
        case Conn::And: return 4;
        case Conn::Neg:
        case Conn::Box:
        case Conn::Dia: return 5;
        default: return 6;
    }
}

void render_into(const Formula& f, std::string& out, int min_prec, bool paren_rhd = false) {
    const int prec = precedence(f.kind());
    const bool parens = prec < min_prec || (paren_rhd && f.kind() == Conn::Rhd);
    if (parens) out += '(';
    switch (f.kind()) {
        case Conn::Var:
            out += 'p';
            out += std::to_string(f.var_index());
            break;
        case Conn::Top: out += 'T'; break;
        case Conn::Bot: out += 'F'; break;
        case Conn::Neg:
            out += '~';
            render_into(f.left(), out, prec);
            break;
        case Conn::Box:
            out += "[]";
            render_into(f.left(), out, prec);
            break;
        case Conn::Dia:
            out += "<>";
            render_into(f.left(), out, prec);
            break;
        case Conn::And:
            render_into(f.left(), out, prec);
            out += " & ";
            render_into(f.right(), out, prec + 1);
            break;
        case Conn::Or:
            render_into(f.left(), out, prec);
            out += " | ";
            render_into(f.right(), out, prec + 1);
            break;
        case Conn::Rhd:
            render_into(f.left(), out, prec + 1);
            out += " |> ";
            render_into(f.right(), out, prec + 1);
            break;
        case Conn::Imp:
            // |> operands of -> carry parentheses, as the axioms are written
            render_into(f.left(), out, prec + 1, true);
            out += " -> ";
            render_into(f.right(), out, prec, true);
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
    std::string out;
    render_into(f, out, 0);
    return out;
}

// ---------------------------------------------------------------- schemas

namespace {

std::vector<Schema> build_schema_library() {
    const Formula p = Formula::var(0), q = Formula::var(1), r = Formula::var(2);
    std::vector<Schema> lib;
    lib.push_back({"K", Formula::imp(Formula::box(Formula::imp(p, q)),
                                     Formula::imp(Formula::box(p), Formula::box(q))), 2});
    lib.push_back({"GL", Formula::imp(Formula::box(Formula::imp(Formula::box(p), p)),
                                      Formula::box(p)), 1});
    lib.push_back({"J1", Formula::imp(Formula::box(Formula::imp(p, q)), Formula::rhd(p, q)), 2});
    lib.push_back({"J2", Formula::imp(Formula::conj(Formula::rhd(p, q), Formula::rhd(q, r)),
                                      Formula::rhd(p, r)), 3});
    lib.push_back({"J3", Formula::imp(Formula::conj(Formula::rhd(p, r), Formula::rhd(q, r)),
                                      Formula::rhd(Formula::disj(p, q), r)), 3});
    lib.push_back({"J4", Formula::imp(Formula::rhd(p, q),
                                      Formula::imp(Formula::dia(p), Formula::dia(q))), 2});
    lib.push_back({"J5", Formula::rhd(Formula::dia(p), p), 1});
    lib.push_back({"M", Formula::imp(Formula::rhd(p, q),
                                     Formula::rhd(Formula::conj(p, Formula::box(r)),
                                                  Formula::conj(q, Formula::box(r)))), 3});
    lib.push_back({"P", Formula::imp(Formula::rhd(p, q), Formula::box(Formula::rhd(p, q))), 2});
    lib.push_back({"W", Formula::imp(Formula::rhd(p, q),
                                     Formula::rhd(p, Formula::conj(q, Formula::box(Formula::neg(p))))), 2});
    return lib;
}

Formula substitute(const Formula& f, const std::vector<Formula>& args) {
    switch (f.kind()) {
        case Conn::Var: {
            const int i = f.var_index();
            if (i >= static_cast<int>(args.size()))
                throw UnboundVariableError("schema uses schematic variable " + std::to_string(i) +
                                           " with no binding");
            return args[i];
        }
        case Conn::Top: return Formula::top();
        case Conn::Bot: return Formula::bot();
        case Conn::Neg: return Formula::neg(substitute(f.left(), args));
        case Conn::Box: return Formula::box(substitute(f.left(), args));
        case Conn::Dia: return Formula::dia(substitute(f.left(), args));
        case Conn::And: return Formula::conj(substitute(f.left(), args), substitute(f.right(), args));
        case Conn::Or: return Formula::disj(substitute(f.left(), args), substitute(f.right(), args));
        case Conn::Imp: return Formula::imp(substitute(f.left(), args), substitute(f.right(), args));
        case Conn::Rhd: return Formula::rhd(substitute(f.left(), args), substitute(f.right(), args));
    }
    throw InvalidInputError("corrupt formula node");
}

}  // namespace

const std::vector<Schema>& schema_library() {
    static const std::vector<Schema> lib = build_schema_library();
    return lib;
}

const Schema& schema(std::string_view name) {
    for (const Schema& s : schema_library())
        if (s.name == name) return s;
    throw InvalidInputError("unknown schema: " + std::string(name));
}

Formula instantiate(const Schema& s, const std::vector<Formula>& args) {
    return substitute(s.schema_template, args);
}

Formula standard_instance(const Schema& s) {
    return instantiate(s, {Formula::var(0), Formula::var(1), Formula::var(2)});
}

Formula box_as_rhd(const Formula& f) {
    switch (f.kind()) {
        case Conn::Var:
        case Conn::Top:
        case Conn::Bot: return f;
        case Conn::Neg: return Formula::neg(box_as_rhd(f.left()));
        case Conn::Box: return Formula::rhd(Formula::neg(box_as_rhd(f.left())), Formula::bot());
        case Conn::Dia: return Formula::neg(Formula::rhd(box_as_rhd(f.left()), Formula::bot()));
        case Conn::And: return Formula::conj(box_as_rhd(f.left()), box_as_rhd(f.right()));
        case Conn::Or: return Formula::disj(box_as_rhd(f.left()), box_as_rhd(f.right()));
        case Conn::Imp: return Formula::imp(box_as_rhd(f.left()), box_as_rhd(f.right()));
        case Conn::Rhd: return Formula::rhd(box_as_rhd(f.left()), box_as_rhd(f.right()));
    }
    throw InvalidInputError("corrupt formula node");
}

std::vector<Formula> delta_family(int n) {
    if (n < 0) throw InvalidInputError("delta_family index must be nonnegative");
    std::vector<Formula> out;
    out.push_back(Formula::dia(Formula::var(0)));
    for (int i = 0; i < n; ++i)
        out.push_back(Formula::box(
            Formula::imp(Formula::var(i), Formula::dia(Formula::var(i + 1)))));
    return out;
}

}  // namespace cltop
