#include "sympclif/expr.hpp"

#include <cctype>

namespace sympclif {

bool OpExpr::operator==(const OpExpr& o) const {
    if (node != o.node || kids.size() != o.kids.size()) return false;
    switch (node) {
        case Node::Num:
            if (!(value == o.value)) return false;
            break;
        case Node::Pow:
            if (exponent != o.exponent) return false;
            break;
        case Node::Generator:
            if (gen != o.gen || index != o.index) return false;
            break;
        case Node::Named:
            if (name.kind != o.name.kind || name.j != o.name.j || name.k != o.name.k) return false;
            break;
        default:
            break;
    }
    for (size_t i = 0; i < kids.size(); ++i)
        if (!(kids[i] == o.kids[i])) return false;
    return true;
}

namespace {

struct Token {
    enum class Kind { Number, Word, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    Rat value{0};
    size_t offset = 0;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    Token next() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
        Token t;
        t.offset = pos;
        if (pos >= src.size()) return t;
        char c = src[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
            std::string num = src.substr(start, pos - start), den = "1";
            if (pos + 1 < src.size() && src[pos] == '/' &&
                std::isdigit(static_cast<unsigned char>(src[pos + 1]))) {
                ++pos;
                size_t dstart = pos;
                while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
                den = src.substr(dstart, pos - dstart);
            }
            t.kind = Token::Kind::Number;
            t.value = Rat(num + "/" + den);
            t.value.canonicalize();
            t.text = src.substr(start, pos - start);
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isalnum(static_cast<unsigned char>(src[pos]))) ++pos;
            t.kind = Token::Kind::Word;
            t.text = src.substr(start, pos - start);
            return t;
        }
        if (std::string("+-*^(),").find(c) != std::string::npos) {
            t.kind = Token::Kind::Symbol;
            t.text = std::string(1, c);
            ++pos;
            return t;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
    }
};

struct Parser {
    std::vector<Token> toks;
    size_t idx = 0;

    explicit Parser(const std::string& text) {
        Lexer lx(text);
        while (true) {
            Token t = lx.next();
            bool end = t.kind == Token::Kind::End;
            toks.push_back(std::move(t));
            if (end) break;
        }
    }

    const Token& peek() const { return toks[idx]; }
    Token take() { return toks[idx++]; }
    bool at_symbol(const char* s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }
    void expect_symbol(const char* s) {
        if (!at_symbol(s)) throw ParseError(std::string("expected '") + s + "'", peek().offset);
        ++idx;
    }

    long integer_arg() {
        if (peek().kind != Token::Kind::Number || peek().value.get_den() != 1)
            throw ParseError("expected integer", peek().offset);
        return take().value.get_num().get_si();
    }

    // sum := neg (('+'|'-') neg)*
    OpExpr sum() {
        OpExpr acc = negation();
        while (at_symbol("+") || at_symbol("-")) {
            bool plus = peek().text == "+";
            ++idx;
            OpExpr rhs = negation();
            OpExpr node;
            node.node = plus ? OpExpr::Node::Add : OpExpr::Node::Sub;
            node.kids = {std::move(acc), std::move(rhs)};
            acc = std::move(node);
        }
        return acc;
    }

    // neg := '-' neg | product  (unary minus binds below '*')
    OpExpr negation() {
        if (at_symbol("-")) {
            size_t off = peek().offset;
            ++idx;
            OpExpr inner = negation();
            OpExpr node;
            node.node = OpExpr::Node::Neg;
            node.kids = {std::move(inner)};
            (void)off;
            return node;
        }
        return product();
    }

    // product := power ('*' power)*
    OpExpr product() {
        OpExpr acc = power();
        while (at_symbol("*")) {
            ++idx;
            OpExpr rhs = power();
            OpExpr node;
            node.node = OpExpr::Node::Mul;
            node.kids = {std::move(acc), std::move(rhs)};
            acc = std::move(node);
        }
        return acc;
    }

    // power := atom ('^' uint)*
    OpExpr power() {
        OpExpr base = atom();
        while (at_symbol("^")) {
            size_t off = peek().offset;
            ++idx;
            if (peek().kind != Token::Kind::Number || peek().value.get_den() != 1 ||
                peek().value < 0)
                throw ParseError("exponent must be a nonnegative integer", off);
            long e = take().value.get_num().get_si();
            OpExpr node;
            node.node = OpExpr::Node::Pow;
            node.exponent = static_cast<int>(e);
            node.kids = {std::move(base)};
            base = std::move(node);
        }
        return base;
    }

    OpExpr atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::End) throw ParseError("unexpected end of input", t.offset);
        if (at_symbol("(")) {
            ++idx;
            OpExpr inner = sum();
            expect_symbol(")");
            return inner;
        }
        if (t.kind == Token::Kind::Number) {
            OpExpr node;
            node.node = OpExpr::Node::Num;
            node.value = take().value;
            return node;
        }
        if (t.kind == Token::Kind::Word) return word_atom();
        throw ParseError("unexpected token '" + t.text + "'", t.offset);
    }

    OpExpr word_atom() {
        Token t = take();
        const std::string& w = t.text;
        OpExpr node;
        if (w == "i") {
            node.node = OpExpr::Node::ImagUnit;
            return node;
        }
        if (w == "tau") {
            node.node = OpExpr::Node::TauSym;
            return node;
        }
        if (w == "alpha") {
            node.node = OpExpr::Node::AlphaSym;
            return node;
        }
        static const std::pair<const char*, Gen> gens[] = {
            {"x", Gen::X}, {"y", Gen::Y}, {"q", Gen::Q},
            {"dx", Gen::Dx}, {"dy", Gen::Dy}, {"dq", Gen::Dq},
        };
        for (const auto& [nm, g] : gens) {
            if (w == nm) {
                node.node = OpExpr::Node::Generator;
                node.gen = g;
                node.index = 1;
                if (at_symbol("(")) {
                    ++idx;
                    node.index = static_cast<int>(integer_arg());
                    expect_symbol(")");
                }
                return node;
            }
        }
        if (auto kind = op_kind_from_word(w)) {
            node.node = OpExpr::Node::Named;
            node.name = OpName(*kind);
            return node;
        }
        // indexed operator families: X(j,k), Y(j,k), Z(l) or Z(j,k), Dx(j), Dy(j)
        if (w == "X" || w == "Y" || w == "Z" || w == "Dx" || w == "Dy") {
            if (!at_symbol("("))
                throw ParseError("operator '" + w + "' needs an index list", peek().offset);
            ++idx;
            long j = integer_arg();
            long k = -1;
            if (at_symbol(",")) {
                ++idx;
                k = integer_arg();
            }
            expect_symbol(")");
            node.node = OpExpr::Node::Named;
            if (w == "Dx" || w == "Dy") {
                if (k != -1) throw ParseError("'" + w + "' takes one index", t.offset);
                node.name = OpName(w == "Dx" ? OpKind::Dx : OpKind::Dy, static_cast<int>(j));
            } else if (k == -1) {
                if (w != "Z") throw ParseError("'" + w + "' takes two indices", t.offset);
                node.name = OpName(OpKind::Zreal, static_cast<int>(j));
            } else {
                OpKind kk = w == "X" ? OpKind::Xjk : w == "Y" ? OpKind::Yjk : OpKind::Zjk;
                node.name = OpName(kk, static_cast<int>(j), static_cast<int>(k));
            }
            return node;
        }
        throw ParseError("unknown identifier '" + w + "'", t.offset);
    }

    OpExpr run() {
        OpExpr e = sum();
        if (peek().kind != Token::Kind::End)
            throw ParseError("unexpected token '" + peek().text + "'", peek().offset);
        return e;
    }
};

int precedence_of(const OpExpr& e) {
    switch (e.node) {
        case OpExpr::Node::Add:
        case OpExpr::Node::Sub: return 1;
        case OpExpr::Node::Neg: return 2;
        case OpExpr::Node::Mul: return 3;
        case OpExpr::Node::Pow: return 4;
        default: return 5;
    }
}

std::string render_prec(const OpExpr& e, int min_prec) {
    std::string out;
    int prec = precedence_of(e);
    switch (e.node) {
        case OpExpr::Node::Add:
            out = render_prec(e.kids[0], 1) + " + " + render_prec(e.kids[1], 2);
            break;
        case OpExpr::Node::Sub:
            out = render_prec(e.kids[0], 1) + " - " + render_prec(e.kids[1], 2);
            break;
        case OpExpr::Node::Neg:
            out = "-" + render_prec(e.kids[0], 3);
            break;
        case OpExpr::Node::Mul:
            out = render_prec(e.kids[0], 3) + "*" + render_prec(e.kids[1], 4);
            break;
        case OpExpr::Node::Pow:
            out = render_prec(e.kids[0], 5) + "^" + std::to_string(e.exponent);
            break;
        case OpExpr::Node::Num: {
            std::ostringstream os;
            os << e.value;
            out = os.str();
            break;
        }
        case OpExpr::Node::ImagUnit: out = "i"; break;
        case OpExpr::Node::TauSym: out = "tau"; break;
        case OpExpr::Node::AlphaSym: out = "alpha"; break;
        case OpExpr::Node::Generator: {
            static const char* names[6] = {"x", "y", "q", "dx", "dy", "dq"};
            out = names[static_cast<int>(e.gen)];
            if (e.index != 1) out += "(" + std::to_string(e.index) + ")";
            break;
        }
        case OpExpr::Node::Named: out = op_spelling(e.name); break;
    }
    if (prec < min_prec) return "(" + out + ")";
    return out;
}

}  // namespace

OpExpr parse(const std::string& text) {
    Parser p(text);
    return p.run();
}

std::string render(const OpExpr& e) { return render_prec(e, 0); }

WeylElement evaluate(const OpExpr& e, int n) {
    switch (e.node) {
        case OpExpr::Node::Add: return evaluate(e.kids[0], n) + evaluate(e.kids[1], n);
        case OpExpr::Node::Sub: return evaluate(e.kids[0], n) - evaluate(e.kids[1], n);
        case OpExpr::Node::Mul: return evaluate(e.kids[0], n) * evaluate(e.kids[1], n);
        case OpExpr::Node::Pow: return weyl_pow(evaluate(e.kids[0], n), e.exponent);
        case OpExpr::Node::Neg: return -evaluate(e.kids[0], n);
        case OpExpr::Node::Num: return WeylElement::unit(n, Scalar::of_rat(e.value));
        case OpExpr::Node::ImagUnit: return WeylElement::unit(n, Scalar::i());
        case OpExpr::Node::TauSym: return WeylElement::unit(n, Scalar::tau());
        case OpExpr::Node::AlphaSym: return WeylElement::unit(n, Scalar::alpha());
        case OpExpr::Node::Generator: return WeylElement::generator(e.gen, e.index, n);
        case OpExpr::Node::Named: return build(e.name, n);
    }
    throw std::logic_error("evaluate: unhandled node");
}

}  // namespace sympclif
