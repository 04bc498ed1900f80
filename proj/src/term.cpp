#include "izr/term.hpp"

#include <cctype>
#include <sstream>
#include <unordered_set>

namespace izr {

TermPtr Term::zero() {
    static const TermPtr z(new Term(Kind::Zero, {}, nullptr, nullptr));
    return z;
}

TermPtr Term::variable(std::string name) {
    return TermPtr(new Term(Kind::Variable, std::move(name), nullptr, nullptr));
}

TermPtr Term::arrow(TermPtr left, TermPtr right) {
    if (!left || !right) throw std::invalid_argument("arrow: null subterm");
    return TermPtr(new Term(Kind::Arrow, {}, std::move(left), std::move(right)));
}

TermPtr prime(TermPtr t) { return Term::arrow(std::move(t), Term::zero()); }

TermPtr meet(TermPtr a, TermPtr b) { return prime(Term::arrow(std::move(a), prime(std::move(b)))); }

TermPtr join(TermPtr a, TermPtr b) { return prime(meet(prime(std::move(a)), prime(std::move(b)))); }

bool equal(const Term& a, const Term& b) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case Term::Kind::Zero: return true;
        case Term::Kind::Variable: return a.var_name() == b.var_name();
        case Term::Kind::Arrow:
            return equal(*a.left(), *b.left()) && equal(*a.right(), *b.right());
    }
    return false;
}

bool equal(const TermPtr& a, const TermPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return equal(*a, *b);
}

namespace {

void print_term(const Term& t, std::string& out) {
    switch (t.kind()) {
        case Term::Kind::Zero:
            out += '0';
            break;
        case Term::Kind::Variable:
            out += t.var_name();
            break;
        case Term::Kind::Arrow:
            if (t.left()->is_arrow()) {
                out += '(';
                print_term(*t.left(), out);
                out += ')';
            } else {
                print_term(*t.left(), out);
            }
            out += " -> ";
            print_term(*t.right(), out);
            break;
    }
}

void collect_vars(const Term& t, std::vector<std::string>& order,
                  std::unordered_set<std::string>& seen) {
    switch (t.kind()) {
        case Term::Kind::Zero:
            break;
        case Term::Kind::Variable:
            if (seen.insert(t.var_name()).second) order.push_back(t.var_name());
            break;
        case Term::Kind::Arrow:
            collect_vars(*t.left(), order, seen);
            collect_vars(*t.right(), order, seen);
            break;
    }
}

}  // namespace

std::string to_string(const Term& t) {
    std::string out;
    print_term(t, out);
    return out;
}

std::vector<std::string> variables_of(const Term& t) {
    std::vector<std::string> order;
    std::unordered_set<std::string> seen;
    collect_vars(t, order, seen);
    return order;
}

std::vector<std::string> variables_of(const Identity& id) {
    std::vector<std::string> order;
    std::unordered_set<std::string> seen;
    collect_vars(*id.lhs, order, seen);
    collect_vars(*id.rhs, order, seen);
    return order;
}

std::string to_string(const Identity& id) {
    return to_string(*id.lhs) + " = " + to_string(*id.rhs);
}

bool is_transfer_shape(const Identity& id) {
    auto shaped = [](const Term& t) { return t.is_arrow() && t.left()->is_arrow(); };
    return shaped(*id.lhs) && shaped(*id.rhs);
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

enum class Tok { Zero, Ident, Arrow, Prime, Caret, Vee, LParen, RParen, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_ws();
            std::size_t start = i_;
            if (i_ >= src_.size()) {
                out.push_back({Tok::End, "", start});
                return out;
            }
            char c = src_[i_];
            if (c == '0') {
                ++i_;
                out.push_back({Tok::Zero, "0", start});
            } else if (c == '-' && i_ + 1 < src_.size() && src_[i_ + 1] == '>') {
                i_ += 2;
                out.push_back({Tok::Arrow, "->", start});
            } else if (starts_with_utf8_arrow()) {
                i_ += 3;
                out.push_back({Tok::Arrow, "->", start});
            } else if (c == '\'') {
                ++i_;
                out.push_back({Tok::Prime, "'", start});
            } else if (c == '^') {
                ++i_;
                out.push_back({Tok::Caret, "^", start});
            } else if (c == '(') {
                ++i_;
                out.push_back({Tok::LParen, "(", start});
            } else if (c == ')') {
                ++i_;
                out.push_back({Tok::RParen, ")", start});
            } else if (c == '=') {
                ++i_;
                out.push_back({Tok::Equals, "=", start});
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                std::string word(1, c);
                ++i_;
                while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
                    word += src_[i_++];
                }
                if (word == "v")
                    out.push_back({Tok::Vee, "v", start});
                else
                    out.push_back({Tok::Ident, word, start});
            } else {
                throw ParseError("unexpected character '" + std::string(1, c) + "'", start);
            }
        }
    }

private:
    void skip_ws() {
        while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    }

    bool starts_with_utf8_arrow() const {
        // U+2192 RIGHTWARDS ARROW
        return i_ + 2 < src_.size() && static_cast<unsigned char>(src_[i_]) == 0xE2 &&
               static_cast<unsigned char>(src_[i_ + 1]) == 0x86 &&
               static_cast<unsigned char>(src_[i_ + 2]) == 0x92;
    }

    std::string_view src_;
    std::size_t i_ = 0;
};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    TermPtr parse_full_term() {
        TermPtr t = parse_impl();
        expect_end();
        return t;
    }

    Identity parse_full_identity() {
        TermPtr lhs = parse_impl();
        if (peek().kind != Tok::Equals)
            throw ParseError("expected '=' separator", peek().pos);
        advance();
        TermPtr rhs = parse_impl();
        expect_end();
        return Identity{std::move(lhs), std::move(rhs), {}};
    }

private:
    const Token& peek() const { return toks_[i_]; }
    void advance() { ++i_; }

    void expect_end() {
        if (peek().kind != Tok::End)
            throw ParseError("unexpected trailing input '" + peek().text + "'", peek().pos);
    }

    TermPtr parse_impl() {
        TermPtr lhs = parse_or();
        if (peek().kind == Tok::Arrow) {
            advance();
            return Term::arrow(std::move(lhs), parse_impl());
        }
        return lhs;
    }

    TermPtr parse_or() {
        TermPtr t = parse_and();
        while (peek().kind == Tok::Vee) {
            advance();
            t = join(std::move(t), parse_and());
        }
        return t;
    }

    TermPtr parse_and() {
        TermPtr t = parse_primed();
        while (peek().kind == Tok::Caret) {
            advance();
            t = meet(std::move(t), parse_primed());
        }
        return t;
    }

    TermPtr parse_primed() {
        TermPtr t = parse_atom();
        while (peek().kind == Tok::Prime) {
            advance();
            t = prime(std::move(t));
        }
        return t;
    }

    TermPtr parse_atom() {
        const Token& tok = peek();
        switch (tok.kind) {
            case Tok::Zero:
                advance();
                return Term::zero();
            case Tok::Ident: {
                std::string name = tok.text;
                advance();
                return Term::variable(std::move(name));
            }
            case Tok::LParen: {
                advance();
                TermPtr t = parse_impl();
                if (peek().kind != Tok::RParen)
                    throw ParseError("expected ')'", peek().pos);
                advance();
                return t;
            }
            case Tok::Arrow:
            case Tok::Prime:
            case Tok::Caret:
            case Tok::Vee:
                throw ParseError("operator '" + tok.text + "' has no left operand", tok.pos);
            default:
                throw ParseError("expected a term", tok.pos);
        }
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view src) {
    return Parser(Lexer(src).run()).parse_full_term();
}

Identity parse_identity(std::string_view src) {
    return Parser(Lexer(src).run()).parse_full_identity();
}

const Identity* IdentityCatalog::find(std::string_view name) const {
    for (const Identity& id : entries_)
        if (id.name == name) return &id;
    return nullptr;
}

void IdentityCatalog::add(Identity id) {
    if (id.name.empty()) throw std::invalid_argument("catalog entries must be named");
    if (find(id.name)) throw std::invalid_argument("duplicate catalog name '" + id.name + "'");
    entries_.push_back(std::move(id));
}

void IdentityCatalog::add(Identity id, std::string name) {
    id.name = std::move(name);
    add(std::move(id));
}

IdentityCatalog parse_catalog(std::string_view text) {
    IdentityCatalog cat;
    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view line =
            text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++lineno;

        if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string_view::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);

        std::size_t colon = line.find(':');
        if (colon == std::string_view::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'NAME: identity'", 0);
        std::string name(line.substr(0, colon));
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        try {
            Identity id = parse_identity(line.substr(colon + 1));
            id.name = name;
            cat.add(std::move(id));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), 0);
        }
    }
    return cat;
}

}  // namespace izr
