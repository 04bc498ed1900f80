#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace izr {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// A term over the core signature {->, 0} plus variables. The derived
// operators ' (prime), ^ (meet) and v (join) are definitional macros:
//
//   t'    := t -> 0
//   a ^ b := (a -> b')'
//   a v b := (a' ^ b')'
//
// They are expanded at construction time and never appear in a Term.
// Terms are immutable; subterms may be shared freely across threads.
class Term {
public:
    enum class Kind { Variable, Zero, Arrow };

    static TermPtr zero();
    static TermPtr variable(std::string name);
    static TermPtr arrow(TermPtr left, TermPtr right);

    Kind kind() const { return kind_; }
    bool is_zero() const { return kind_ == Kind::Zero; }
    bool is_variable() const { return kind_ == Kind::Variable; }
    bool is_arrow() const { return kind_ == Kind::Arrow; }

    /// Variable name; only meaningful for Kind::Variable.
    const std::string& var_name() const { return name_; }
    /// Subterms; only meaningful for Kind::Arrow.
    const TermPtr& left() const { return left_; }
    const TermPtr& right() const { return right_; }

private:
    Term(Kind k, std::string name, TermPtr l, TermPtr r)
        : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

    Kind kind_;
    std::string name_;
    TermPtr left_;
    TermPtr right_;
};

TermPtr prime(TermPtr t);
TermPtr meet(TermPtr a, TermPtr b);
TermPtr join(TermPtr a, TermPtr b);

bool equal(const Term& a, const Term& b);
bool equal(const TermPtr& a, const TermPtr& b);

// ASCII rendering with minimal parentheses; -> prints right-associatively,
// so only arrow-shaped left operands are parenthesized.
std::string to_string(const Term& t);

// Variables in order of first occurrence, left to right.
std::vector<std::string> variables_of(const Term& t);

struct Identity {
    TermPtr lhs;
    TermPtr rhs;
    std::string name;  // optional label; empty when unnamed
};

// Union of both sides' variables, lhs first, first-occurrence order.
std::vector<std::string> variables_of(const Identity& id);
std::string to_string(const Identity& id);

// True iff both sides have the shape (s -> t) -> u.
bool is_transfer_shape(const Identity& id);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    /// Byte offset into the source string.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (ASCII `->` and Unicode arrows both accepted on input):
//
//   identity := impl "=" impl ;
//   impl     := orterm "->" impl | orterm ;
//   orterm   := andterm { "v" andterm } ;
//   andterm  := primed { "^" primed } ;
//   primed   := atom { "'" } ;
//   atom     := "0" | IDENT | "(" impl ")" ;
//
// IDENT is a letter followed by optional digits; the bare word `v` is the
// join operator and is not available as a variable name.
TermPtr parse_term(std::string_view src);
Identity parse_identity(std::string_view src);

class IdentityCatalog {
public:
    const std::vector<Identity>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const Identity* find(std::string_view name) const;
    /// Throws std::invalid_argument on empty or duplicate names.
    void add(Identity id);
    void add(Identity id, std::string name);

private:
    std::vector<Identity> entries_;
};

// Catalog file: one "NAME: lhs = rhs" per line, '#' starts a comment,
// blank lines ignored. Errors carry 1-based line numbers.
IdentityCatalog parse_catalog(std::string_view text);

}  // namespace izr
