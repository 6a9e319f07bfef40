// Type expressions of the quantum lambda calculus fragment handled here
// (unit, bit, qubit, !, tensor, sum) with a parser, printer, and the
// denotation into algebras.

#pragma once

#include "vna/algebra.hpp"

#include <memory>

namespace vna {

struct TypeExpr {
    enum class Kind { UnitI, Bit, Qubit, Bang, Tensor, Sum };

    Kind kind = Kind::UnitI;
    std::vector<TypeExpr> children;  // 1 for Bang, 2 for Tensor/Sum

    static TypeExpr unit_i() { return {Kind::UnitI, {}}; }
    static TypeExpr bit() { return {Kind::Bit, {}}; }
    static TypeExpr qubit() { return {Kind::Qubit, {}}; }
    static TypeExpr bang(TypeExpr inner) { return {Kind::Bang, {std::move(inner)}}; }
    static TypeExpr tensor(TypeExpr lhs, TypeExpr rhs) {
        return {Kind::Tensor, {std::move(lhs), std::move(rhs)}};
    }
    static TypeExpr sum(TypeExpr lhs, TypeExpr rhs) {
        return {Kind::Sum, {std::move(lhs), std::move(rhs)}};
    }

    bool operator==(const TypeExpr& other) const {
        return kind == other.kind && children == other.children;
    }
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& message, size_t pos)
        : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}
};

// Grammar: T ::= "I" | "bit" | "qubit" | "!" T | T "*" T | T "+" T | "(" T ")"
// with "!" tightest, "*" over "+", both binary operators left-associative.
TypeExpr parse_type(const std::string& text);

std::string print_type(const TypeExpr& t);

// [[I]] = C, [[bit]] = C (+) C, [[qubit]] = M_2, [[A*B]] = tensor,
// [[A+B]] = direct sum, [[!A]] = linf(nsp([[A]])).
Algebra denote_type(const TypeExpr& t);

}  // namespace vna
