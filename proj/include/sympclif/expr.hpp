#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sympclif/oplib.hpp"

namespace sympclif {

struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

// Abstract syntax for operator expressions. Precedence: ^ above *, * above
// unary minus, unary minus above binary +/-.
struct OpExpr {
    enum class Node { Add, Sub, Mul, Pow, Neg, Num, ImagUnit, TauSym, AlphaSym, Generator, Named };

    Node node = Node::Num;
    std::vector<OpExpr> kids;   // Add/Sub/Mul: 2, Neg/Pow: 1
    Rat value{0};               // Num
    int exponent = 0;           // Pow
    Gen gen = Gen::X;           // Generator
    int index = 1;              // Generator index (1-based)
    OpName name{OpKind::Ds};    // Named

    bool operator==(const OpExpr& o) const;
};

OpExpr parse(const std::string& text);
std::string render(const OpExpr& e);
WeylElement evaluate(const OpExpr& e, int n);

}  // namespace sympclif
