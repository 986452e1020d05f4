#ifndef CLTOP_FORMULA_HPP
#define CLTOP_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cltop/errors.hpp"

namespace cltop {

// Formulas of the language with Box, Dia and the binary operator Rhd ("|>").
//
// ASCII surface syntax:   T  F  ~  &  |  ->  []  <>  |>  ( )  p<digits>
// Precedence, tightest first:  ~ [] <>  >  &  >  |  >  |>  >  ->
// "->" is right-associative, "&" and "|" left-associative, and "|>" is
// non-associative: "p0 |> p1 |> p2" is a syntax error.

enum class Conn { Var, Top, Bot, Neg, And, Or, Imp, Box, Dia, Rhd };

class Formula {
public:
    static Formula var(int index);
    static Formula top();
    static Formula bot();
    static Formula neg(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    static Formula box(Formula f);
    static Formula dia(Formula f);
    static Formula rhd(Formula a, Formula b);

    Conn kind() const { return node_->kind; }
    int var_index() const;

    // Unary operators store their operand on the left.
    Formula left() const;
    Formula right() const;

    bool operator==(const Formula& o) const { return equal(*node_, *o.node_); }
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // Atoms and constants have depth 0; each connective adds one.
    int depth() const;

    // Sorted, duplicate-free variable indices occurring in the formula.
    std::vector<int> variables() const;

private:
    struct Node {
        Conn kind;
        int var = -1;
        std::shared_ptr<const Node> lhs;
        std::shared_ptr<const Node> rhs;
    };

    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static bool equal(const Node& a, const Node& b);
    static void collect_vars(const Node& n, std::vector<int>& out);

    std::shared_ptr<const Node> node_;

    friend class FormulaBuilderAccess;
};

Formula parse(std::string_view text);
std::string render(const Formula& f);

// An axiom schema over the schematic variables p, q, r (template indices
// 0, 1, 2). The library holds exactly K, GL, J1..J5, M, P and W.
struct Schema {
    std::string name;
    Formula schema_template;
    int arity;  // number of schematic variables used
};

const std::vector<Schema>& schema_library();
const Schema& schema(std::string_view name);

// Simultaneous substitution of args[i] for schematic variable i. Throws
// UnboundVariableError when the template uses a variable with no binding.
Formula instantiate(const Schema& s, const std::vector<Formula>& args);

// instantiate with p -> p0, q -> p1, r -> p2.
Formula standard_instance(const Schema& s);

// Rewrite Box f as (~f) |> F and Dia f as ~(f |> F); the result is Box- and
// Dia-free.
Formula box_as_rhd(const Formula& f);

// [<>p0, [](p0 -> <>p1), ..., [](p<n-1> -> <>p<n>)], n+1 formulas.
std::vector<Formula> delta_family(int n);

}  // namespace cltop

#endif
