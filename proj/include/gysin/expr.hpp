#pragma once

// Integrand expressions.
//
// Grammar (whitespace is insignificant):
//
//   sum     := product (('+' | '-') product)*
//   product := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'xi_' INDEX | 't_' INDEX | NAME
//            | 's[' INTEGER '](' NAME ')' | 'c[' INTEGER '](' NAME ')'
//            | 'c1(' NAME ')' | '(' sum ')'
//
// so '^' binds tighter than unary minus, which binds tighter than '*', which
// binds tighter than binary '+'/'-'. There is no division.

#include "gysin/bundles.hpp"
#include "gysin/chow_ring.hpp"
#include "gysin/flag_push.hpp"
#include "gysin/laurent.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gysin {

enum class ExprKind {
    Integer,
    Xi,         // xi_k
    TVar,       // t_k
    Generator,  // base ring generator by name
    ClassRef,   // s[i](E) or c[i](E)
    LineC1,     // c1(L)
    Add,
    Sub,
    Mul,
    Neg,
    Pow,
};

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

struct Expression {
    ExprKind kind = ExprKind::Integer;
    mpz_class value;         // Integer
    unsigned index = 0;      // Xi / TVar / ClassRef index, Pow exponent
    char class_kind = 's';   // ClassRef: 's' or 'c'
    std::string name;        // Generator name, ClassRef bundle, LineC1 line bundle
    ExprPtr lhs, rhs;        // Add/Sub/Mul: both; Neg/Pow: lhs
    std::size_t offset = 0;  // byte offset of the node in the source text
};

/// Throws ParseError (a ValidationError) carrying the byte offset.
ExprPtr parse(std::string_view text);

/// Structural equality, ignoring source offsets.
bool same_tree(const Expression& a, const Expression& b);

/// Canonical text with minimal parentheses; parse(render(e)) is the same tree.
std::string render(const Expression& e);

/// Constructor-style dump, e.g. "Add(Pow(xi_1,2),Mul(3,xi_2))".
std::string describe(const Expression& e);

/// Values for the free symbols of an expression.
class Bindings {
public:
    explicit Bindings(RingDescriptor descriptor);

    /// Every generator of the ring, by its own name.
    Bindings& bind_generators();
    Bindings& bind(const std::string& name, RingElement value);
    /// s[i](name) and c[i](name) for all i.
    Bindings& bind_bundle(const VectorBundleData& bundle);
    /// c1(name).
    Bindings& bind_line(const std::string& name, RingElement c1);

    const RingDescriptor& descriptor() const noexcept { return descriptor_; }
    const RingElement* symbol(const std::string& name) const;
    const VectorBundleData* bundle(const std::string& name) const;
    const RingElement* line(const std::string& name) const;

private:
    RingDescriptor descriptor_;
    std::map<std::string, RingElement> symbols_;
    std::map<std::string, VectorBundleData> bundles_;
    std::map<std::string, RingElement> lines_;
};

/// Evaluates with xi_k and t_k both sent to the variable t_k of the given
/// arity. Throws ValidationError for unbound symbols and indices above `arity`.
LaurentPoly eval(const Expression& e, const Bindings& bindings, std::size_t arity);

struct SymmetryReport {
    bool symmetric = true;
    /// 1-based adjacent positions (p, p+1) whose swap changes the integrand.
    std::vector<std::pair<int, int>> violations;
};

/// Whether f is invariant under permutations of the xi within each block of
/// the flag. Advisory: push() accepts any f.
SymmetryReport check_block_symmetry(const LaurentPoly& f, const FlagSpec& spec);
SymmetryReport check_block_symmetry(const Expression& e, const Bindings& bindings,
                                    const FlagSpec& spec);

} // namespace gysin
