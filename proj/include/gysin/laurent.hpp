#pragma once

// Laurent polynomials in auxiliary variables t_1..t_d with coefficients in a
// truncated ring, and the coefficient-extraction operator [m](f).

#include "gysin/chow_ring.hpp"
#include "gysin/determinant.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gysin {

/// Integer exponent vector t_1^{a_1} ... t_d^{a_d}; entries may be negative.
using Exponents = std::vector<int>;

/// The extracted monomial t_1^{e_1} ... t_d^{e_d}.
using ExtractionTarget = Exponents;

class LaurentPoly {
public:
    struct Entry {
        Exponents exponents;
        RingElement coeff;
    };

    LaurentPoly();
    LaurentPoly(std::size_t arity, RingDescriptor descriptor);

    static LaurentPoly constant(std::size_t arity, const RingElement& c);
    static LaurentPoly constant(std::size_t arity, const RingDescriptor& descriptor,
                                const mpz_class& c);
    /// c * t^exponents.
    static LaurentPoly monomial(Exponents exponents, const RingElement& c);
    /// The variable t_index (1-based).
    static LaurentPoly variable(std::size_t arity, const RingDescriptor& descriptor,
                                std::size_t index);

    std::size_t arity() const noexcept { return arity_; }
    const RingDescriptor& descriptor() const noexcept { return descriptor_; }
    std::span<const Entry> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Adds c * t^exponents in place.
    void add_term(const Exponents& exponents, const RingElement& c);

    /// All exponents non-negative.
    bool is_polynomial() const;
    /// Smallest / largest exponent of t_var (0-based) over all terms; 0 for zero.
    int min_exponent(std::size_t var) const;
    int max_exponent(std::size_t var) const;
    /// True if no term has a nonzero exponent in any variable except `var`.
    bool involves_only(std::size_t var) const;

    /// t_i -> t_{perm[i]} (0-based positions).
    LaurentPoly permuted(std::span<const std::size_t> perm) const;
    /// Multiplies by t^shift.
    LaurentPoly shifted(const Exponents& shift) const;
    /// Moves to arity `new_arity`, sending variable i to variable offset + i.
    LaurentPoly embedded(std::size_t new_arity, std::size_t offset) const;
    LaurentPoly pow(unsigned exponent) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other);
    LaurentPoly& operator*=(const RingElement& scalar);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const RingElement& s) { return a *= s; }
    friend LaurentPoly operator*(const RingElement& s, LaurentPoly a) { return a *= s; }
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& other) const;

    /// e.g. "t1^2 - (h)*t1*t2^-1 + 3"; ring coefficients with more than one term
    /// are parenthesised.
    std::string to_string() const;

private:
    void check_compatible(const LaurentPoly& other) const;

    std::size_t arity_ = 0;
    RingDescriptor descriptor_;
    std::vector<Entry> terms_;  // sorted by exponents, descending lex
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

/// Convolution product (same as operator*).
LaurentPoly lmul(const LaurentPoly& a, const LaurentPoly& b);

/// [t^m](f): the coefficient of t_1^{m_1}...t_d^{m_d} in f, zero if absent.
RingElement coeff(const LaurentPoly& f, const ExtractionTarget& m);

/// coeff(product of factors, m), computed by multiplying the multivariate
/// factors under exponent pruning and then eliminating t_1, t_2, ... in turn
/// against the single-variable factors.
RingElement staged_extract(std::span<const LaurentPoly> factors, const ExtractionTarget& m);

/// For F(i,j) involving only t_j: det( [t_j^{m_j}] F(i,j) ), which equals
/// coeff(det F, m). Throws ValidationError if an entry involves another variable.
RingElement det_extract(const Matrix<LaurentPoly>& F, const ExtractionTarget& m);

/// Determinant of a matrix of Laurent polynomials, fully expanded.
LaurentPoly laurent_determinant(const Matrix<LaurentPoly>& F);

/// Exact quotient p / (t_a - t_b) for 0-based a != b; p must be a polynomial.
/// Throws MathContractError if the division leaves a remainder.
LaurentPoly divide_by_difference(const LaurentPoly& p, std::size_t a, std::size_t b);

/// Sum of f(t_sigma) over all permutations sigma of the 1-based positions
/// first..last.
LaurentPoly symmetrized(const LaurentPoly& f, std::size_t first, std::size_t last);

/// Sum of sign(sigma) f(t_sigma) over all permutations of the variables.
LaurentPoly antisymmetrized(const LaurentPoly& f);

/// prod_{i<j} (t_i - t_j) in `arity` variables.
LaurentPoly vandermonde(std::size_t arity, const RingDescriptor& descriptor);

} // namespace gysin
