#pragma once

// Truncated graded polynomial rings Z[g_1, ..., g_k] / (degree > D) used as a
// model of the Chow ring of the base variety.

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gysin {

struct Generator {
    std::string name;
    int degree = 1;

    bool operator==(const Generator&) const = default;
};

/// Exponent vector, one entry per generator of the descriptor.
using Monomial = std::vector<unsigned>;

class RingDescriptor {
public:
    /// The ring of a point: no generators, truncation 0 (i.e. plain Z).
    RingDescriptor();

    /// Throws ValidationError on duplicate names, empty names, degree < 1 or
    /// negative truncation.
    static RingDescriptor define(std::vector<Generator> generators, int truncation);

    const std::vector<Generator>& generators() const noexcept;
    std::size_t size() const noexcept;
    int truncation() const noexcept;
    std::optional<std::size_t> index_of(std::string_view name) const;
    int weighted_degree(const Monomial& m) const;

    /// Same generators (names and degrees, in order) and truncation.
    bool operator==(const RingDescriptor& other) const;

    /// Same generator list with a different truncation.
    RingDescriptor with_truncation(int truncation) const;

private:
    struct Data;
    explicit RingDescriptor(std::shared_ptr<const Data> data);
    std::shared_ptr<const Data> data_;
};

struct Term {
    Monomial exponents;
    int degree = 0;
    mpz_class coeff;
};

/// Canonical order: ascending weighted degree, then lexicographically
/// descending exponent vectors (so a^2 < a*b < b^2 in the stored order).
bool canonical_less(const Term& a, const Term& b);

/// An element of a truncated ring. Terms are kept sorted in canonical order,
/// with no zero coefficients and no term of degree above the truncation.
class RingElement {
public:
    RingElement();
    explicit RingElement(RingDescriptor descriptor);

    static RingElement constant(const RingDescriptor& descriptor, const mpz_class& value);
    static RingElement generator(const RingDescriptor& descriptor, std::string_view name);
    static RingElement monomial(const RingDescriptor& descriptor, Monomial exponents,
                                const mpz_class& coeff);
    /// Terms may be unsorted, repeated, zero, or of too high degree.
    static RingElement from_terms(const RingDescriptor& descriptor, std::vector<Term> terms);

    const RingDescriptor& descriptor() const noexcept { return descriptor_; }
    std::span<const Term> terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    /// The value if the element is an integer constant (including zero).
    std::optional<mpz_class> as_integer() const;
    RingElement grade_component(int k) const;
    /// True for zero and for elements all of whose terms have degree k.
    bool is_homogeneous_of_degree(int k) const;
    /// Degree of a nonzero homogeneous element; nullopt otherwise.
    std::optional<int> homogeneous_degree() const;
    /// -1 for zero.
    int max_degree() const;

    bool divisible_by(const mpz_class& n) const;
    /// Throws MathContractError if some coefficient is not divisible by n.
    RingElement exact_div(const mpz_class& n) const;
    RingElement pow(unsigned exponent) const;

    /// Same element read in a ring with the same generators but another
    /// truncation; terms above the new truncation are dropped.
    RingElement with_descriptor(const RingDescriptor& target) const;

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    RingElement& operator*=(const RingElement& other);
    RingElement& operator*=(const mpz_class& scalar);

    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(RingElement a, const mpz_class& s) { return a *= s; }
    friend RingElement operator*(const mpz_class& s, RingElement a) { return a *= s; }
    RingElement operator-() const;

    bool operator==(const RingElement& other) const;

    /// e.g. "1 - 2*h + 3*a*b^2"; zero renders as "0".
    std::string to_string() const;

private:
    void check_same_ring(const RingElement& other) const;
    RingElement combine(const RingElement& other, bool subtract) const;

    RingDescriptor descriptor_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& e);

} // namespace gysin
