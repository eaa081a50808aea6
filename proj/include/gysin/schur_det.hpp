#pragma once

// Schur polynomials, Segre-Schur determinants and the determinantal
// push-forward formulas for monomials and Schur classes.

#include "gysin/bundles.hpp"
#include "gysin/chow_ring.hpp"
#include "gysin/flag_push.hpp"
#include "gysin/laurent.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gysin {

/// A finite integer sequence; partitions are the weakly decreasing
/// non-negative ones.
using IntSeq = std::vector<int>;

IntSeq operator-(const IntSeq& a, const IntSeq& b);
std::string to_string(const IntSeq& seq);
/// "[3,1,0]", negative entries allowed; whitespace ignored.
IntSeq parse_int_seq(std::string_view text);

/// s_lambda(t_1..t_d) = det(t_j^{lambda_i + d - i}) / prod_{i<j}(t_i - t_j),
/// integer coefficients in `descriptor`. Requires lambda_i >= i - d.
LaurentPoly schur_bialternant(const IntSeq& lambda, const RingDescriptor& descriptor);

/// det(h_{lambda_i - i + j}); h(k) must return 0 for k < 0 and 1 for k = 0.
RingElement jacobi_trudi(const IntSeq& lambda, const std::function<RingElement(int)>& h,
                         const RingDescriptor& descriptor);

/// s_lambda(E) = det(s_{lambda_i + j - i}(E)).
RingElement segre_schur(const VectorBundleData& bundle, const IntSeq& lambda);

/// s^(2)_lambda(E) = det(s_{lambda_i + 2(j - i)}(E)).
RingElement segre_schur_quadratic(const VectorBundleData& bundle, const IntSeq& lambda);

/// Shift subtracted from monomial exponents in the determinantal formula:
///   A : shift_i = n - d_k
///   C : shift_i = 2n - d - d_k + i
///   BD: shift_i = (rank - 1) - d - d_k + i
/// for d - d_k < i <= d - d_{k-1}.
IntSeq monomial_shift(const FlagSpec& spec);

struct MonomialTerm {
    RingElement coeff;
    IntSeq exponents;  // xi_1^{lambda_1} ... xi_d^{lambda_d}
};

/// Push-forward of sum coeff * xi^lambda through the determinantal formula.
/// With index = lambda - shift read in reverse order (index_d, ..., index_1):
///   A : sum coeff * s_{rev index}(E)
///   C : sum coeff * s^(2)_{rev index}(E)
///   BD: 2^d sum coeff * s^(2)_{rev index}(E)
/// C and BD require c_1(L) = 0.
RingElement push_monomials(const FlagSpec& spec, const std::vector<MonomialTerm>& terms);

/// Grassmann bundle G(d, E): push of s_lambda(xi) = s_{lambda - (n-d)^d}(E).
RingElement push_schur_grassmann_A(const VectorBundleData& bundle, int d, const IntSeq& lambda);

/// shift_i = rank - d + 1 - i for C, rank - d - i for BD.
IntSeq isotropic_schur_shift(const FlagSpec& spec);

/// Single-step isotropic Grassmann bundle with c_1(L) = 0: push of
/// s_lambda(xi) = s^(2)_{lambda - shift}(E), times 2^d for BD.
RingElement push_schur_isotropic(const FlagSpec& spec, const IntSeq& lambda);

/// Both sides of the antisymmetric extraction identity:
///   [prod t_j^{e-j}] (Lambda * prod_{i<j} (t_i + t_j))  and
///   [prod t_j^{e-j}] (Lambda * prod_j t_j^{j-1}).
/// Throws ValidationError if Lambda is not antisymmetric.
std::pair<RingElement, RingElement> antisym_extract_lemma_check(const LaurentPoly& antisymmetric,
                                                                int e);

} // namespace gysin
