#pragma once

// Independent checks for the push-forward engine: torus-fixed-point
// localization on split bundles, coefficient extraction by full expansion and
// closed-form degrees of classical homogeneous spaces.

#include "gysin/bundles.hpp"
#include "gysin/chow_ring.hpp"
#include "gysin/laurent.hpp"

#include <span>
#include <string>

namespace gysin {

/// A rank-n bundle split into line bundles with first Chern classes y_1..y_n,
/// each a degree-1 generator of a dedicated ring truncated at D.
class SplitBundle {
public:
    SplitBundle(int rank, int truncation, const std::string& prefix = "y");

    int rank() const noexcept { return rank_; }
    const RingDescriptor& descriptor() const noexcept { return ring_; }
    /// y_k, 1-based.
    RingElement root(int k) const;
    /// The bundle with c_i = e_i(y_1, ..., y_n).
    VectorBundleData bundle(const std::string& name = "E") const;

private:
    int rank_;
    RingDescriptor ring_;
};

/// Push-forward along the Grassmann bundle G(d, E) of a split bundle:
///   sum over d-subsets K of f(-y_K) / prod_{k in K, j not in K} (y_j - y_k),
/// evaluated by clearing the Vandermonde denominator and dividing exactly.
/// f must be a symmetric polynomial in d variables over the split ring.
/// Throws ValidationError for non-symmetric f, OracleMismatch if the division
/// is inexact.
RingElement localization_push_grassmann(const SplitBundle& split, int d, const LaurentPoly& f);

/// coeff(prod factors, m) by expanding the whole product first.
RingElement brute_force_coeff(std::span<const LaurentPoly> factors, const ExtractionTarget& m);

enum class SpaceKind { Grassmann, Lagrangian, Projective, Quadric };

struct SpaceDescriptor {
    SpaceKind kind = SpaceKind::Projective;
    int d = 0;  // Grassmann: subspace dimension
    int n = 0;  // Grassmann: ambient dimension; Lagrangian: LG(n, 2n); Projective: P^n
    int r = 0;  // Quadric: rank of the quadratic form (hypersurface in P^{r-1})

    static SpaceDescriptor grassmann(int d, int n) { return {SpaceKind::Grassmann, d, n, 0}; }
    static SpaceDescriptor lagrangian(int n) { return {SpaceKind::Lagrangian, 0, n, 0}; }
    static SpaceDescriptor projective(int n) { return {SpaceKind::Projective, 0, n, 0}; }
    static SpaceDescriptor quadric(int r) { return {SpaceKind::Quadric, 0, 0, r}; }
};

std::string to_string(const SpaceDescriptor& space);

/// Dimension of the space.
int space_dimension(const SpaceDescriptor& space);

/// Degree in its natural projective embedding (Pluecker for Grassmannians):
///   G(d,n): N! prod_{i<d} i! / (n-d+i)!,   N = d(n-d)
///   LG(n) : N! / prod_{i=1..n} (2i-1)!!,    N = n(n+1)/2
///   P^n   : 1
///   quadric: 2
mpz_class classical_degree(const SpaceDescriptor& space);

/// The same degree from the push-forward engine over a point: (sum xi)^dim
/// on G(d,n) and LG(n), xi^n on P^n and xi^{r-2} on the quadric.
RingElement engine_degree(const SpaceDescriptor& space);

} // namespace gysin
