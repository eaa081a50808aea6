#pragma once

// Gysin push-forward from flag bundles of types A, C and B/D to the base,
// computed as a single coefficient extraction
//
//   [t_1^{e_1} ... t_d^{e_d}] ( f(t) * kernel(t) * prod_i s_{1/t_i}(E) ).

#include "gysin/bundles.hpp"
#include "gysin/chow_ring.hpp"
#include "gysin/laurent.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gysin {

enum class Family { A, C, BD };

std::string to_string(Family family);
/// Accepts "A", "C", "BD" (also "B" and "D"); throws ValidationError otherwise.
Family parse_family(std::string_view text);

/// A flag bundle F(d_1 < ... < d_m)(E) of the given family. Constructed only
/// in a valid state:
///   A  : d_m <= rank - 1, no line bundle;
///   C  : rank even (= 2n), d_m <= n;
///   BD : d_m <= floor(rank / 2).
class FlagSpec {
public:
    FlagSpec(Family family, VectorBundleData bundle, std::vector<int> dims,
             std::optional<RingElement> line_c1 = std::nullopt);

    Family family() const noexcept { return family_; }
    const VectorBundleData& bundle() const noexcept { return bundle_; }
    const std::vector<int>& dims() const noexcept { return dims_; }
    const std::optional<RingElement>& line() const noexcept { return line_c1_; }
    /// c_1(L), zero when no line bundle was given.
    RingElement line_c1() const;
    const RingDescriptor& descriptor() const noexcept { return bundle_.descriptor(); }

    int rank() const noexcept { return bundle_.rank(); }
    /// d = d_m, the number of xi variables.
    int d() const noexcept { return dims_.back(); }
    int m() const noexcept { return static_cast<int>(dims_.size()); }
    /// r_k = d_k - d_{k-1} for k = 1..m.
    int r(int k) const;

    /// 1-based position ranges [first, last] of the xi variables permuted by
    /// the fibre symmetry: block k is {d - d_k + 1, ..., d - d_{k-1}}.
    std::vector<std::pair<int, int>> blocks() const;

private:
    Family family_;
    VectorBundleData bundle_;
    std::vector<int> dims_;
    std::optional<RingElement> line_c1_;
};

/// Standard: the general formula for the family. OrthogonalTrivialLine: for BD with
/// c_1(L) = 0, kernel prod (t_i^2 - t_j^2), exponents lowered by one and a
/// scalar factor 2^d.
enum class Variant { Standard, OrthogonalTrivialLine };

using ExponentSeq = std::vector<int>;

/// e_j = N - i for j = d - d_k + i, i = 1..r_k, where N is the rank (rank - 1
/// for the trivial-line orthogonal variant).
ExponentSeq exponents(const FlagSpec& spec, Variant variant = Variant::Standard);

struct Kernel {
    LaurentPoly poly;
    mpz_class scalar = 1;
};

Kernel kernel(const FlagSpec& spec, Variant variant = Variant::Standard);

/// Sum of the exponents minus the degree of the kernel.
int fiber_dimension(const FlagSpec& spec, Variant variant = Variant::Standard);

/// Projective bundle P(E): [t^{n-1}] (f(t) s_{1/t}(E)).
RingElement push_projective(const LaurentPoly& f, const VectorBundleData& bundle);

/// Quadric bundle Q(E) in P(E): [t^{r-1}] (f(t) (2t + c_1(L)) s_{1/t}(E)).
RingElement push_quadric(const LaurentPoly& f, const VectorBundleData& bundle,
                         const RingElement& line_c1);

enum class OrthogonalPath {
    Auto,          // trivial-line formula when c_1(L) = 0, general formula otherwise
    General,       // always the general formula
    TrivialLine,   // the trivial-line formula; requires c_1(L) = 0
};

struct PushOptions {
    /// BD, rank 2n, d_m = n: report one of the two connected components.
    bool halve_maximal_orthogonal = false;
    OrthogonalPath orthogonal_path = OrthogonalPath::Auto;
};

/// The variant push() actually uses for `spec` under `options`.
Variant chosen_variant(const FlagSpec& spec, const PushOptions& options);

/// Push-forward of f(xi_1, ..., xi_d) to the base; xi_i is sent to t_i.
/// Throws ValidationError for a non-polynomial f or arity mismatch and for
/// halving outside the even-rank maximal orthogonal case, MathContractError if
/// halving meets an odd coefficient.
RingElement push(const FlagSpec& spec, const LaurentPoly& f, const PushOptions& options = {});

/// Throws ValidationError unless the family is BD, the rank is even and
/// d_m = rank / 2.
void require_halvable(const FlagSpec& spec);

/// A push-forward to the full maximal orthogonal flag bundle, divided by two
/// to give one connected component. Throws MathContractError for an odd
/// coefficient.
RingElement halve_for_component(const FlagSpec& spec, const RingElement& full);

/// Type A with all n Chern roots: xi_i = -c_1(U_{n-i+1}/U_{n-i}), f in n
/// variables, exponents e_j = n - i for j = n - d_k + i (k = 1..m+1, d_{m+1} = n).
RingElement push_full_roots_A(const FlagSpec& spec, const LaurentPoly& f);

/// Exponents used by push_full_roots_A.
ExponentSeq full_roots_exponents(const FlagSpec& spec);

} // namespace gysin
