#pragma once

// Seeded generators of random rings, bundles, integrands and sequences for the
// property suites. Output depends only on the seed.

#include "gysin/bundles.hpp"
#include "gysin/chow_ring.hpp"
#include "gysin/flag_push.hpp"
#include "gysin/laurent.hpp"
#include "gysin/schur_det.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gysin {

inline constexpr std::uint64_t kDefaultSeed = 1729;

class Random {
public:
    explicit Random(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}
    /// Independent stream for (seed, label).
    Random(std::uint64_t seed, std::string_view label);

    /// Uniform integer in [lo, hi].
    int uniform(int lo, int hi);
    /// True with probability percent / 100.
    bool chance(int percent);
    /// Nonzero integer in [-bound, bound].
    mpz_class nonzero(int bound);
    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(uniform(0, static_cast<int>(items.size()) - 1))];
    }

    /// One of a few generator layouts with the given truncation.
    RingDescriptor ring(int truncation);
    /// Random homogeneous element of the given degree (possibly zero).
    RingElement homogeneous(const RingDescriptor& ring, int degree, int max_terms = 3);
    /// Random element with components in degrees 0..max_degree.
    RingElement element(const RingDescriptor& ring, int max_degree, int max_terms = 3);
    /// Random bundle of the given rank. With self_dual set, odd Chern classes vanish.
    VectorBundleData bundle(const RingDescriptor& ring, int rank, bool self_dual = false,
                            const std::string& name = "E");
    /// sum of up to `terms` monomials t^a with 0 <= a_i <= max_exponent and
    /// random coefficients of degree <= coeff_degree.
    LaurentPoly polynomial(std::size_t arity, const RingDescriptor& ring, int max_exponent,
                           int terms, int coeff_degree = 0);
    /// Like polynomial() but with exponents in [lo, hi].
    LaurentPoly laurent(std::size_t arity, const RingDescriptor& ring, int lo, int hi, int terms,
                        int coeff_degree = 0);
    /// Homogeneous of total degree g (deg t_i = 1 plus coefficient degree).
    LaurentPoly homogeneous_polynomial(std::size_t arity, const RingDescriptor& ring, int g,
                                       int terms);
    /// Weakly decreasing sequence of d entries in [0, max_part].
    IntSeq partition(int d, int max_part);
    /// Strictly increasing dims with last entry d.
    std::vector<int> dims_ending_at(int d);

private:
    std::mt19937_64 engine_;
};

/// f symmetrized within every block of the flag.
LaurentPoly block_symmetrized(const LaurentPoly& f, const FlagSpec& spec);

/// All exponent vectors of the given weighted degree.
std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int degree);

/// Integer Laurent polynomial read in another coefficient ring.
LaurentPoly with_coefficients_in(const LaurentPoly& integer_poly, const RingDescriptor& ring);

} // namespace gysin
