#pragma once

// Vector bundles on the base, given by their Chern classes, and the Segre
// series s_{1/t}(E) that drives every push-forward formula.

#include "gysin/chow_ring.hpp"
#include "gysin/laurent.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace gysin {

class SegreTable;

class VectorBundleData {
public:
    /// chern[i-1] = c_i(E); missing classes (index above chern.size()) are zero.
    /// Throws ValidationError if rank < 1, more than `rank` classes are given,
    /// or some c_i is not homogeneous of degree i.
    VectorBundleData(std::string name, int rank, std::vector<RingElement> chern,
                     RingDescriptor descriptor);

    /// Rank-r bundle with all Chern classes zero.
    static VectorBundleData trivial(std::string name, int rank, const RingDescriptor& descriptor);

    /// Bundle whose Segre classes are s_1..s_k (s_0 = 1). The Chern classes
    /// c = s^{-1} must vanish above the rank; otherwise ValidationError.
    static VectorBundleData from_segre(std::string name, int rank,
                                       const std::vector<RingElement>& segre,
                                       const RingDescriptor& descriptor);

    const std::string& name() const noexcept { return name_; }
    int rank() const noexcept { return rank_; }
    const RingDescriptor& descriptor() const noexcept { return descriptor_; }
    /// c_i for any i >= 0 (c_0 = 1, c_i = 0 for i < 0 or i > rank).
    RingElement chern(int i) const;
    const SegreTable& segre() const { return *segre_; }

private:
    std::string name_;
    int rank_;
    RingDescriptor descriptor_;
    std::vector<RingElement> chern_;  // c_1..c_rank
    std::shared_ptr<const SegreTable> segre_;
};

/// Segre classes s_0..s_D with s_0 = 1, computed as the series inverse of the
/// total Chern class.
class SegreTable {
public:
    explicit SegreTable(const VectorBundleData& bundle);
    SegreTable(const std::vector<RingElement>& chern_1_to_r, const RingDescriptor& descriptor);

    /// s_i for any integer i; zero for i < 0 and i > D.
    RingElement operator[](int i) const;
    int size() const noexcept { return static_cast<int>(classes_.size()); }
    const std::vector<RingElement>& classes() const noexcept { return classes_; }

private:
    RingDescriptor descriptor_;
    std::vector<RingElement> classes_;
};

/// Segre classes of E (the whole table).
SegreTable segre_from_chern(const VectorBundleData& bundle);

/// s_{1/t_j}(E) = sum_{i=0..D} s_i(E) t_j^{-i} as a Laurent polynomial of the
/// given arity in the 1-based variable j.
LaurentPoly segre_laurent(const VectorBundleData& bundle, std::size_t var, std::size_t arity);

/// Segre series of U_j^perp / U_j on an isotropic flag bundle:
///   prod_xi (t - xi)(t + xi + c1(L)) * s_{1/t}(E) * t^{-2(j-1)},
/// with j - 1 = xi_values.size() and t the 1-based variable `var`.
LaurentPoly isotropic_quotient_segre_laurent(const VectorBundleData& bundle,
                                             const RingElement& line_c1,
                                             const std::vector<RingElement>& xi_values,
                                             std::size_t var, std::size_t arity);

/// Total Chern class in 1/t_var: sum_{i=0..rank} c_i t^{-i}.
LaurentPoly chern_laurent(const VectorBundleData& bundle, std::size_t var, std::size_t arity);

} // namespace gysin
