#include "gysin/bundles.hpp"

#include "gysin/error.hpp"

#include <algorithm>

namespace gysin {

namespace {

std::vector<RingElement> invert_series(const std::vector<RingElement>& tail,
                                       const RingDescriptor& descriptor) {
    // (1 + sum_{i>=1} a_i)^{-1} degree by degree: b_k = -sum_{i=1..k} a_i b_{k-i}.
    const int top = descriptor.truncation();
    std::vector<RingElement> inverse;
    inverse.reserve(top + 1);
    inverse.push_back(RingElement::constant(descriptor, 1));
    for (int k = 1; k <= top; ++k) {
        RingElement acc(descriptor);
        for (int i = 1; i <= k && i <= static_cast<int>(tail.size()); ++i)
            acc -= tail[i - 1] * inverse[k - i];
        inverse.push_back(std::move(acc));
    }
    return inverse;
}

} // namespace

VectorBundleData::VectorBundleData(std::string name, int rank, std::vector<RingElement> chern,
                                   RingDescriptor descriptor)
    : name_(std::move(name)), rank_(rank), descriptor_(std::move(descriptor)) {
    if (rank_ < 1)
        throw ValidationError("bundle '" + name_ + "' must have positive rank");
    if (static_cast<int>(chern.size()) > rank_)
        throw ValidationError("bundle '" + name_ + "' of rank " + std::to_string(rank_) + " has " +
                              std::to_string(chern.size()) + " Chern classes");
    for (std::size_t i = 0; i < chern.size(); ++i) {
        if (!(chern[i].descriptor() == descriptor_))
            throw ValidationError("Chern class of '" + name_ + "' lives in another ring");
        if (!chern[i].is_homogeneous_of_degree(static_cast<int>(i) + 1))
            throw ValidationError("c_" + std::to_string(i + 1) + "(" + name_ + ") = " +
                                  chern[i].to_string() + " is not homogeneous of degree " +
                                  std::to_string(i + 1));
    }
    chern.resize(rank_, RingElement(descriptor_));
    chern_ = std::move(chern);
    segre_ = std::make_shared<const SegreTable>(chern_, descriptor_);
}

VectorBundleData VectorBundleData::trivial(std::string name, int rank,
                                           const RingDescriptor& descriptor) {
    return VectorBundleData(std::move(name), rank, {}, descriptor);
}

VectorBundleData VectorBundleData::from_segre(std::string name, int rank,
                                              const std::vector<RingElement>& segre,
                                              const RingDescriptor& descriptor) {
    for (std::size_t i = 0; i < segre.size(); ++i)
        if (!segre[i].is_homogeneous_of_degree(static_cast<int>(i) + 1))
            throw ValidationError("s_" + std::to_string(i + 1) + "(" + name +
                                  ") is not homogeneous of degree " + std::to_string(i + 1));
    std::vector<RingElement> chern = invert_series(segre, descriptor);
    for (int k = rank + 1; k < static_cast<int>(chern.size()); ++k)
        if (!chern[k].is_zero())
            throw ValidationError("Segre classes of '" + name + "' give c_" + std::to_string(k) +
                                  " = " + chern[k].to_string() + " above the rank " +
                                  std::to_string(rank));
    chern.erase(chern.begin());
    if (static_cast<int>(chern.size()) > rank)
        chern.resize(rank);
    return VectorBundleData(std::move(name), rank, std::move(chern), descriptor);
}

RingElement VectorBundleData::chern(int i) const {
    if (i == 0)
        return RingElement::constant(descriptor_, 1);
    if (i < 0 || i > rank_)
        return RingElement(descriptor_);
    return chern_[i - 1];
}

SegreTable::SegreTable(const VectorBundleData& bundle) : SegreTable(bundle.segre()) {}

SegreTable::SegreTable(const std::vector<RingElement>& chern_1_to_r,
                       const RingDescriptor& descriptor)
    : descriptor_(descriptor), classes_(invert_series(chern_1_to_r, descriptor)) {}

RingElement SegreTable::operator[](int i) const {
    if (i < 0 || i >= static_cast<int>(classes_.size()))
        return RingElement(descriptor_);
    return classes_[i];
}

SegreTable segre_from_chern(const VectorBundleData& bundle) { return bundle.segre(); }

LaurentPoly segre_laurent(const VectorBundleData& bundle, std::size_t var, std::size_t arity) {
    if (var < 1 || var > arity)
        throw ValidationError("Segre series variable out of range");
    LaurentPoly f(arity, bundle.descriptor());
    const auto& s = bundle.segre().classes();
    for (std::size_t i = 0; i < s.size(); ++i) {
        Exponents e(arity, 0);
        e[var - 1] = -static_cast<int>(i);
        f.add_term(e, s[i]);
    }
    return f;
}

LaurentPoly chern_laurent(const VectorBundleData& bundle, std::size_t var, std::size_t arity) {
    if (var < 1 || var > arity)
        throw ValidationError("Chern series variable out of range");
    LaurentPoly f(arity, bundle.descriptor());
    for (int i = 0; i <= bundle.rank(); ++i) {
        Exponents e(arity, 0);
        e[var - 1] = -i;
        f.add_term(e, bundle.chern(i));
    }
    return f;
}

LaurentPoly isotropic_quotient_segre_laurent(const VectorBundleData& bundle,
                                             const RingElement& line_c1,
                                             const std::vector<RingElement>& xi_values,
                                             std::size_t var, std::size_t arity) {
    const RingDescriptor& ring = bundle.descriptor();
    if (!line_c1.is_homogeneous_of_degree(1))
        throw ValidationError("c1(L) must be homogeneous of degree 1");
    LaurentPoly result = segre_laurent(bundle, var, arity);
    const LaurentPoly t = LaurentPoly::variable(arity, ring, var);
    for (const auto& xi : xi_values) {
        if (!xi.is_homogeneous_of_degree(1))
            throw ValidationError("xi values must be homogeneous of degree 1");
        result *= t - LaurentPoly::constant(arity, xi);
        result *= t + LaurentPoly::constant(arity, xi + line_c1);
    }
    Exponents shift(arity, 0);
    shift[var - 1] = -2 * static_cast<int>(xi_values.size());
    return result.shifted(shift);
}

} // namespace gysin
