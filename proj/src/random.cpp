#include "gysin/random.hpp"

#include "gysin/error.hpp"

#include <algorithm>

namespace gysin {

namespace {

void collect_monomials(const RingDescriptor& ring, std::size_t var, int remaining, Monomial& current,
                       std::vector<Monomial>& out) {
    if (var == ring.size()) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    const int step = ring.generators()[var].degree;
    for (int k = 0; k * step <= remaining; ++k) {
        current[var] = static_cast<unsigned>(k);
        collect_monomials(ring, var + 1, remaining - k * step, current, out);
    }
    current[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_of_degree(const RingDescriptor& ring, int degree) {
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    Monomial current(ring.size(), 0);
    collect_monomials(ring, 0, degree, current, out);
    return out;
}

Random::Random(std::uint64_t seed, std::string_view label) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                     static_cast<std::uint32_t>(seed >> 32)};
    for (char c : label)
        words.push_back(static_cast<unsigned char>(c));
    std::seed_seq seq(words.begin(), words.end());
    engine_.seed(seq);
}

int Random::uniform(int lo, int hi) {
    if (lo > hi)
        throw ValidationError("empty sampling range");
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
}

bool Random::chance(int percent) { return uniform(1, 100) <= percent; }

mpz_class Random::nonzero(int bound) {
    const int v = uniform(1, bound);
    return chance(50) ? mpz_class(v) : mpz_class(-v);
}

RingDescriptor Random::ring(int truncation) {
    static const std::vector<std::vector<Generator>> layouts{
        {{"h", 1}},
        {{"a", 1}, {"b", 2}},
        {{"a", 1}, {"b", 1}},
        {{"a", 1}, {"b", 2}, {"c", 3}},
    };
    return RingDescriptor::define(pick(layouts), truncation);
}

RingElement Random::homogeneous(const RingDescriptor& ring, int degree, int max_terms) {
    const auto candidates = monomials_of_degree(ring, degree);
    RingElement out(ring);
    if (candidates.empty() || degree > ring.truncation())
        return out;
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k)
        out += RingElement::monomial(ring, pick(candidates), nonzero(3));
    return out;
}

RingElement Random::element(const RingDescriptor& ring, int max_degree, int max_terms) {
    RingElement out(ring);
    const int top = std::min(max_degree, ring.truncation());
    for (int g = 0; g <= top; ++g)
        if (g == 0 || chance(60))
            out += homogeneous(ring, g, max_terms);
    return out;
}

VectorBundleData Random::bundle(const RingDescriptor& ring, int rank, bool self_dual,
                                const std::string& name) {
    std::vector<RingElement> chern;
    for (int i = 1; i <= rank; ++i)
        chern.push_back(self_dual && i % 2 == 1 ? RingElement(ring) : homogeneous(ring, i));
    return VectorBundleData(name, rank, std::move(chern), ring);
}

LaurentPoly Random::polynomial(std::size_t arity, const RingDescriptor& ring, int max_exponent,
                               int terms, int coeff_degree) {
    return laurent(arity, ring, 0, max_exponent, terms, coeff_degree);
}

LaurentPoly Random::laurent(std::size_t arity, const RingDescriptor& ring, int lo, int hi,
                            int terms, int coeff_degree) {
    LaurentPoly out(arity, ring);
    for (int k = 0; k < terms; ++k) {
        Exponents e(arity);
        for (auto& x : e)
            x = uniform(lo, hi);
        out.add_term(e, element(ring, coeff_degree));
    }
    return out;
}

LaurentPoly Random::homogeneous_polynomial(std::size_t arity, const RingDescriptor& ring, int g,
                                           int terms) {
    LaurentPoly out(arity, ring);
    for (int k = 0; k < terms; ++k) {
        const int coeff_degree = std::min(uniform(0, std::max(0, g)), ring.truncation());
        Exponents e(arity, 0);
        for (int left = g - coeff_degree; left > 0; --left)
            ++e[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))];
        if (g - coeff_degree < 0)
            continue;
        auto c = coeff_degree == 0 ? RingElement::constant(ring, nonzero(3))
                                   : homogeneous(ring, coeff_degree);
        out.add_term(e, c);
    }
    return out;
}

IntSeq Random::partition(int d, int max_part) {
    IntSeq out(static_cast<std::size_t>(d));
    for (auto& x : out)
        x = uniform(0, max_part);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<int> Random::dims_ending_at(int d) {
    std::vector<int> dims;
    for (int k = 1; k < d; ++k)
        if (chance(50))
            dims.push_back(k);
    dims.push_back(d);
    return dims;
}

LaurentPoly block_symmetrized(const LaurentPoly& f, const FlagSpec& spec) {
    LaurentPoly out = f;
    for (const auto& [first, last] : spec.blocks())
        if (last > first)
            out = symmetrized(out, static_cast<std::size_t>(first), static_cast<std::size_t>(last));
    return out;
}

LaurentPoly with_coefficients_in(const LaurentPoly& integer_poly, const RingDescriptor& ring) {
    LaurentPoly out(integer_poly.arity(), ring);
    for (const auto& t : integer_poly.terms()) {
        const auto value = t.coeff.as_integer();
        if (!value)
            throw ValidationError("expected integer coefficients");
        out.add_term(t.exponents, RingElement::constant(ring, *value));
    }
    return out;
}

} // namespace gysin
