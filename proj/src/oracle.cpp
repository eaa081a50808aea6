#include "gysin/oracle.hpp"

#include "gysin/error.hpp"
#include "gysin/flag_push.hpp"

#include <numeric>

namespace gysin {

namespace {

RingDescriptor split_ring(int rank, int truncation, const std::string& prefix) {
    if (rank < 1)
        throw ValidationError("split bundle needs positive rank");
    std::vector<Generator> gens;
    for (int k = 1; k <= rank; ++k)
        gens.push_back({prefix + std::to_string(k), 1});
    return RingDescriptor::define(std::move(gens), truncation);
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Integer polynomial in y_1..y_n as a LaurentPoly of arity n over Z.
LaurentPoly as_integer_poly(const RingElement& c, const RingDescriptor& integers) {
    const std::size_t n = c.descriptor().size();
    LaurentPoly out(n, integers);
    for (const auto& t : c.terms()) {
        Exponents e(t.exponents.begin(), t.exponents.end());
        out.add_term(e, RingElement::constant(integers, t.coeff));
    }
    return out;
}

LaurentPoly drop_above(const LaurentPoly& p, int max_degree) {
    LaurentPoly out(p.arity(), p.descriptor());
    for (const auto& t : p.terms())
        if (total_degree(t.exponents) <= max_degree)
            out.add_term(t.exponents, t.coeff);
    return out;
}

mpz_class factorial(int k) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

LaurentPoly power_of_sum(std::size_t arity, int exponent) {
    const RingDescriptor point;
    LaurentPoly sum(arity, point);
    for (std::size_t i = 1; i <= arity; ++i)
        sum += LaurentPoly::variable(arity, point, i);
    return sum.pow(static_cast<unsigned>(exponent));
}

} // namespace

SplitBundle::SplitBundle(int rank, int truncation, const std::string& prefix)
    : rank_(rank), ring_(split_ring(rank, truncation, prefix)) {}

RingElement SplitBundle::root(int k) const {
    if (k < 1 || k > rank_)
        throw ValidationError("root index out of range");
    return RingElement::generator(ring_, ring_.generators()[k - 1].name);
}

VectorBundleData SplitBundle::bundle(const std::string& name) const {
    // prod (1 + y_k) expanded degree by degree.
    std::vector<RingElement> elementary(rank_ + 1, RingElement(ring_));
    elementary[0] = RingElement::constant(ring_, 1);
    for (int k = 1; k <= rank_; ++k)
        for (int i = k; i >= 1; --i)
            elementary[i] += elementary[i - 1] * root(k);
    std::vector<RingElement> chern(elementary.begin() + 1, elementary.end());
    return VectorBundleData(name, rank_, std::move(chern), ring_);
}

RingElement localization_push_grassmann(const SplitBundle& split, int d, const LaurentPoly& f) {
    const int n = split.rank();
    const RingDescriptor& ring = split.descriptor();
    if (d < 1 || d > n - 1)
        throw ValidationError("Grassmann bundle needs 1 <= d <= rank - 1");
    if (f.arity() != static_cast<std::size_t>(d))
        throw ValidationError("integrand arity must equal d");
    if (!(f.descriptor() == ring))
        throw ValidationError("integrand must live in the split ring");
    if (!f.is_polynomial())
        throw ValidationError("integrand must be a polynomial");
    std::vector<std::size_t> perm(d);
    for (int p = 0; p + 1 < d; ++p) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::swap(perm[p], perm[p + 1]);
        if (!(f.permuted(perm) == f))
            throw ValidationError("localization needs a symmetric integrand");
    }

    const RingDescriptor integers;
    const auto un = static_cast<std::size_t>(n);
    const int cap = ring.truncation();
    const int vandermonde_degree = n * (n - 1) / 2;
    const int fibre = d * (n - d);
    auto y = [&](std::size_t k) { return LaurentPoly::variable(un, integers, k + 1); };

    // Terms of f above this degree only feed result components above the truncation.
    const int f_cap = cap + fibre;
    std::vector<std::pair<Exponents, LaurentPoly>> f_terms;
    for (const auto& t : f.terms()) {
        const int deg = total_degree(t.exponents) + t.coeff.max_degree();
        LaurentPoly c = drop_above(as_integer_poly(t.coeff, integers),
                                   f_cap - total_degree(t.exponents));
        if (!c.is_zero() && deg >= 0)
            f_terms.emplace_back(t.exponents, std::move(c));
    }

    LaurentPoly numerator(un, integers);
    std::vector<bool> in(un, false);
    std::fill(in.begin(), in.begin() + d, true);
    // Enumerate d-subsets via prev_permutation on the indicator vector.
    do {
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < un; ++k)
            if (in[k])
                members.push_back(k);

        LaurentPoly weight = LaurentPoly::constant(un, integers, 1);  // Vandermonde / fixed-point denominator
        int sign = 1;
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j) {
                if (in[i] == in[j])
                    weight *= y(i) - y(j);
                else if (in[i])
                    sign = -sign;
            }
        if (sign < 0)
            weight = -weight;

        LaurentPoly at_point(un, integers);
        for (const auto& [exps, c] : f_terms) {
            LaurentPoly term = c;
            for (int i = 0; i < d; ++i)
                if (exps[i] > 0)
                    term *= (-y(members[i])).pow(static_cast<unsigned>(exps[i]));
            at_point += term;
        }
        numerator += drop_above(at_point * weight, cap + vandermonde_degree);
    } while (std::prev_permutation(in.begin(), in.end()));

    LaurentPoly quotient = numerator;
    try {
        for (std::size_t i = 0; i < un; ++i)
            for (std::size_t j = i + 1; j < un; ++j)
                quotient = divide_by_difference(quotient, i, j);
    } catch (const MathContractError& e) {
        throw OracleMismatch(std::string("localization sum is not a polynomial: ") + e.what());
    }

    std::vector<Term> terms;
    for (const auto& t : quotient.terms()) {
        const auto value = t.coeff.as_integer();
        Monomial m(t.exponents.begin(), t.exponents.end());
        terms.push_back(Term{std::move(m), 0, *value});
    }
    return RingElement::from_terms(ring, std::move(terms));
}

RingElement brute_force_coeff(std::span<const LaurentPoly> factors, const ExtractionTarget& m) {
    if (factors.empty())
        throw ValidationError("brute_force_coeff needs at least one factor");
    LaurentPoly product = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        product = lmul(product, factors[i]);
    return coeff(product, m);
}

std::string to_string(const SpaceDescriptor& space) {
    switch (space.kind) {
    case SpaceKind::Grassmann:
        return "G(" + std::to_string(space.d) + "," + std::to_string(space.n) + ")";
    case SpaceKind::Lagrangian:
        return "LG(" + std::to_string(space.n) + "," + std::to_string(2 * space.n) + ")";
    case SpaceKind::Projective:
        return "P^" + std::to_string(space.n);
    case SpaceKind::Quadric:
        return "Q^" + std::to_string(space.r - 2) + " (rank " + std::to_string(space.r) + ")";
    }
    return "?";
}

int space_dimension(const SpaceDescriptor& space) {
    switch (space.kind) {
    case SpaceKind::Grassmann:
        return space.d * (space.n - space.d);
    case SpaceKind::Lagrangian:
        return space.n * (space.n + 1) / 2;
    case SpaceKind::Projective:
        return space.n;
    case SpaceKind::Quadric:
        return space.r - 2;
    }
    return 0;
}

mpz_class classical_degree(const SpaceDescriptor& space) {
    switch (space.kind) {
    case SpaceKind::Grassmann: {
        if (space.d < 1 || space.d >= space.n)
            throw ValidationError("grassmann(d, n) needs 1 <= d < n");
        const int dim = space.d * (space.n - space.d);
        mpz_class num = factorial(dim);
        mpz_class den = 1;
        for (int i = 0; i < space.d; ++i) {
            num *= factorial(i);
            den *= factorial(space.n - space.d + i);
        }
        return num / den;
    }
    case SpaceKind::Lagrangian: {
        if (space.n < 1)
            throw ValidationError("lagrangian(n) needs n >= 1");
        mpz_class den = 1;
        for (int i = 1; i <= space.n; ++i) {
            mpz_class dfact;
            mpz_2fac_ui(dfact.get_mpz_t(), static_cast<unsigned long>(2 * i - 1));
            den *= dfact;
        }
        return factorial(space.n * (space.n + 1) / 2) / den;
    }
    case SpaceKind::Projective:
        if (space.n < 0)
            throw ValidationError("projective(n) needs n >= 0");
        return 1;
    case SpaceKind::Quadric:
        if (space.r < 2)
            throw ValidationError("quadric(r) needs r >= 2");
        return 2;
    }
    return 0;
}

RingElement engine_degree(const SpaceDescriptor& space) {
    const RingDescriptor point;
    classical_degree(space);  // validates the parameters
    const int dim = space_dimension(space);
    switch (space.kind) {
    case SpaceKind::Grassmann: {
        const FlagSpec spec(Family::A, VectorBundleData::trivial("E", space.n, point), {space.d});
        return push(spec, power_of_sum(static_cast<std::size_t>(space.d), dim));
    }
    case SpaceKind::Lagrangian: {
        const FlagSpec spec(Family::C, VectorBundleData::trivial("E", 2 * space.n, point),
                            {space.n});
        return push(spec, power_of_sum(static_cast<std::size_t>(space.n), dim));
    }
    case SpaceKind::Projective: {
        const FlagSpec spec(Family::A, VectorBundleData::trivial("E", space.n + 1, point), {1});
        return push(spec, power_of_sum(1, dim));
    }
    case SpaceKind::Quadric: {
        const FlagSpec spec(Family::BD, VectorBundleData::trivial("E", space.r, point), {1});
        return push(spec, power_of_sum(1, dim));
    }
    }
    return RingElement(point);
}

} // namespace gysin
