#include "gysin/flag_push.hpp"

#include "gysin/error.hpp"

#include <numeric>

namespace gysin {

std::string to_string(Family family) {
    switch (family) {
    case Family::A:
        return "A";
    case Family::C:
        return "C";
    case Family::BD:
        return "BD";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "A")
        return Family::A;
    if (text == "C")
        return Family::C;
    if (text == "BD" || text == "B" || text == "D")
        return Family::BD;
    throw ValidationError("unknown flag family '" + std::string(text) + "' (expected A, C or BD)");
}

FlagSpec::FlagSpec(Family family, VectorBundleData bundle, std::vector<int> dims,
                   std::optional<RingElement> line_c1)
    : family_(family), bundle_(std::move(bundle)), dims_(std::move(dims)),
      line_c1_(std::move(line_c1)) {
    if (dims_.empty())
        throw ValidationError("flag dimension sequence is empty");
    int previous = 0;
    for (int dk : dims_) {
        if (dk <= previous)
            throw ValidationError("flag dimensions must be strictly increasing positive integers");
        previous = dk;
    }
    const int rank = bundle_.rank();
    const int top = dims_.back();
    switch (family_) {
    case Family::A:
        if (line_c1_)
            throw ValidationError("type A flag bundles take no line bundle");
        if (top > rank - 1)
            throw ValidationError("type A needs d_m <= rank - 1 = " + std::to_string(rank - 1) +
                                  ", got d_m = " + std::to_string(top));
        break;
    case Family::C:
        if (rank % 2 != 0)
            throw ValidationError("type C needs a bundle of even rank, got " + std::to_string(rank));
        if (top > rank / 2)
            throw ValidationError("type C needs d_m <= rank/2 = " + std::to_string(rank / 2) +
                                  ", got d_m = " + std::to_string(top));
        break;
    case Family::BD:
        if (top > rank / 2)
            throw ValidationError("type BD needs d_m <= floor(rank/2) = " +
                                  std::to_string(rank / 2) + ", got d_m = " + std::to_string(top));
        break;
    }
    if (line_c1_) {
        if (!(line_c1_->descriptor() == bundle_.descriptor()))
            throw ValidationError("c1(L) lives in a different ring than the bundle");
        if (!line_c1_->is_homogeneous_of_degree(1))
            throw ValidationError("c1(L) = " + line_c1_->to_string() +
                                  " is not homogeneous of degree 1");
    }
}

RingElement FlagSpec::line_c1() const {
    return line_c1_ ? *line_c1_ : RingElement(bundle_.descriptor());
}

int FlagSpec::r(int k) const {
    if (k < 1 || k > m())
        throw ValidationError("block index out of range");
    return dims_[k - 1] - (k == 1 ? 0 : dims_[k - 2]);
}

std::vector<std::pair<int, int>> FlagSpec::blocks() const {
    std::vector<std::pair<int, int>> out;
    const int dd = d();
    for (int k = 1; k <= m(); ++k) {
        const int prev = k == 1 ? 0 : dims_[k - 2];
        out.emplace_back(dd - dims_[k - 1] + 1, dd - prev);
    }
    return out;
}

namespace {

void check_variant(const FlagSpec& spec, Variant variant) {
    if (variant == Variant::OrthogonalTrivialLine) {
        if (spec.family() != Family::BD)
            throw ValidationError("the trivial-line variant applies to type BD only");
        if (!spec.line_c1().is_zero())
            throw ValidationError("the trivial-line variant needs c1(L) = 0");
    }
}

ExponentSeq block_exponents(const std::vector<int>& dims, int d, int top) {
    ExponentSeq e(d, 0);
    int prev = 0;
    for (int dk : dims) {
        for (int i = 1; i <= dk - prev; ++i)
            e[d - dk + i - 1] = top - i;
        prev = dk;
    }
    return e;
}

} // namespace

ExponentSeq exponents(const FlagSpec& spec, Variant variant) {
    check_variant(spec, variant);
    const int top = variant == Variant::OrthogonalTrivialLine ? spec.rank() - 1 : spec.rank();
    return block_exponents(spec.dims(), spec.d(), top);
}

Kernel kernel(const FlagSpec& spec, Variant variant) {
    check_variant(spec, variant);
    const auto d = static_cast<std::size_t>(spec.d());
    const RingDescriptor& ring = spec.descriptor();
    auto t = [&](std::size_t i) { return LaurentPoly::variable(d, ring, i); };
    const LaurentPoly line = LaurentPoly::constant(d, spec.line_c1());

    Kernel k{LaurentPoly::constant(d, ring, 1), 1};
    if (spec.family() == Family::A) {
        k.poly = vandermonde(d, ring);
        return k;
    }
    if (variant == Variant::OrthogonalTrivialLine) {
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = i + 1; j <= d; ++j)
                k.poly *= t(i) * t(i) - t(j) * t(j);
        k.scalar = mpz_class(1) << static_cast<mp_bitcnt_t>(d);
        return k;
    }
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j)
            k.poly *= (t(i) - t(j)) * (t(i) + t(j) + line);
    if (spec.family() == Family::BD) {
        const RingElement two = RingElement::constant(ring, 2);
        for (std::size_t i = 1; i <= d; ++i)
            k.poly *= t(i) * two + line;
    }
    return k;
}

int fiber_dimension(const FlagSpec& spec, Variant variant) {
    const ExponentSeq e = exponents(spec, variant);
    const int total = std::accumulate(e.begin(), e.end(), 0);
    const int d = spec.d();
    int kernel_degree = 0;
    switch (spec.family()) {
    case Family::A:
        kernel_degree = d * (d - 1) / 2;
        break;
    case Family::C:
        kernel_degree = d * (d - 1);
        break;
    case Family::BD:
        kernel_degree = d * (d - 1) + (variant == Variant::Standard ? d : 0);
        break;
    }
    return total - kernel_degree;
}

namespace {

void check_integrand(const LaurentPoly& f, std::size_t arity, const RingDescriptor& ring) {
    if (f.arity() != arity)
        throw ValidationError("integrand has arity " + std::to_string(f.arity()) + ", expected " +
                              std::to_string(arity));
    if (!(f.descriptor() == ring))
        throw ValidationError("integrand lives in a different ring than the bundle");
    if (!f.is_polynomial())
        throw ValidationError("integrand must be a polynomial (negative exponent found)");
}

} // namespace

RingElement push_projective(const LaurentPoly& f, const VectorBundleData& bundle) {
    check_integrand(f, 1, bundle.descriptor());
    const LaurentPoly factors[] = {f, segre_laurent(bundle, 1, 1)};
    return staged_extract(factors, {bundle.rank() - 1});
}

RingElement push_quadric(const LaurentPoly& f, const VectorBundleData& bundle,
                         const RingElement& line_c1) {
    check_integrand(f, 1, bundle.descriptor());
    if (!line_c1.is_homogeneous_of_degree(1))
        throw ValidationError("c1(L) must be homogeneous of degree 1");
    const RingDescriptor& ring = bundle.descriptor();
    const LaurentPoly quadric = LaurentPoly::variable(1, ring, 1) * RingElement::constant(ring, 2) +
                                LaurentPoly::constant(1, line_c1);
    const LaurentPoly factors[] = {f, quadric, segre_laurent(bundle, 1, 1)};
    return staged_extract(factors, {bundle.rank() - 1});
}

Variant chosen_variant(const FlagSpec& spec, const PushOptions& options) {
    if (spec.family() != Family::BD) {
        if (options.orthogonal_path == OrthogonalPath::TrivialLine)
            throw ValidationError("the trivial-line path applies to type BD only");
        return Variant::Standard;
    }
    switch (options.orthogonal_path) {
    case OrthogonalPath::General:
        return Variant::Standard;
    case OrthogonalPath::TrivialLine:
        if (!spec.line_c1().is_zero())
            throw ValidationError("the trivial-line path needs c1(L) = 0");
        return Variant::OrthogonalTrivialLine;
    case OrthogonalPath::Auto:
        break;
    }
    return spec.line_c1().is_zero() ? Variant::OrthogonalTrivialLine : Variant::Standard;
}

RingElement push(const FlagSpec& spec, const LaurentPoly& f, const PushOptions& options) {
    const auto d = static_cast<std::size_t>(spec.d());
    check_integrand(f, d, spec.descriptor());
    if (options.halve_maximal_orthogonal)
        require_halvable(spec);

    const Variant variant = chosen_variant(spec, options);
    const Kernel k = kernel(spec, variant);
    std::vector<LaurentPoly> factors;
    factors.reserve(d + 2);
    factors.push_back(f);
    factors.push_back(k.poly);
    for (std::size_t i = 1; i <= d; ++i)
        factors.push_back(segre_laurent(spec.bundle(), i, d));
    RingElement result = staged_extract(factors, exponents(spec, variant));
    result *= k.scalar;
    return options.halve_maximal_orthogonal ? halve_for_component(spec, result) : result;
}

void require_halvable(const FlagSpec& spec) {
    if (!(spec.family() == Family::BD && spec.rank() % 2 == 0 && spec.d() == spec.rank() / 2))
        throw ValidationError("halving applies only to type BD with even rank 2n and d_m = n");
}

RingElement halve_for_component(const FlagSpec& spec, const RingElement& full) {
    require_halvable(spec);
    if (!full.divisible_by(2))
        throw MathContractError("cannot halve " + full.to_string() +
                                ": a coefficient is odd, so the class does not split "
                                "evenly over the two components");
    return full.exact_div(2);
}

ExponentSeq full_roots_exponents(const FlagSpec& spec) {
    if (spec.family() != Family::A)
        throw ValidationError("the all-Chern-roots formula is for type A");
    std::vector<int> dims = spec.dims();
    dims.push_back(spec.rank());
    return block_exponents(dims, spec.rank(), spec.rank());
}

RingElement push_full_roots_A(const FlagSpec& spec, const LaurentPoly& f) {
    const ExponentSeq e = full_roots_exponents(spec);
    const auto n = static_cast<std::size_t>(spec.rank());
    check_integrand(f, n, spec.descriptor());
    std::vector<LaurentPoly> factors;
    factors.reserve(n + 2);
    factors.push_back(f);
    factors.push_back(vandermonde(n, spec.descriptor()));
    for (std::size_t i = 1; i <= n; ++i)
        factors.push_back(segre_laurent(spec.bundle(), i, n));
    return staged_extract(factors, e);
}

} // namespace gysin
