#include "gysin/schur_det.hpp"

#include "gysin/determinant.hpp"
#include "gysin/error.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gysin {

IntSeq operator-(const IntSeq& a, const IntSeq& b) {
    if (a.size() != b.size())
        throw ValidationError("sequence length mismatch: " + to_string(a) + " vs " + to_string(b));
    IntSeq out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

std::string to_string(const IntSeq& seq) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < seq.size(); ++i)
        os << (i ? "," : "") << seq[i];
    os << ']';
    return os.str();
}

IntSeq parse_int_seq(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;
    if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']')
        throw ValidationError("integer sequence must look like [3,1,0], got '" + std::string(text) +
                              "'");
    IntSeq out;
    const std::string body = compact.substr(1, compact.size() - 2);
    if (body.empty())
        return out;
    std::size_t start = 0;
    while (start <= body.size()) {
        const std::size_t comma = body.find(',', start);
        const std::string item = body.substr(start, comma == std::string::npos ? std::string::npos
                                                                                 : comma - start);
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size())
            throw ValidationError("bad entry '" + item + "' in integer sequence '" +
                                  std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

LaurentPoly schur_bialternant(const IntSeq& lambda, const RingDescriptor& descriptor) {
    const int d = static_cast<int>(lambda.size());
    if (d == 0)
        throw ValidationError("Schur polynomial of an empty sequence");
    for (int i = 1; i <= d; ++i)
        if (lambda[i - 1] < i - d)
            throw ValidationError("bialternant needs lambda_i >= i - d; " + to_string(lambda) +
                                  " violates it at i = " + std::to_string(i));
    const auto arity = static_cast<std::size_t>(d);
    const RingElement one = RingElement::constant(descriptor, 1);
    Matrix<LaurentPoly> numerator(arity, std::vector<LaurentPoly>(arity));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            Exponents e(arity, 0);
            e[j - 1] = lambda[i - 1] + d - i;
            numerator[i - 1][j - 1] = LaurentPoly::monomial(e, one);
        }
    LaurentPoly q = laurent_determinant(numerator);
    for (std::size_t i = 0; i < arity; ++i)
        for (std::size_t j = i + 1; j < arity; ++j)
            q = divide_by_difference(q, i, j);
    return q;
}

RingElement jacobi_trudi(const IntSeq& lambda, const std::function<RingElement(int)>& h,
                         const RingDescriptor& descriptor) {
    const int d = static_cast<int>(lambda.size());
    const RingElement zero(descriptor);
    const RingElement one = RingElement::constant(descriptor, 1);
    for (int i = 1; i <= d; ++i)
        if (lambda[i - 1] < i - d)
            return zero;  // row i has only negative indices
    Matrix<RingElement> m(d, std::vector<RingElement>(d, zero));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const int k = lambda[i - 1] - i + j;
            m[i - 1][j - 1] = k < 0 ? zero : h(k);
        }
    return determinant(m, zero, one);
}

RingElement segre_schur(const VectorBundleData& bundle, const IntSeq& lambda) {
    const SegreTable& s = bundle.segre();
    return jacobi_trudi(lambda, [&s](int k) { return s[k]; }, bundle.descriptor());
}

RingElement segre_schur_quadratic(const VectorBundleData& bundle, const IntSeq& lambda) {
    const int d = static_cast<int>(lambda.size());
    const RingDescriptor& ring = bundle.descriptor();
    const RingElement zero(ring);
    for (int i = 1; i <= d; ++i)
        if (lambda[i - 1] + 2 * (d - i) < 0)
            return zero;
    const SegreTable& s = bundle.segre();
    Matrix<RingElement> m(d, std::vector<RingElement>(d, zero));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            m[i - 1][j - 1] = s[lambda[i - 1] + 2 * (j - i)];
    return determinant(m, zero, RingElement::constant(ring, 1));
}

IntSeq monomial_shift(const FlagSpec& spec) {
    const int d = spec.d();
    const int rank = spec.rank();
    IntSeq shift(d, 0);
    int prev = 0;
    for (int dk : spec.dims()) {
        for (int i = d - dk + 1; i <= d - prev; ++i) {
            switch (spec.family()) {
            case Family::A:
                shift[i - 1] = rank - dk;
                break;
            case Family::C:
                shift[i - 1] = rank - d - dk + i;
                break;
            case Family::BD:
                shift[i - 1] = (rank - 1) - d - dk + i;
                break;
            }
        }
        prev = dk;
    }
    return shift;
}

namespace {

void require_trivial_line(const FlagSpec& spec) {
    if (spec.family() != Family::A && !spec.line_c1().is_zero())
        throw ValidationError("determinantal formulas for types C and BD need c1(L) = 0");
}

} // namespace

RingElement push_monomials(const FlagSpec& spec, const std::vector<MonomialTerm>& terms) {
    require_trivial_line(spec);
    const RingDescriptor& ring = spec.descriptor();
    const IntSeq shift = monomial_shift(spec);
    RingElement total(ring);
    for (const auto& term : terms) {
        if (term.exponents.size() != shift.size())
            throw ValidationError("monomial " + to_string(term.exponents) + " needs " +
                                  std::to_string(shift.size()) + " exponents");
        // The extraction determinant is det(s_{index_j + (j-i)}) (index in the
        // columns); reversing rows and columns turns it into the row form.
        IntSeq index = term.exponents - shift;
        std::reverse(index.begin(), index.end());
        const RingElement value = spec.family() == Family::A
                                      ? segre_schur(spec.bundle(), index)
                                      : segre_schur_quadratic(spec.bundle(), index);
        total += term.coeff * value;
    }
    if (spec.family() == Family::BD)
        total *= mpz_class(1) << static_cast<mp_bitcnt_t>(spec.d());
    return total;
}

RingElement push_schur_grassmann_A(const VectorBundleData& bundle, int d, const IntSeq& lambda) {
    const int n = bundle.rank();
    if (d < 1 || d > n - 1)
        throw ValidationError("Grassmann bundle needs 1 <= d <= rank - 1");
    if (static_cast<int>(lambda.size()) != d)
        throw ValidationError("Schur index " + to_string(lambda) + " must have " +
                              std::to_string(d) + " entries");
    return segre_schur(bundle, lambda - IntSeq(d, n - d));
}

IntSeq isotropic_schur_shift(const FlagSpec& spec) {
    if (spec.family() == Family::A || spec.m() != 1)
        throw ValidationError("isotropic Schur formula needs a single-step C or BD flag");
    const int d = spec.d();
    IntSeq shift(d);
    for (int i = 1; i <= d; ++i)
        shift[i - 1] = spec.family() == Family::C ? spec.rank() - d + 1 - i : spec.rank() - d - i;
    return shift;
}

RingElement push_schur_isotropic(const FlagSpec& spec, const IntSeq& lambda) {
    const IntSeq shift = isotropic_schur_shift(spec);
    require_trivial_line(spec);
    if (lambda.size() != shift.size())
        throw ValidationError("Schur index " + to_string(lambda) + " must have " +
                              std::to_string(shift.size()) + " entries");
    RingElement result = segre_schur_quadratic(spec.bundle(), lambda - shift);
    if (spec.family() == Family::BD)
        result *= mpz_class(1) << static_cast<mp_bitcnt_t>(spec.d());
    return result;
}

std::pair<RingElement, RingElement> antisym_extract_lemma_check(const LaurentPoly& antisymmetric,
                                                                int e) {
    const std::size_t d = antisymmetric.arity();
    if (d == 0)
        throw ValidationError("antisymmetric function needs at least one variable");
    std::vector<std::size_t> perm(d);
    for (std::size_t p = 0; p + 1 < d; ++p) {
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::swap(perm[p], perm[p + 1]);
        if (!(antisymmetric.permuted(perm) == -antisymmetric))
            throw ValidationError("function is not antisymmetric under t" + std::to_string(p + 1) +
                                  " <-> t" + std::to_string(p + 2));
    }
    const RingDescriptor& ring = antisymmetric.descriptor();
    ExtractionTarget target(d);
    Exponents staircase(d);
    for (std::size_t j = 1; j <= d; ++j) {
        target[j - 1] = e - static_cast<int>(j);
        staircase[j - 1] = static_cast<int>(j) - 1;
    }
    LaurentPoly sums = LaurentPoly::constant(d, ring, 1);
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j)
            sums *= LaurentPoly::variable(d, ring, i) + LaurentPoly::variable(d, ring, j);
    const LaurentPoly left_factors[] = {antisymmetric, sums};
    return {staged_extract(left_factors, target), coeff(antisymmetric.shifted(staircase), target)};
}

} // namespace gysin
