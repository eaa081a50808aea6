#include "gysin/verify.hpp"

#include "gysin/error.hpp"
#include "gysin/oracle.hpp"
#include "gysin/schur_det.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <sstream>

namespace gysin {

namespace {

using Outcome = std::optional<std::string>;
using Body = std::function<Outcome(Random&, int)>;

constexpr std::size_t kMaxCounterexamples = 3;

// Comparisons in the current case whose expected value is nonzero.
thread_local int nonzero_comparisons = 0;

CheckResult repeat(const std::string& name, const std::string& description,
                   const VerifyConfig& config, int cases, const Body& body) {
    CheckResult result{name, description, 0, 0, 0, {}};
    Random rng(config.seed, name);
    for (int k = 0; k < cases; ++k) {
        Outcome failure;
        nonzero_comparisons = 0;
        try {
            failure = body(rng, k);
        } catch (const Error& e) {
            failure = std::string("exception: ") + e.what();
        }
        ++result.cases;
        if (nonzero_comparisons > 0)
            ++result.nontrivial;
        if (failure) {
            ++result.failures;
            if (result.counterexamples.size() < kMaxCounterexamples)
                result.counterexamples.push_back("case " + std::to_string(k) + ": " + *failure);
        }
    }
    return result;
}

std::string show(const RingElement& x) { return x.to_string(); }
std::string show(const LaurentPoly& x) { return x.to_string(); }
std::string show(const IntSeq& x) { return to_string(x); }

template <typename T>
Outcome expect_equal(const T& got, const T& want, const std::string& what,
                     const std::string& context) {
    if (!want.is_zero())
        ++nonzero_comparisons;
    if (got == want)
        return std::nullopt;
    return what + ": " + show(got) + " != " + show(want) + " [" + context + "]";
}

std::string describe_spec(const FlagSpec& spec) {
    std::ostringstream os;
    os << to_string(spec.family()) << " rank " << spec.rank() << " dims (";
    for (std::size_t k = 0; k < spec.dims().size(); ++k)
        os << (k ? "," : "") << spec.dims()[k];
    os << ") c = [";
    for (int i = 1; i <= spec.rank(); ++i)
        os << (i > 1 ? ", " : "") << spec.bundle().chern(i);
    os << "]";
    if (spec.line())
        os << " c1(L) = " << *spec.line();
    return os.str();
}

struct SpecShape {
    int max_rank = 8;
    int max_d = 3;
    bool line = false;
    bool self_dual = false;
    bool single_step = false;
};

FlagSpec random_spec(Random& rng, Family family, const RingDescriptor& ring, const SpecShape& shape) {
    int rank = 2;
    int d_max = 1;
    switch (family) {
    case Family::A:
        rank = rng.uniform(2, shape.max_rank);
        d_max = std::min(shape.max_d, rank - 1);
        break;
    case Family::C:
        rank = 2 * rng.uniform(1, shape.max_rank / 2);
        d_max = std::min(shape.max_d, rank / 2);
        break;
    case Family::BD:
        rank = rng.uniform(2, shape.max_rank);
        d_max = std::min(shape.max_d, rank / 2);
        break;
    }
    const int d = rng.uniform(1, d_max);
    const std::vector<int> dims = shape.single_step ? std::vector<int>{d} : rng.dims_ending_at(d);
    std::optional<RingElement> line;
    if (family != Family::A && shape.line && rng.chance(70))
        line = rng.homogeneous(ring, 1);
    return FlagSpec(family, rng.bundle(ring, rank, shape.self_dual), dims, line);
}

Family random_family(Random& rng) {
    return rng.pick(std::vector<Family>{Family::A, Family::C, Family::BD});
}

LaurentPoly univariate_power(std::size_t arity, const RingDescriptor& ring, std::size_t var, int k) {
    Exponents e(arity, 0);
    e[var - 1] = k;
    return LaurentPoly::monomial(e, RingElement::constant(ring, 1));
}

// Exponents of a random term of f, or random exponents in [lo, hi] if f is zero.
Exponents some_exponents(Random& rng, const LaurentPoly& f, int lo, int hi) {
    if (f.is_zero()) {
        Exponents e(f.arity());
        for (auto& x : e)
            x = rng.uniform(lo, hi);
        return e;
    }
    const auto terms = f.terms();
    return terms[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(terms.size()) - 1))].exponents;
}

RingElement permute_generators(const RingElement& x, const std::vector<std::size_t>& perm) {
    std::vector<Term> terms;
    for (const auto& t : x.terms()) {
        Monomial m(t.exponents.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            m[perm[i]] = t.exponents[i];
        terms.push_back(Term{std::move(m), 0, t.coeff});
    }
    return RingElement::from_terms(x.descriptor(), std::move(terms));
}

LaurentPoly schur_integrand(const IntSeq& lambda, const RingDescriptor& ring) {
    return with_coefficients_in(schur_bialternant(lambda, RingDescriptor()), ring);
}

// ---------------------------------------------------------------- ring suite

CheckResult ring_axioms(const VerifyConfig& config) {
    return repeat("ring-axioms", "associativity, commutativity, distributivity, unit, negation",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(2, 6));
        const int top = ring.truncation();
        const auto x = rng.element(ring, top);
        const auto y = rng.element(ring, top);
        const auto z = rng.element(ring, top);
        const std::string ctx = "x = " + show(x) + ", y = " + show(y) + ", z = " + show(z);
        if (auto f = expect_equal((x * y) * z, x * (y * z), "associativity", ctx))
            return f;
        if (auto f = expect_equal(x * y, y * x, "commutativity", ctx))
            return f;
        if (auto f = expect_equal(x * (y + z), x * y + x * z, "distributivity", ctx))
            return f;
        if (auto f = expect_equal(x * RingElement::constant(ring, 1), x, "unit", ctx))
            return f;
        return expect_equal(x + (-x), RingElement(ring), "negation", ctx);
    });
}

CheckResult truncation_congruence(const VerifyConfig& config) {
    return repeat("truncation-congruence", "truncating before or after a product agrees", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const int low = rng.uniform(0, 5);
        const auto big = rng.ring(low + 3);
        const auto small = big.with_truncation(low);
        const auto a = rng.element(big, low + 3);
        const auto b = rng.element(big, low + 3);
        return expect_equal((a * b).with_descriptor(small),
                            a.with_descriptor(small) * b.with_descriptor(small), "mul",
                            "a = " + show(a) + ", b = " + show(b));
    });
}

CheckResult grade_decomposition(const VerifyConfig& config) {
    return repeat("grade-decomposition", "an element is the sum of its homogeneous components",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 6));
        const auto x = rng.element(ring, ring.truncation(), 4);
        RingElement sum(ring);
        for (int k = 0; k <= ring.truncation(); ++k) {
            const auto part = x.grade_component(k);
            if (!part.is_homogeneous_of_degree(k))
                return "component " + std::to_string(k) + " of " + show(x) + " is not homogeneous";
            sum += part;
        }
        return expect_equal(sum, x, "sum of components", show(x));
    });
}

CheckResult segre_inverse(const VerifyConfig& config) {
    return repeat("segre-inverse", "s(E) c(E) = 1, s_i homogeneous, odd s_i = 0 when self-dual",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 6));
        const bool self_dual = rng.chance(30);
        const auto e = rng.bundle(ring, rng.uniform(1, 5), self_dual);
        const auto& s = e.segre();
        const std::string ctx = "rank " + std::to_string(e.rank()) + ", c1 = " + show(e.chern(1));
        for (int i = 0; i <= ring.truncation(); ++i) {
            RingElement product(ring);
            for (int j = 0; j <= i; ++j)
                product += s[j] * e.chern(i - j);
            const auto want = RingElement::constant(ring, i == 0 ? 1 : 0);
            if (auto f = expect_equal(product, want, "degree " + std::to_string(i) + " of s*c", ctx))
                return f;
            if (!s[i].is_homogeneous_of_degree(i))
                return "s_" + std::to_string(i) + " = " + show(s[i]) + " is not homogeneous";
            if (self_dual && i % 2 == 1 && !s[i].is_zero())
                return "self-dual bundle has s_" + std::to_string(i) + " = " + show(s[i]);
        }
        return std::nullopt;
    });
}

CheckResult bialternant_jacobi_trudi(const VerifyConfig& config) {
    return repeat("bialternant-jacobi-trudi",
                  "bialternant Schur polynomial equals Jacobi-Trudi in complete functions", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const int d = rng.uniform(1, 3);
        const IntSeq lambda = rng.partition(d, 4);
        std::vector<Generator> gens;
        for (int k = 1; k <= d; ++k)
            gens.push_back({"x" + std::to_string(k), 1});
        const auto ring = RingDescriptor::define(gens, 12);
        // roots -x_k: the Segre classes are the complete homogeneous functions of x
        std::vector<RingElement> elementary(static_cast<std::size_t>(d) + 1, RingElement(ring));
        elementary[0] = RingElement::constant(ring, 1);
        for (int k = 1; k <= d; ++k)
            for (int i = k; i >= 1; --i)
                elementary[i] -= elementary[i - 1] *
                                 RingElement::generator(ring, "x" + std::to_string(k));
        const VectorBundleData e("E", d,
                                 std::vector<RingElement>(elementary.begin() + 1, elementary.end()),
                                 ring);
        RingElement value(ring);
        const auto schur = schur_bialternant(lambda, RingDescriptor());
        for (const auto& t : schur.terms())
            value += RingElement::monomial(ring, Monomial(t.exponents.begin(), t.exponents.end()),
                                           *t.coeff.as_integer());
        return expect_equal(segre_schur(e, lambda), value, "s_lambda", show(lambda));
    });
}

// ---------------------------------------------------------- extraction suite

CheckResult shifting_rule(const VerifyConfig& config) {
    return repeat("shifting-rule", "[m~ m](m~ f) = [m](f)", config, config.cases,
                  [](Random& rng, int) -> Outcome {
        const auto arity = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto ring = rng.ring(rng.uniform(0, 4));
        const auto f = rng.laurent(arity, ring, -3, 3, 6, ring.truncation());
        Exponents m = some_exponents(rng, f, -3, 3);
        if (rng.chance(20))
            m[0] += 1;
        Exponents shift(arity);
        for (auto& x : shift)
            x = rng.uniform(-2, 3);
        Exponents moved = m;
        for (std::size_t i = 0; i < arity; ++i)
            moved[i] += shift[i];
        const auto shifter = LaurentPoly::monomial(shift, RingElement::constant(ring, 1));
        return expect_equal(coeff(lmul(shifter, f), moved), coeff(f, m), "shifted coefficient",
                            "f = " + show(f));
    });
}

CheckResult coeff_linearity(const VerifyConfig& config) {
    return repeat("coeff-linearity", "[m](a f + b g) = a [m]f + b [m]g for base scalars a, b",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto arity = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto ring = rng.ring(rng.uniform(0, 4));
        const int top = ring.truncation();
        const auto f = rng.laurent(arity, ring, -2, 3, 5, top);
        const auto g = rng.laurent(arity, ring, -2, 3, 5, top);
        const auto a = rng.element(ring, top);
        const auto b = rng.element(ring, top);
        const Exponents m = some_exponents(rng, rng.chance(50) ? f : g, -2, 3);
        return expect_equal(coeff(a * f + b * g, m), a * coeff(f, m) + b * coeff(g, m),
                            "linear combination", "f = " + show(f) + ", g = " + show(g));
    });
}

CheckResult staged_vs_brute(const VerifyConfig& config) {
    return repeat("staged-vs-brute", "staged extraction equals full expansion", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const auto arity = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto ring = rng.ring(rng.uniform(0, 4));
        const int top = ring.truncation();
        std::vector<LaurentPoly> factors;
        const int count = rng.uniform(1, 5);
        for (int k = 0; k < count; ++k) {
            if (rng.chance(50)) {
                factors.push_back(rng.laurent(arity, ring, -1, 2, rng.uniform(1, 4), top));
            } else {
                // Segre-like series in one variable
                const auto var = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(arity)));
                LaurentPoly series(arity, ring);
                for (int i = 0; i <= top; ++i)
                    series += univariate_power(arity, ring, var, -i) *
                              (i == 0 ? RingElement::constant(ring, 1) : rng.homogeneous(ring, i));
                if (rng.chance(30))
                    series += univariate_power(arity, ring, var, rng.uniform(1, 2));
                factors.push_back(series);
            }
        }
        // aim at a product of one term from each factor most of the time
        Exponents m(arity, 0);
        for (const auto& f : factors) {
            const auto e = some_exponents(rng, f, -2, 2);
            for (std::size_t i = 0; i < arity; ++i)
                m[i] += e[i];
        }
        if (rng.chance(25))
            for (auto& x : m)
                x = rng.uniform(-2, 4);
        std::string ctx;
        for (const auto& f : factors)
            ctx += "(" + show(f) + ")";
        return expect_equal(staged_extract(factors, m), brute_force_coeff(factors, m),
                            "staged vs brute force", ctx);
    });
}

CheckResult segre_anchor(const VerifyConfig& config) {
    return repeat("segre-anchor", "projective push of xi^(i+n-1) is s_i(E)", config, config.cases,
                  [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 6));
        const auto e = rng.bundle(ring, rng.uniform(1, 5));
        const int n = e.rank();
        for (int i = 0; i <= ring.truncation(); ++i) {
            const auto f = univariate_power(1, ring, 1, i + n - 1);
            if (auto fail = expect_equal(push_projective(f, e), e.segre()[i],
                                         "s_" + std::to_string(i),
                                         "rank " + std::to_string(n) + ", c1 = " + show(e.chern(1))))
                return fail;
        }
        return std::nullopt;
    });
}

CheckResult complete_flag(const VerifyConfig& config) {
    return repeat("complete-flag", "complete type A flag: push of xi_1 xi_2^2 ... xi_(r-1)^(r-1) is 1",
                  config, config.cases, [](Random& rng, int k) -> Outcome {
        const int r = 2 + k % 5;
        const auto ring = rng.ring(rng.uniform(0, 3));
        const auto e = rng.bundle(ring, r);
        std::vector<int> dims;
        Exponents g;
        for (int i = 1; i < r; ++i) {
            dims.push_back(i);
            g.push_back(i);
        }
        const FlagSpec spec(Family::A, e, dims);
        return expect_equal(push(spec, LaurentPoly::monomial(g, RingElement::constant(ring, 1))),
                            RingElement::constant(ring, 1), "push of g_r", describe_spec(spec));
    });
}

CheckResult degree_law(const VerifyConfig& config) {
    return repeat("degree-law", "push of a degree-g class is homogeneous of degree g - fibre dimension",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(1, 4));
        const auto spec = random_spec(rng, random_family(rng), ring, {8, 3, true, false, false});
        const int fibre = fiber_dimension(spec, chosen_variant(spec, {}));
        const int g = fibre + rng.uniform(-1, ring.truncation());
        const auto f = rng.homogeneous_polynomial(static_cast<std::size_t>(spec.d()), ring, g, 4);
        const auto result = push(spec, f);
        if (!result.is_zero())
            ++nonzero_comparisons;
        if (result.is_homogeneous_of_degree(g - fibre))
            return std::nullopt;
        return "result " + show(result) + " of f = " + show(f) + " is not of degree " +
               std::to_string(g - fibre) + " [" + describe_spec(spec) + "]";
    });
}

CheckResult base_linearity(const VerifyConfig& config) {
    return repeat("base-linearity", "push(a f) = a push(f) for base classes a", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(1, 4));
        const auto spec = random_spec(rng, random_family(rng), ring, {8, 3, true, false, false});
        const auto f = rng.polynomial(static_cast<std::size_t>(spec.d()), ring, spec.rank() + 1,
                                      rng.uniform(1, 4), ring.truncation());
        const auto a = rng.element(ring, ring.truncation());
        return expect_equal(push(spec, a * f), a * push(spec, f), "scaled push",
                            "a = " + show(a) + ", f = " + show(f) + " [" + describe_spec(spec) + "]");
    });
}

CheckResult one_variable_specializations(const VerifyConfig& config) {
    return repeat("d1-specializations", "single-step d = 1 flags reduce to the projective and quadric formulas",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 4));
        const Family family = random_family(rng);
        int rank = rng.uniform(2, 8);
        if (family == Family::C)
            rank += rank % 2;
        std::optional<RingElement> line;
        if (family != Family::A && rng.chance(60))
            line = rng.homogeneous(ring, 1);
        const FlagSpec spec(family, rng.bundle(ring, rank), {1}, line);
        const auto f = rng.polynomial(1, ring, rank + 2, rng.uniform(1, 4), ring.truncation());
        const auto want = family == Family::BD ? push_quadric(f, spec.bundle(), spec.line_c1())
                                               : push_projective(f, spec.bundle());
        return expect_equal(push(spec, f), want, "d = 1",
                            "f = " + show(f) + " [" + describe_spec(spec) + "]");
    });
}

CheckResult orthogonal_trivial_line(const VerifyConfig& config) {
    return repeat("orthogonal-trivial-line",
                  "with c1(L) = 0 the general and trivial-line orthogonal formulas agree", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 4));
        const auto spec = random_spec(rng, Family::BD, ring, {8, 3, false, false, false});
        const auto f = rng.polynomial(static_cast<std::size_t>(spec.d()), ring, spec.rank() + 1,
                                      rng.uniform(1, 5), ring.truncation());
        return expect_equal(push(spec, f, {false, OrthogonalPath::General}),
                            push(spec, f, {false, OrthogonalPath::TrivialLine}), "general vs trivial-line",
                            "f = " + show(f) + " [" + describe_spec(spec) + "]");
    });
}

CheckResult block_symmetry(const VerifyConfig& config) {
    return repeat("block-symmetry",
                  "for block-symmetric f, permuting variables within a block leaves the push unchanged",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 3));
        const auto spec = random_spec(rng, random_family(rng), ring, {7, 3, true, false, false});
        const auto d = static_cast<std::size_t>(spec.d());
        const auto f = block_symmetrized(
            rng.polynomial(d, ring, spec.rank(), rng.uniform(1, 3), ring.truncation()), spec);
        std::vector<std::size_t> perm(d);
        for (std::size_t i = 0; i < d; ++i)
            perm[i] = i;
        for (const auto& [first, last] : spec.blocks())
            if (last > first) {
                const int p = rng.uniform(first, last - 1);
                std::swap(perm[static_cast<std::size_t>(p - 1)], perm[static_cast<std::size_t>(p)]);
            }
        return expect_equal(push(spec, f.permuted(perm)), push(spec, f), "permuted integrand",
                            "f = " + show(f) + " [" + describe_spec(spec) + "]");
    });
}

CheckResult full_roots(const VerifyConfig& config) {
    return repeat("full-roots", "the all-roots type A formula agrees with the standard one on f(xi_(n-d+1..n))",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 3));
        const auto spec = random_spec(rng, Family::A, ring, {5, 3, false, false, false});
        const auto d = static_cast<std::size_t>(spec.d());
        const auto n = static_cast<std::size_t>(spec.rank());
        const auto f = block_symmetrized(
            rng.polynomial(d, ring, spec.rank(), rng.uniform(1, 3), ring.truncation()), spec);
        return expect_equal(push_full_roots_A(spec, f.embedded(n, n - d)), push(spec, f),
                            "all roots vs standard", "f = " + show(f) + " [" + describe_spec(spec) + "]");
    });
}

// ------------------------------------------------- extraction identities

CheckResult lemma_linearity(const VerifyConfig& config) {
    return repeat("lemma-linearity",
                  "[m] det F = det [t_j^(m_j)] F_ij when column j involves only t_j", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto ring = rng.ring(rng.uniform(0, 3));
        Matrix<LaurentPoly> f(d, std::vector<LaurentPoly>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                LaurentPoly entry(d, ring);
                for (int k = rng.uniform(1, 3); k > 0; --k)
                    entry += univariate_power(d, ring, j + 1, rng.uniform(-2, 3)) *
                             rng.element(ring, ring.truncation());
                f[i][j] = entry;
            }
        Exponents m(d);
        for (std::size_t j = 0; j < d; ++j)
            m[j] = some_exponents(rng, f[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(d) - 1))][j],
                                  -2, 3)[j];
        std::string ctx;
        for (const auto& row : f)
            for (const auto& entry : row)
                ctx += "(" + show(entry) + ")";
        return expect_equal(det_extract(f, m), coeff(laurent_determinant(f), m),
                            "det of extracted coefficients", ctx);
    });
}

CheckResult lemma_ej(const VerifyConfig& config) {
    return repeat("lemma-ej",
                  "for antisymmetric L: [t^(e-j)] L prod(t_i + t_j) = [t^(e-j)] L prod t_j^(j-1)",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto d = static_cast<std::size_t>(rng.uniform(1, 3));
        const auto ring = rng.ring(rng.uniform(0, 3));
        const int di = static_cast<int>(d);
        // Both targets have total degree d(e - d) + d(d-1)/2 more than Lambda, so
        // a homogeneous Lambda of degree d(e - d) can hit them.
        int e = rng.uniform(di, 6 + di);
        while (di * (e - di) < di * (di - 1) / 2)
            ++e;
        const bool aimed = rng.chance(75);
        LaurentPoly lambda(d, ring);
        while (lambda.is_zero()) {
            LaurentPoly seed(d, ring);
            for (int k = rng.uniform(1, 4); k > 0; --k) {
                Exponents x(d, 0);
                const int g = aimed ? di * (e - di) : rng.uniform(0, 6);
                for (int left = g; left > 0; --left)
                    ++x[static_cast<std::size_t>(rng.uniform(0, di - 1))];
                seed.add_term(x, rng.element(ring, ring.truncation()));
            }
            lambda = antisymmetrized(seed);
        }
        const auto [left, right] = antisym_extract_lemma_check(lambda, e);
        return expect_equal(left, right, "both extractions",
                            "Lambda = " + show(lambda) + ", e = " + std::to_string(e));
    });
}

// ------------------------------------------------------------ oracle suite

CheckResult localization_anchor(const VerifyConfig& config) {
    return repeat("localization-anchor",
                  "localization on split bundles reproduces s_i(E) from xi^(i+n-1)", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const int n = rng.uniform(2, 5);
        const SplitBundle split(n, rng.uniform(0, 5));
        const auto e = split.bundle();
        for (int i = 0; i <= split.descriptor().truncation(); ++i) {
            const auto f = univariate_power(1, split.descriptor(), 1, i + n - 1);
            const std::string ctx = "n = " + std::to_string(n) + ", i = " + std::to_string(i);
            if (auto fail = expect_equal(localization_push_grassmann(split, 1, f), e.segre()[i],
                                         "localization", ctx))
                return fail;
            if (auto fail = expect_equal(push_projective(f, e), e.segre()[i], "engine", ctx))
                return fail;
        }
        return std::nullopt;
    });
}

LaurentPoly random_symmetric(Random& rng, const RingDescriptor& ring, int d, int max_exponent,
                             int coeff_degree) {
    const auto arity = static_cast<std::size_t>(d);
    LaurentPoly f(arity, ring);
    while (f.is_zero())
        f = symmetrized(rng.polynomial(arity, ring, max_exponent, rng.uniform(1, 4), coeff_degree),
                        1, arity);
    return f;
}

CheckResult localization_vs_push(const VerifyConfig& config) {
    return repeat("localization-vs-push",
                  "type A Grassmann push on split bundles matches fixed-point localization", config,
                  config.cases, [](Random& rng, int) -> Outcome {
        const int n = rng.uniform(2, 5);
        const int d = rng.uniform(1, std::min(3, n - 1));
        const SplitBundle split(n, rng.uniform(1, 5));
        const auto& ring = split.descriptor();
        const int fibre = d * (n - d);
        const auto f = random_symmetric(rng, ring, d, (fibre + ring.truncation()) / d + 1, 2);
        const FlagSpec spec(Family::A, split.bundle(), {d});
        return expect_equal(push(spec, f), localization_push_grassmann(split, d, f),
                            "engine vs localization",
                            "n = " + std::to_string(n) + ", d = " + std::to_string(d) +
                                ", D = " + std::to_string(ring.truncation()) + ", f = " + show(f));
    });
}

CheckResult localization_symmetric(const VerifyConfig& config) {
    return repeat("localization-symmetric", "localization output is symmetric in the roots",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const int n = rng.uniform(2, 5);
        const int d = rng.uniform(1, std::min(3, n - 1));
        const SplitBundle split(n, rng.uniform(1, 4));
        const auto& ring = split.descriptor();
        // integer coefficients, so the integrand itself is symmetric in the roots
        const auto f = random_symmetric(rng, ring, d, (d * (n - d) + ring.truncation()) / d + 1, 0);
        const auto result = localization_push_grassmann(split, d, f);
        std::vector<std::size_t> perm(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = (i + 1) % perm.size();
        if (auto fail = expect_equal(permute_generators(result, perm), result, "cyclic shift", show(f)))
            return fail;
        perm = std::vector<std::size_t>(static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < perm.size(); ++i)
            perm[i] = i;
        std::swap(perm[0], perm[1]);
        return expect_equal(permute_generators(result, perm), result, "transposition", show(f));
    });
}

// ----------------------------------------------------------- degrees suite

struct DegreeCase {
    SpaceDescriptor space;
    long expected;
};

CheckResult degree_table(const VerifyConfig& config) {
    static const std::vector<DegreeCase> table{
        {SpaceDescriptor::grassmann(2, 4), 2},  {SpaceDescriptor::grassmann(2, 5), 5},
        {SpaceDescriptor::grassmann(3, 6), 42}, {SpaceDescriptor::lagrangian(2), 2},
        {SpaceDescriptor::lagrangian(3), 16},   {SpaceDescriptor::quadric(3), 2},
        {SpaceDescriptor::quadric(4), 2},       {SpaceDescriptor::quadric(5), 2},
        {SpaceDescriptor::quadric(6), 2},       {SpaceDescriptor::quadric(7), 2},
        {SpaceDescriptor::quadric(8), 2},       {SpaceDescriptor::projective(1), 1},
        {SpaceDescriptor::projective(2), 1},    {SpaceDescriptor::projective(3), 1},
        {SpaceDescriptor::projective(4), 1},    {SpaceDescriptor::projective(5), 1},
        {SpaceDescriptor::projective(6), 1},
    };
    return repeat("degree-table", "engine degrees over a point match the classical table", config,
                  static_cast<int>(table.size()), [](Random&, int k) -> Outcome {
        const auto& entry = table[static_cast<std::size_t>(k)];
        const RingDescriptor point;
        const auto want = RingElement::constant(point, entry.expected);
        const std::string name = to_string(entry.space);
        if (auto fail = expect_equal(RingElement::constant(point, classical_degree(entry.space)),
                                     want, "closed form", name))
            return fail;
        return expect_equal(engine_degree(entry.space), want, "engine", name);
    });
}

CheckResult classical_degrees(const VerifyConfig& config) {
    std::vector<SpaceDescriptor> spaces;
    for (int n = 2; n <= 7; ++n)
        for (int d = 1; d < n; ++d)
            spaces.push_back(SpaceDescriptor::grassmann(d, n));
    for (int n = 1; n <= 4; ++n)
        spaces.push_back(SpaceDescriptor::lagrangian(n));
    return repeat("classical-degrees", "engine degrees of G(d,n), n <= 7, and LG(n), n <= 4, match the closed forms",
                  config, static_cast<int>(spaces.size()), [spaces](Random&, int k) -> Outcome {
        const auto& space = spaces[static_cast<std::size_t>(k)];
        return expect_equal(engine_degree(space),
                            RingElement::constant(RingDescriptor(), classical_degree(space)),
                            "degree", to_string(space));
    });
}

// -------------------------------------------------------- cross-path suite

CheckResult monomials_cross_path(const VerifyConfig& config, Family family) {
    const std::string name = "monomials-" + to_string(family);
    return repeat(name, "extraction and determinantal monomial formulas agree for type " + to_string(family),
                  config, config.cases, [family](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 4));
        const auto spec = random_spec(rng, family, ring, {8, 3, false, false, false});
        const IntSeq shift = monomial_shift(spec);
        std::vector<MonomialTerm> terms;
        LaurentPoly f(static_cast<std::size_t>(spec.d()), ring);
        for (int k = rng.uniform(1, 4); k > 0; --k) {
            IntSeq lambda(shift.size());
            for (std::size_t i = 0; i < shift.size(); ++i)
                lambda[i] = std::max(0, shift[i] + rng.uniform(-1, ring.truncation() + 1));
            const auto c = rng.element(ring, ring.truncation());
            terms.push_back({c, lambda});
            f += LaurentPoly::monomial(Exponents(lambda.begin(), lambda.end()), c);
        }
        return expect_equal(push(spec, f), push_monomials(spec, terms), "extraction vs determinant",
                            "f = " + show(f) + " [" + describe_spec(spec) + "]");
    });
}

CheckResult schur_grassmann(const VerifyConfig& config) {
    return repeat("schur-grassmann", "Grassmann push of s_lambda(xi) is s_(lambda - (n-d)^d)(E)",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 4));
        const auto spec = random_spec(rng, Family::A, ring, {8, 3, false, false, true});
        const int n = spec.rank();
        const int d = spec.d();
        IntSeq lambda(static_cast<std::size_t>(d));
        for (auto& x : lambda)
            x = std::max(0, n - d + rng.uniform(-1, ring.truncation()));
        std::sort(lambda.begin(), lambda.end(), std::greater<>());
        return expect_equal(push(spec, schur_integrand(lambda, ring)),
                            push_schur_grassmann_A(spec.bundle(), d, lambda), "Schur push",
                            show(lambda) + " [" + describe_spec(spec) + "]");
    });
}

IntSeq isotropic_partition(Random& rng, const FlagSpec& spec, int spread) {
    const IntSeq shift = isotropic_schur_shift(spec);
    IntSeq lambda(shift.size());
    for (std::size_t i = 0; i < shift.size(); ++i)
        lambda[i] = std::max(0, shift[i] + rng.uniform(-1, spread));
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return lambda;
}

CheckResult schur_isotropic(const VerifyConfig& config, Family family) {
    const std::string name = "schur-isotropic-" + to_string(family);
    return repeat(name, "isotropic Grassmann push of s_lambda(xi) is the quadratic Schur class, type " +
                            to_string(family),
                  config, config.cases, [family](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(0, 4));
        const auto spec = random_spec(rng, family, ring, {8, 3, false, false, true});
        const IntSeq lambda = isotropic_partition(rng, spec, ring.truncation());
        return expect_equal(push(spec, schur_integrand(lambda, ring)), push_schur_isotropic(spec, lambda),
                            "Schur push", show(lambda) + " [" + describe_spec(spec) + "]");
    });
}

CheckResult odd_vanishing(const VerifyConfig& config) {
    return repeat("odd-vanishing",
                  "self-dual E: isotropic Schur pushes vanish when some lambda_i - mu_i is odd",
                  config, config.cases, [](Random& rng, int) -> Outcome {
        const auto ring = rng.ring(rng.uniform(1, 4));
        const Family family = rng.chance(50) ? Family::C : Family::BD;
        const auto spec = random_spec(rng, family, ring, {8, 3, false, true, true});
        const IntSeq shift = isotropic_schur_shift(spec);
        IntSeq lambda(shift.size());
        for (std::size_t i = 0; i < shift.size(); ++i)
            lambda[i] = shift[i] + rng.uniform(0, ring.truncation());
        const auto odd = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(shift.size()) - 1));
        if ((lambda[odd] - shift[odd]) % 2 == 0)
            lambda[odd] += 1;
        const std::string ctx = show(lambda) + " [" + describe_spec(spec) + "]";
        const RingElement zero(ring);
        if (auto fail = expect_equal(push_schur_isotropic(spec, lambda), zero, "determinant", ctx))
            return fail;
        return expect_equal(push(spec, schur_integrand(lambda, ring)), zero, "extraction", ctx);
    });
}

// ------------------------------------------------------------ registry

using Runner = std::function<CheckResult(const VerifyConfig&)>;

const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Runner>>>>& registry() {
    static const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Runner>>>> suites{
        {"ring",
         {{"ring-axioms", ring_axioms},
          {"truncation-congruence", truncation_congruence},
          {"grade-decomposition", grade_decomposition},
          {"segre-inverse", segre_inverse},
          {"bialternant-jacobi-trudi", bialternant_jacobi_trudi}}},
        {"extraction",
         {{"shifting-rule", shifting_rule},
          {"coeff-linearity", coeff_linearity},
          {"staged-vs-brute", staged_vs_brute},
          {"segre-anchor", segre_anchor},
          {"complete-flag", complete_flag},
          {"degree-law", degree_law},
          {"base-linearity", base_linearity},
          {"d1-specializations", one_variable_specializations},
          {"orthogonal-trivial-line", orthogonal_trivial_line},
          {"block-symmetry", block_symmetry},
          {"full-roots", full_roots}}},
        {"lemma-ej", {{"lemma-linearity", lemma_linearity}, {"lemma-ej", lemma_ej}}},
        {"oracle",
         {{"localization-anchor", localization_anchor},
          {"localization-vs-push", localization_vs_push},
          {"localization-symmetric", localization_symmetric}}},
        {"degrees", {{"degree-table", degree_table}, {"classical-degrees", classical_degrees}}},
        {"cross-path",
         {{"monomials-A", [](const VerifyConfig& c) { return monomials_cross_path(c, Family::A); }},
          {"monomials-C", [](const VerifyConfig& c) { return monomials_cross_path(c, Family::C); }},
          {"monomials-BD", [](const VerifyConfig& c) { return monomials_cross_path(c, Family::BD); }},
          {"schur-grassmann", schur_grassmann},
          {"schur-isotropic-C", [](const VerifyConfig& c) { return schur_isotropic(c, Family::C); }},
          {"schur-isotropic-BD", [](const VerifyConfig& c) { return schur_isotropic(c, Family::BD); }},
          {"odd-vanishing", odd_vanishing}}},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out{"all"};
        for (const auto& [suite, checks] : registry())
            out.push_back(suite);
        return out;
    }();
    return names;
}

std::vector<std::string> checks_in_suite(const std::string& suite) {
    std::vector<std::string> out;
    for (const auto& [name, checks] : registry())
        if (suite == "all" || suite == name)
            for (const auto& check : checks)
                out.push_back(check.first);
    if (out.empty())
        throw ValidationError("unknown suite '" + suite + "'");
    return out;
}

CheckResult run_check(const std::string& name, const VerifyConfig& config) {
    if (config.cases < 1)
        throw ValidationError("verification needs at least one case per check");
    for (const auto& [suite, checks] : registry())
        for (const auto& [check, runner] : checks)
            if (check == name)
                return runner(config);
    throw ValidationError("unknown check '" + name + "'");
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config) {
    std::vector<std::future<CheckResult>> pending;
    for (const auto& name : checks_in_suite(suite))
        pending.push_back(std::async(std::launch::async, run_check, name, config));
    std::vector<CheckResult> out;
    for (auto& f : pending)
        out.push_back(f.get());
    return out;
}

} // namespace gysin
