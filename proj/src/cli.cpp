#include "gysin/cli.hpp"

#include "gysin/bundles.hpp"
#include "gysin/error.hpp"
#include "gysin/expr.hpp"
#include "gysin/flag_push.hpp"
#include "gysin/oracle.hpp"
#include "gysin/random.hpp"
#include "gysin/schur_det.hpp"
#include "gysin/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace gysin {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFooter = R"(Job file (JSON; unknown fields are rejected):
  {
    "ring":        {"generators": [["a", 1], ["b", 2]], "truncation": 4},
    "bundles":     [{"name": "E", "rank": 4, "chern": ["a", "b"]}],
    "line_bundle": {"name": "L", "c1": "a"},
    "flag":        {"family": "C", "dims": [1, 2], "bundle": "E", "line_bundle": "L"},
    "integrand":   "xi_1^3*xi_2",
    "options":     {"halve_maximal_orthogonal": false, "check_symmetry": false,
                    "basis": "monomial", "all_chern_roots": false}
  }
  Instead of "integrand" a job may give "schur": [3, 1] or
  "monomials": [["2*a", [3, 1]], [1, [2, 2]]]. Only "ring", "bundles", "flag"
  and one integrand form are required.

Expressions (Chern classes, c1, integrands, monomial coefficients):
  sum     := product (('+' | '-') product)*
  product := unary ('*' unary)*
  unary   := '-' unary | power
  power   := primary ('^' INTEGER)?
  primary := INTEGER | xi_K | t_K | NAME | s[I](E) | c[I](E) | c1(L) | '(' sum ')'
  '^' binds tighter than unary minus, which binds tighter than '*', which
  binds tighter than binary '+'/'-'. NAME is a generator of the base ring.

Exit codes: 0 success, 1 invalid input, 2 math-contract violation,
3 oracle mismatch or failed verification.)";

// ------------------------------------------------------------ JSON reading

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ValidationError(path + ": " + message);
}

template <class F>
auto located(const std::string& path, F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

const Json& object_at(const Json& doc, const std::string& path,
                      std::initializer_list<std::string_view> allowed) {
    if (!doc.is_object())
        fail(path, "expected an object");
    for (const auto& item : doc.items()) {
        bool known = false;
        for (auto key : allowed)
            known = known || item.key() == key;
        if (!known)
            fail(path, "unknown field '" + item.key() + "'");
    }
    return doc;
}

const Json& required(const Json& obj, const std::string& path, const std::string& key) {
    if (!obj.contains(key))
        fail(path, "missing field '" + key + "'");
    return obj.at(key);
}

const Json& array_at(const Json& value, const std::string& path) {
    if (!value.is_array())
        fail(path, "expected an array");
    return value;
}

std::string string_at(const Json& value, const std::string& path) {
    if (!value.is_string())
        fail(path, "expected a string");
    return value.get<std::string>();
}

int int_at(const Json& value, const std::string& path) {
    if (!value.is_number_integer())
        fail(path, "expected an integer");
    const auto v = value.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        fail(path, "integer out of range");
    return static_cast<int>(v);
}

bool bool_at(const Json& value, const std::string& path) {
    if (!value.is_boolean())
        fail(path, "expected true or false");
    return value.get<bool>();
}

std::string index_path(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

/// An expression given as a string or a JSON integer.
ExprPtr expression_at(const Json& value, const std::string& path) {
    if (value.is_number_integer())
        return parse(value.dump());
    return located(path, [&] { return parse(string_at(value, path)); });
}

/// Value of an expression that must not involve xi or t variables.
RingElement base_value(const Expression& e, const Bindings& bindings, const std::string& path) {
    return located(path, [&] { return coeff(eval(e, bindings, 0), ExtractionTarget{}); });
}

IntSeq sequence_at(const Json& value, const std::string& path) {
    if (value.is_string())
        return located(path, [&] { return parse_int_seq(value.get<std::string>()); });
    if (!value.is_array())
        fail(path, "expected an integer array such as [3,1,0]");
    IntSeq out;
    for (std::size_t i = 0; i < value.size(); ++i)
        out.push_back(int_at(value[i], index_path(path, i)));
    return out;
}

// --------------------------------------------------------------------- jobs

struct Options {
    bool halve_maximal_orthogonal = false;
    bool check_symmetry = false;
    std::string basis = "monomial";
    bool all_chern_roots = false;
};

struct LineBundle {
    std::string name;
    RingElement c1;
};

struct Job {
    RingDescriptor ring;
    std::vector<VectorBundleData> bundles;
    std::optional<LineBundle> line;
    std::optional<std::string> flag_line;
    std::optional<FlagSpec> spec;
    std::optional<Bindings> bindings;

    ExprPtr integrand;
    std::optional<IntSeq> schur;
    std::optional<std::vector<MonomialTerm>> monomials;
    Options options;
};

Job load_job(const Json& doc) {
    Job job;
    object_at(doc, "job",
              {"ring", "bundles", "line_bundle", "flag", "integrand", "schur", "monomials", "options"});

    const Json& ring = object_at(required(doc, "job", "ring"), "ring", {"generators", "truncation"});
    std::vector<Generator> gens;
    const Json& gen_list = array_at(required(ring, "ring", "generators"), "ring.generators");
    for (std::size_t i = 0; i < gen_list.size(); ++i) {
        const std::string path = index_path("ring.generators", i);
        const Json& g = gen_list[i];
        if (!g.is_array() || g.size() != 2)
            fail(path, "expected [name, degree]");
        gens.push_back({string_at(g[0], path + "[0]"), int_at(g[1], path + "[1]")});
    }
    const int truncation = int_at(required(ring, "ring", "truncation"), "ring.truncation");
    job.ring = located("ring", [&] { return RingDescriptor::define(std::move(gens), truncation); });

    Bindings bindings(job.ring);
    bindings.bind_generators();

    const Json& bundle_list = array_at(required(doc, "job", "bundles"), "bundles");
    for (std::size_t i = 0; i < bundle_list.size(); ++i) {
        const std::string path = index_path("bundles", i);
        const Json& b = object_at(bundle_list[i], path, {"name", "rank", "chern"});
        const std::string name = string_at(required(b, path, "name"), path + ".name");
        const int rank = int_at(required(b, path, "rank"), path + ".rank");
        for (const auto& earlier : job.bundles)
            if (earlier.name() == name)
                fail(path + ".name", "duplicate bundle '" + name + "'");
        std::vector<RingElement> chern;
        if (b.contains("chern")) {
            const Json& list = array_at(b.at("chern"), path + ".chern");
            for (std::size_t k = 0; k < list.size(); ++k) {
                const std::string cpath = index_path(path + ".chern", k);
                chern.push_back(base_value(*expression_at(list[k], cpath), bindings, cpath));
            }
        }
        job.bundles.push_back(
            located(path, [&] { return VectorBundleData(name, rank, std::move(chern), job.ring); }));
        bindings.bind_bundle(job.bundles.back());
    }

    if (doc.contains("line_bundle")) {
        const Json& l = object_at(doc.at("line_bundle"), "line_bundle", {"name", "c1"});
        const std::string name = string_at(required(l, "line_bundle", "name"), "line_bundle.name");
        RingElement c1 = base_value(*expression_at(required(l, "line_bundle", "c1"), "line_bundle.c1"),
                                    bindings, "line_bundle.c1");
        if (!c1.is_homogeneous_of_degree(1))
            fail("line_bundle.c1", "c1 must be homogeneous of degree 1, got " + c1.to_string());
        bindings.bind_line(name, c1);
        job.line = LineBundle{name, std::move(c1)};
    }

    const Json& flag =
        object_at(required(doc, "job", "flag"), "flag", {"family", "dims", "bundle", "line_bundle"});
    const Family family = located("flag.family", [&] {
        return parse_family(string_at(required(flag, "flag", "family"), "flag.family"));
    });
    const IntSeq dims = sequence_at(required(flag, "flag", "dims"), "flag.dims");
    const std::string bundle_name = string_at(required(flag, "flag", "bundle"), "flag.bundle");
    const VectorBundleData* bundle = bindings.bundle(bundle_name);
    if (!bundle)
        fail("flag.bundle", "unknown bundle '" + bundle_name + "'");
    std::optional<RingElement> line_c1;
    if (flag.contains("line_bundle")) {
        const std::string name = string_at(flag.at("line_bundle"), "flag.line_bundle");
        if (!job.line || job.line->name != name)
            fail("flag.line_bundle", "unknown line bundle '" + name + "'");
        job.flag_line = name;
        line_c1 = job.line->c1;
    }
    job.spec = located("flag", [&] { return FlagSpec(family, *bundle, dims, line_c1); });

    const int forms = static_cast<int>(doc.contains("integrand")) +
                      static_cast<int>(doc.contains("schur")) +
                      static_cast<int>(doc.contains("monomials"));
    if (forms != 1)
        fail("job", "exactly one of 'integrand', 'schur' and 'monomials' is required");
    if (doc.contains("integrand"))
        job.integrand = located("integrand", [&] {
            return parse(string_at(doc.at("integrand"), "integrand"));
        });
    if (doc.contains("schur")) {
        job.schur = sequence_at(doc.at("schur"), "schur");
        if (static_cast<int>(job.schur->size()) != job.spec->d())
            fail("schur", "needs " + std::to_string(job.spec->d()) + " entries");
    }
    if (doc.contains("monomials")) {
        const Json& list = array_at(doc.at("monomials"), "monomials");
        job.monomials.emplace();
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string path = index_path("monomials", i);
            if (!list[i].is_array() || list[i].size() != 2)
                fail(path, "expected [coefficient, exponents]");
            RingElement c = base_value(*expression_at(list[i][0], path + "[0]"), bindings, path + "[0]");
            IntSeq exps = sequence_at(list[i][1], path + "[1]");
            if (static_cast<int>(exps.size()) != job.spec->d())
                fail(path + "[1]", "needs " + std::to_string(job.spec->d()) + " exponents");
            for (int e : exps)
                if (e < 0)
                    fail(path + "[1]", "exponents must be non-negative");
            job.monomials->push_back({std::move(c), std::move(exps)});
        }
    }

    if (doc.contains("options")) {
        const Json& o = object_at(doc.at("options"), "options",
                                  {"halve_maximal_orthogonal", "check_symmetry", "basis",
                                   "all_chern_roots"});
        if (o.contains("halve_maximal_orthogonal"))
            job.options.halve_maximal_orthogonal =
                bool_at(o.at("halve_maximal_orthogonal"), "options.halve_maximal_orthogonal");
        if (o.contains("check_symmetry"))
            job.options.check_symmetry = bool_at(o.at("check_symmetry"), "options.check_symmetry");
        if (o.contains("basis"))
            job.options.basis = string_at(o.at("basis"), "options.basis");
        if (o.contains("all_chern_roots"))
            job.options.all_chern_roots = bool_at(o.at("all_chern_roots"), "options.all_chern_roots");
    }
    if (job.options.basis != "monomial" && job.options.basis != "segre")
        fail("options.basis", "expected \"monomial\" or \"segre\"");
    if (job.options.all_chern_roots && !job.integrand)
        fail("options.all_chern_roots", "needs an 'integrand'");

    job.bindings = std::move(bindings);
    return job;
}

Json normalized(const Job& job) {
    Json ring;
    ring["generators"] = Json::array();
    for (const auto& g : job.ring.generators())
        ring["generators"].push_back(Json::array({g.name, g.degree}));
    ring["truncation"] = job.ring.truncation();

    Json doc;
    doc["ring"] = ring;
    doc["bundles"] = Json::array();
    for (const auto& b : job.bundles) {
        Json chern = Json::array();
        for (int i = 1; i <= b.rank(); ++i)
            chern.push_back(b.chern(i).to_string());
        doc["bundles"].push_back({{"name", b.name()}, {"rank", b.rank()}, {"chern", chern}});
    }
    if (job.line)
        doc["line_bundle"] = {{"name", job.line->name}, {"c1", job.line->c1.to_string()}};
    Json flag;
    flag["family"] = to_string(job.spec->family());
    flag["dims"] = job.spec->dims();
    flag["bundle"] = job.spec->bundle().name();
    if (job.flag_line)
        flag["line_bundle"] = *job.flag_line;
    doc["flag"] = flag;
    if (job.integrand)
        doc["integrand"] = render(*job.integrand);
    if (job.schur)
        doc["schur"] = *job.schur;
    if (job.monomials) {
        doc["monomials"] = Json::array();
        for (const auto& t : *job.monomials)
            doc["monomials"].push_back(Json::array({t.coeff.to_string(), t.exponents}));
    }
    doc["options"] = {{"halve_maximal_orthogonal", job.options.halve_maximal_orthogonal},
                      {"check_symmetry", job.options.check_symmetry},
                      {"basis", job.options.basis},
                      {"all_chern_roots", job.options.all_chern_roots}};
    return doc;
}

Json read_job_document(const std::string& file) {
    std::string text;
    if (file == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream in(file, std::ios::binary);
        if (!in)
            throw ValidationError("input: cannot open '" + file + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("input: invalid JSON: ") + e.what());
    }
}

// ------------------------------------------------------------- computation

/// The integrand of a job as a polynomial in d variables (n with all roots).
LaurentPoly integrand_of(const Job& job) {
    const FlagSpec& spec = *job.spec;
    if (job.integrand) {
        const auto arity = static_cast<std::size_t>(job.options.all_chern_roots ? spec.rank() : spec.d());
        return located("integrand", [&] { return eval(*job.integrand, *job.bindings, arity); });
    }
    if (job.schur)
        return located("schur", [&] {
            return with_coefficients_in(schur_bialternant(*job.schur, RingDescriptor()), job.ring);
        });
    LaurentPoly f(static_cast<std::size_t>(spec.d()), job.ring);
    for (const auto& t : *job.monomials)
        f.add_term(Exponents(t.exponents.begin(), t.exponents.end()), t.coeff);
    return f;
}

RingElement extraction_path(const Job& job, const LaurentPoly& f) {
    const FlagSpec& spec = *job.spec;
    if (job.options.all_chern_roots)
        return push_full_roots_A(spec, f);
    PushOptions options;
    options.halve_maximal_orthogonal = job.options.halve_maximal_orthogonal;
    return push(spec, f, options);
}

RingElement determinantal_path(const Job& job, const LaurentPoly& f) {
    const FlagSpec& spec = *job.spec;
    if (job.options.all_chern_roots)
        throw ValidationError("the determinantal path does not cover all_chern_roots");
    if (job.options.halve_maximal_orthogonal)
        require_halvable(spec);
    RingElement result(job.ring);
    if (job.schur) {
        if (spec.m() != 1)
            throw ValidationError("the Schur shortcut needs a single-step flag");
        result = spec.family() == Family::A ? push_schur_grassmann_A(spec.bundle(), spec.d(), *job.schur)
                                            : push_schur_isotropic(spec, *job.schur);
    } else if (job.monomials) {
        result = push_monomials(spec, *job.monomials);
    } else {
        if (!f.is_polynomial())
            throw ValidationError("integrand must be a polynomial in the xi");
        std::vector<MonomialTerm> terms;
        for (const auto& t : f.terms())
            terms.push_back({t.coeff, IntSeq(t.exponents.begin(), t.exponents.end())});
        result = push_monomials(spec, terms);
    }
    return job.options.halve_maximal_orthogonal ? halve_for_component(spec, result) : result;
}

std::string variant_name(const Job& job) {
    if (job.options.all_chern_roots)
        return "all-chern-roots";
    PushOptions options;
    options.halve_maximal_orthogonal = job.options.halve_maximal_orthogonal;
    return chosen_variant(*job.spec, options) == Variant::Standard ? "standard"
                                                                   : "orthogonal-trivial-line";
}

// ------------------------------------------------------- Segre-basis rewrite

void partitions(int k, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (k == 0) {
        out.push_back(current);
        return;
    }
    for (int p = std::min(k, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions(k - p, p, current, out);
        current.pop_back();
    }
}

std::string segre_monomial(const std::vector<int>& parts, const std::string& bundle) {
    std::string out;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += "s[" + std::to_string(parts[i]) + "](" + bundle + ")";
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

/// Solves for the degree-k part of `value` as a rational combination of
/// products of Segre classes; nullopt if it is not in their span.
std::optional<std::vector<std::pair<mpq_class, std::vector<int>>>>
segre_component(const RingElement& value, const VectorBundleData& bundle, int k) {
    std::vector<std::vector<int>> parts_list;
    std::vector<int> current;
    partitions(k, k, current, parts_list);

    std::map<Monomial, std::size_t> rows;
    auto row_of = [&rows](const Monomial& m) {
        return rows.emplace(m, rows.size()).first->second;
    };
    std::vector<RingElement> columns;
    for (const auto& parts : parts_list) {
        RingElement product = RingElement::constant(bundle.descriptor(), 1);
        for (int p : parts)
            product *= bundle.segre()[p];
        columns.push_back(product.grade_component(k));
        for (const auto& t : columns.back().terms())
            row_of(t.exponents);
    }
    const RingElement target = value.grade_component(k);
    for (const auto& t : target.terms())
        row_of(t.exponents);

    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = columns.size();
    std::vector<std::vector<mpq_class>> m(n_rows, std::vector<mpq_class>(n_cols + 1, 0));
    for (std::size_t c = 0; c < n_cols; ++c)
        for (const auto& t : columns[c].terms())
            m[rows.at(t.exponents)][c] = t.coeff;
    for (const auto& t : target.terms())
        m[rows.at(t.exponents)][n_cols] = t.coeff;

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_cols && r < n_rows; ++c) {
        std::size_t p = r;
        while (p < n_rows && m[p][c] == 0)
            ++p;
        if (p == n_rows)
            continue;
        std::swap(m[p], m[r]);
        const mpq_class lead = m[r][c];
        for (auto& x : m[r])
            x /= lead;
        for (std::size_t i = 0; i < n_rows; ++i)
            if (i != r && m[i][c] != 0) {
                const mpq_class factor = m[i][c];
                for (std::size_t j = c; j <= n_cols; ++j)
                    m[i][j] -= factor * m[r][j];
            }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < n_rows; ++i)
        if (m[i][n_cols] != 0)
            return std::nullopt;

    std::vector<std::pair<mpq_class, std::vector<int>>> out;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (m[i][n_cols] != 0)
            out.emplace_back(m[i][n_cols], parts_list[pivots[i]]);
    return out;
}

Json segre_rewrite(const RingElement& value, const VectorBundleData& bundle) {
    Json doc;
    std::string text;
    bool integral = true;
    for (int k = 0; k <= value.descriptor().truncation(); ++k) {
        if (value.grade_component(k).is_zero())
            continue;
        const auto solution = segre_component(value, bundle, k);
        if (!solution) {
            doc["ok"] = false;
            doc["reason"] = "the degree " + std::to_string(k) +
                            " part is not a combination of Segre classes of " + bundle.name();
            return doc;
        }
        for (const auto& [c, parts] : *solution) {
            const bool negative = c < 0;
            const mpq_class magnitude = abs(c);
            integral = integral && magnitude.get_den() == 1;
            text += text.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
            const std::string monomial = segre_monomial(parts, bundle.name());
            if (monomial.empty())
                text += magnitude.get_str();
            else if (magnitude == 1)
                text += monomial;
            else
                text += magnitude.get_str() + "*" + monomial;
        }
    }
    doc["ok"] = true;
    doc["expression"] = text.empty() ? "0" : text;
    doc["integral"] = integral;
    return doc;
}

// ------------------------------------------------------------------ output

void emit(const Json& doc, bool json, std::ostream& out) {
    if (json) {
        out << doc.dump(2) << '\n';
        return;
    }
    for (const auto& item : doc.items()) {
        out << item.key() << ": ";
        if (item.value().is_string())
            out << item.value().get<std::string>();
        else
            out << item.value().dump();
        out << '\n';
    }
}

Json symmetry_document(const SymmetryReport& report) {
    Json violations = Json::array();
    for (const auto& [a, b] : report.violations)
        violations.push_back(Json::array({a, b}));
    return {{"symmetric", report.symmetric}, {"violations", violations}};
}

struct JobFlags {
    std::string input;
    std::string basis;
    bool both_paths = false;
    bool halve = false;
    bool check_symmetry = false;
    bool json = false;
    bool timing = false;
};

int run_job(const JobFlags& flags, bool determinantal, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    Job job = load_job(read_job_document(flags.input));
    job.options.halve_maximal_orthogonal = job.options.halve_maximal_orthogonal || flags.halve;
    job.options.check_symmetry = job.options.check_symmetry || flags.check_symmetry;
    if (!flags.basis.empty())
        job.options.basis = flags.basis;
    if (job.options.halve_maximal_orthogonal)
        located("options.halve_maximal_orthogonal", [&] { require_halvable(*job.spec); });
    if (determinantal && !job.schur && !job.monomials)
        throw ValidationError("the schur command needs a job with 'schur' or 'monomials'");

    const FlagSpec& spec = *job.spec;
    const LaurentPoly f = integrand_of(job);

    Json doc;
    doc["command"] = determinantal ? "schur" : "push";
    std::optional<SymmetryReport> symmetry;
    if (job.options.check_symmetry) {
        if (job.options.all_chern_roots)
            throw ValidationError("check_symmetry is not available with all_chern_roots");
        symmetry = check_block_symmetry(f, spec);
        for (const auto& [a, b] : symmetry->violations)
            err << "warning: integrand changes under xi_" << a << " <-> xi_" << b << '\n';
    }

    const RingElement result = determinantal ? determinantal_path(job, f) : extraction_path(job, f);
    std::optional<RingElement> other;
    if (flags.both_paths)
        other = determinantal ? extraction_path(job, f) : determinantal_path(job, f);

    const auto degree = result.homogeneous_degree();
    doc["result"] = result.to_string();
    doc["degree"] = degree ? Json(*degree) : Json(nullptr);
    doc["fiber_dimension"] = fiber_dimension(spec);
    doc["path"] = determinantal ? "determinantal" : "extraction";
    doc["variant"] = variant_name(job);
    doc["halved"] = job.options.halve_maximal_orthogonal;
    if (symmetry)
        doc["symmetry"] = symmetry_document(*symmetry);
    if (job.options.basis == "segre")
        doc["segre_basis"] = segre_rewrite(result, spec.bundle());
    bool agree = true;
    if (other) {
        const RingElement& extraction = determinantal ? *other : result;
        const RingElement& det = determinantal ? result : *other;
        agree = extraction == det;
        doc["both_paths"] = {{"extraction", extraction.to_string()},
                             {"determinantal", det.to_string()},
                             {"agree", agree}};
    }
    doc["job"] = normalized(job);
    if (flags.timing) {
        const std::chrono::duration<double, std::milli> elapsed =
            std::chrono::steady_clock::now() - start;
        doc["elapsed_ms"] = elapsed.count();
    }
    emit(doc, flags.json, out);
    if (!agree) {
        err << "error: extraction and determinantal paths disagree\n";
        return kExitMismatch;
    }
    return kExitOk;
}

// ---------------------------------------------------------- other commands

int run_verify(const std::string& suite, std::uint64_t seed, int cases, bool json, std::ostream& out) {
    VerifyConfig config;
    config.seed = seed;
    config.cases = cases;
    const auto results = run_suite(suite, config);
    int passed = 0;
    Json checks = Json::array();
    for (const auto& r : results) {
        passed += r.passed() ? 1 : 0;
        checks.push_back({{"name", r.name},
                          {"description", r.description},
                          {"passed", r.passed()},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"nontrivial", r.nontrivial},
                          {"counterexamples", r.counterexamples}});
    }
    const bool all = passed == static_cast<int>(results.size());
    if (json) {
        Json doc = {{"suite", suite}, {"seed", seed}, {"cases", cases}, {"passed", all},
                    {"checks", checks}};
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& r : results) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases
                << " nontrivial=" << r.nontrivial;
            if (r.failures)
                out << " failures=" << r.failures;
            out << "  (" << r.description << ")\n";
            for (const auto& c : r.counterexamples)
                out << "    counterexample: " << c << '\n';
        }
        out << passed << "/" << results.size() << " checks passed (suite " << suite << ", seed "
            << seed << ", cases " << cases << ")\n";
    }
    return all ? kExitOk : kExitMismatch;
}

SpaceDescriptor space_from(const std::string& kind, const std::vector<int>& params) {
    auto expect = [&](std::size_t count, const char* usage) {
        if (params.size() != count)
            throw ValidationError(std::string("usage: degree ") + usage);
    };
    if (kind == "grassmann") {
        expect(2, "grassmann D N");
        return SpaceDescriptor::grassmann(params[0], params[1]);
    }
    if (kind == "lagrangian") {
        expect(1, "lagrangian N");
        return SpaceDescriptor::lagrangian(params[0]);
    }
    if (kind == "projective") {
        expect(1, "projective N");
        return SpaceDescriptor::projective(params[0]);
    }
    if (kind == "quadric") {
        expect(1, "quadric R");
        return SpaceDescriptor::quadric(params[0]);
    }
    throw ValidationError("unknown space '" + kind +
                          "'; expected grassmann, lagrangian, projective or quadric");
}

int run_degree(const std::string& kind, const std::vector<int>& params, bool json, std::ostream& out,
               std::ostream& err) {
    const SpaceDescriptor space = space_from(kind, params);
    const mpz_class classical = classical_degree(space);
    const RingElement engine = engine_degree(space);
    const bool agree = engine == RingElement::constant(RingDescriptor(), classical);
    Json doc;
    doc["space"] = to_string(space);
    doc["dimension"] = space_dimension(space);
    doc["classical"] = classical.get_str();
    doc["engine"] = engine.to_string();
    doc["agree"] = agree;
    emit(doc, json, out);
    if (!agree) {
        err << "error: engine degree differs from the closed form\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int run_parse_check(std::vector<std::string> inputs, const std::string& file, bool json,
                    std::ostream& out) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in)
            throw ValidationError("input: cannot open '" + file + "'");
        for (std::string line; std::getline(in, line);)
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                inputs.push_back(line);
    }
    if (inputs.empty())
        throw ValidationError("parse-check needs an expression or --input FILE");
    int code = kExitOk;
    Json results = Json::array();
    for (const auto& text : inputs) {
        Json r;
        r["input"] = text;
        try {
            const ExprPtr e = parse(text);
            const std::string canonical = render(*e);
            const bool round_trip = same_tree(*parse(canonical), *e);
            r["ok"] = true;
            r["tree"] = describe(*e);
            r["canonical"] = canonical;
            r["round_trip"] = round_trip;
            if (!round_trip)
                code = kExitMismatch;
        } catch (const ParseError& e) {
            r["ok"] = false;
            r["message"] = e.message();
            r["offset"] = e.offset();
            if (code == kExitOk)
                code = kExitValidation;
        }
        results.push_back(r);
    }
    if (json) {
        out << results.dump(2) << '\n';
        return code;
    }
    for (const auto& r : results) {
        out << "input: " << r["input"].get<std::string>() << '\n';
        if (r["ok"].get<bool>()) {
            out << "tree: " << r["tree"].get<std::string>() << '\n'
                << "canonical: " << r["canonical"].get<std::string>() << '\n';
            if (!r["round_trip"].get<bool>())
                out << "round trip: FAILED\n";
        } else {
            const auto offset = r["offset"].get<std::size_t>();
            out << "error: " << r["message"].get<std::string>() << " at offset " << offset << '\n'
                << "       " << std::string(offset, ' ') << "^\n";
        }
    }
    return code;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gysin push-forwards along flag bundles of types A, C and B/D", "gysin"};
    app.footer(kFooter);
    app.require_subcommand(1);

    JobFlags push_flags;
    auto* push_cmd = app.add_subcommand("push", "push an integrand forward to the base");
    JobFlags schur_flags;
    auto* schur_cmd =
        app.add_subcommand("schur", "push a Schur or monomial shortcut through the determinantal formulas");
    for (auto [cmd, flags] : {std::pair{push_cmd, &push_flags}, std::pair{schur_cmd, &schur_flags}}) {
        cmd->add_option("--input", flags->input, "job file (JSON), '-' for stdin")->required();
        cmd->add_option("--basis", flags->basis, "also rewrite the result in Segre classes")
            ->check(CLI::IsMember({"monomial", "segre"}));
        cmd->add_flag("--both-paths", flags->both_paths,
                      "compute the extraction and determinantal paths and compare them");
        cmd->add_flag("--halve-maximal-orthogonal", flags->halve,
                      "BD with rank 2n and d_m = n: report one of the two components");
        cmd->add_flag("--check-symmetry", flags->check_symmetry,
                      "report whether the integrand is symmetric within each block");
        cmd->add_flag("--json", flags->json, "print a JSON document");
        cmd->add_flag("--timing", flags->timing, "include the elapsed time");
    }

    std::string suite = "all";
    std::uint64_t seed = kDefaultSeed;
    int cases = VerifyConfig{}.cases;
    bool verify_json = false;
    auto* verify_cmd = app.add_subcommand("verify", "run randomized and table-driven checks");
    verify_cmd->add_option("--suite", suite, "all, ring, extraction, lemma-ej, oracle, degrees or cross-path")
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "64-bit seed")->capture_default_str();
    verify_cmd->add_option("--cases", cases, "random instances per check")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    verify_cmd->add_flag("--json", verify_json, "print a JSON document");

    std::string kind;
    std::vector<int> params;
    bool degree_json = false;
    auto* degree_cmd = app.add_subcommand(
        "degree", "degree of G(d,n), LG(n), P^n or a quadric: engine against the closed form");
    degree_cmd->add_option("space", kind, "grassmann D N | lagrangian N | projective N | quadric R")
        ->required();
    degree_cmd->add_option("params", params, "integer parameters")->required();
    degree_cmd->add_flag("--json", degree_json, "print a JSON document");

    std::vector<std::string> expressions;
    std::string parse_input;
    bool parse_json = false;
    auto* parse_cmd = app.add_subcommand("parse-check", "parse expressions and show their trees");
    parse_cmd->add_option("expressions", expressions, "expressions to parse");
    parse_cmd->add_option("--input", parse_input, "file with one expression per line");
    parse_cmd->add_flag("--json", parse_json, "print a JSON document");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (push_cmd->parsed())
            return run_job(push_flags, false, out, err);
        if (schur_cmd->parsed())
            return run_job(schur_flags, true, out, err);
        if (verify_cmd->parsed())
            return run_verify(suite, seed, cases, verify_json, out);
        if (degree_cmd->parsed())
            return run_degree(kind, params, degree_json, out, err);
        return run_parse_check(expressions, parse_input, parse_json, out);
    } catch (const MathContractError& e) {
        err << "error: " << e.what() << '\n';
        return kExitMathContract;
    } catch (const OracleMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
}

} // namespace gysin
