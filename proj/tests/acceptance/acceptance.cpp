// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include "gysin/error.hpp"
#include "gysin/expr.hpp"
#include "gysin/oracle.hpp"
#include "gysin/verify.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace gysin;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Verdict {
    bool passed = true;
    std::vector<std::string> details;
};

/// Runs named checks; each must pass with at least `min_cases` instances.
Verdict run_checks(const std::vector<std::string>& names, int min_cases) {
    VerifyConfig config;
    config.cases = 500;
    Verdict v;
    for (const auto& name : names) {
        const auto start = Clock::now();
        const CheckResult r = run_check(name, config);
        const bool ok = r.passed() && r.cases >= min_cases;
        v.passed = v.passed && ok;
        std::ostringstream line;
        line << name << ": " << (ok ? "ok" : "FAILED") << ", " << r.cases - r.failures << "/"
             << r.cases << " cases, " << r.nontrivial << " nontrivial, " << ms_since(start) << " ms";
        for (const auto& c : r.counterexamples)
            line << "\n      counterexample: " << c;
        v.details.push_back(line.str());
    }
    return v;
}

struct DegreeCase {
    SpaceDescriptor space;
    long expected;
};

Verdict degree_table() {
    const std::vector<DegreeCase> table{
        {SpaceDescriptor::grassmann(2, 4), 2}, {SpaceDescriptor::grassmann(2, 5), 5},
        {SpaceDescriptor::grassmann(3, 6), 42}, {SpaceDescriptor::lagrangian(2), 2},
        {SpaceDescriptor::lagrangian(3), 16},  {SpaceDescriptor::quadric(3), 2},
        {SpaceDescriptor::quadric(4), 2},      {SpaceDescriptor::quadric(5), 2},
        {SpaceDescriptor::quadric(6), 2},      {SpaceDescriptor::quadric(7), 2},
        {SpaceDescriptor::quadric(8), 2},      {SpaceDescriptor::projective(1), 1},
        {SpaceDescriptor::projective(2), 1},   {SpaceDescriptor::projective(3), 1},
        {SpaceDescriptor::projective(4), 1},   {SpaceDescriptor::projective(5), 1},
        {SpaceDescriptor::projective(6), 1},
    };
    const RingDescriptor point;
    Verdict v;
    for (const auto& entry : table) {
        const auto start = Clock::now();
        const RingElement engine = engine_degree(entry.space);
        const double elapsed = ms_since(start);
        const auto expected = RingElement::constant(point, entry.expected);
        const bool ok = engine == expected &&
                        classical_degree(entry.space) == mpz_class(entry.expected) && elapsed < 10000.0;
        v.passed = v.passed && ok;
        std::ostringstream line;
        line << to_string(entry.space) << ": engine " << engine << ", classical "
             << classical_degree(entry.space) << ", expected " << entry.expected << ", " << elapsed
             << " ms" << (ok ? "" : "  FAILED");
        v.details.push_back(line.str());
    }
    Verdict check = run_checks({"degree-table"}, 17);
    v.passed = v.passed && check.passed;
    v.details.insert(v.details.end(), check.details.begin(), check.details.end());
    return v;
}

Verdict parser_corpus() {
    Verdict v;
    std::ifstream in(GYSIN_PARSER_CORPUS);
    if (!in) {
        v.passed = false;
        v.details.push_back(std::string("cannot open ") + GYSIN_PARSER_CORPUS);
        return v;
    }
    const auto corpus = nlohmann::json::parse(in);
    int ok_count = 0, valid = 0, invalid = 0;
    for (const auto& c : corpus) {
        const std::string input = c.at("input").get<std::string>();
        std::string problem;
        if (c.contains("tree")) {
            ++valid;
            try {
                const ExprPtr e = parse(input);
                const std::string canonical = render(*e);
                const ExprPtr again = parse(canonical);
                if (describe(*e) != c.at("tree").get<std::string>())
                    problem = "tree " + describe(*e);
                else if (canonical != c.at("canonical").get<std::string>())
                    problem = "canonical " + canonical;
                else if (!same_tree(*again, *e) || render(*again) != canonical)
                    problem = "round trip changed the tree";
            } catch (const ParseError& e) {
                problem = std::string("unexpected error: ") + e.what();
            }
        } else {
            ++invalid;
            try {
                parse(input);
                problem = "parsed without error";
            } catch (const ParseError& e) {
                if (e.message() != c.at("error").get<std::string>() ||
                    e.offset() != c.at("offset").get<std::size_t>())
                    problem = std::string("got ") + e.what();
            }
        }
        if (problem.empty())
            ++ok_count;
        else
            v.details.push_back("'" + input + "': " + problem);
    }
    v.passed = ok_count == static_cast<int>(corpus.size()) && corpus.size() >= 50;
    std::ostringstream line;
    line << ok_count << "/" << corpus.size() << " corpus cases (" << valid << " well-formed, "
         << invalid << " malformed)";
    v.details.insert(v.details.begin(), line.str());
    return v;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        std::string title;
        Verdict (*run)();
    };
    const std::vector<Criterion> criteria{
        {1, "Segre anchor", [] { return run_checks({"segre-anchor"}, 100); }},
        {2, "complete-flag identity", [] { return run_checks({"complete-flag"}, 100); }},
        {3, "degree table over a point", degree_table},
        {4, "localization oracle", [] { return run_checks({"localization-vs-push"}, 100); }},
        {5, "cross-path equivalence",
         [] {
             return run_checks({"monomials-A", "monomials-C", "monomials-BD", "schur-grassmann",
                                "schur-isotropic-C", "schur-isotropic-BD"},
                               100);
         }},
        {6, "extraction identities", [] { return run_checks({"lemma-linearity", "lemma-ej"}, 100); }},
        {7, "structural laws",
         [] {
             return run_checks({"degree-law", "base-linearity", "d1-specializations",
                                "orthogonal-trivial-line", "odd-vanishing"},
                               100);
         }},
        {8, "parser corpus", parser_corpus},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v.passed = false;
            v.details.push_back(std::string("exception: ") + e.what());
        }
        failed += v.passed ? 0 : 1;
        std::cout << "criterion " << c.number << " (" << c.title << "): " << (v.passed ? "PASS" : "FAIL")
                  << "  [" << ms_since(start) << " ms]\n";
        for (const auto& d : v.details)
            std::cout << "    " << d << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
