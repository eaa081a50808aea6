#include "gysin/chow_ring.hpp"

#include "gysin/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace gysin {

struct RingDescriptor::Data {
    std::vector<Generator> generators;
    int truncation = 0;
};

RingDescriptor::RingDescriptor() : data_(std::make_shared<const Data>()) {}

RingDescriptor::RingDescriptor(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

RingDescriptor RingDescriptor::define(std::vector<Generator> generators, int truncation) {
    if (truncation < 0)
        throw ValidationError("ring truncation must be non-negative, got " +
                              std::to_string(truncation));
    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (g.name.empty())
            throw ValidationError("empty generator name");
        if (g.degree < 1)
            throw ValidationError("generator '" + g.name + "' has degree " +
                                  std::to_string(g.degree) + "; degrees must be >= 1");
        if (!seen.insert(g.name).second)
            throw ValidationError("duplicate generator name '" + g.name + "'");
    }
    auto data = std::make_shared<Data>();
    data->generators = std::move(generators);
    data->truncation = truncation;
    return RingDescriptor(std::move(data));
}

const std::vector<Generator>& RingDescriptor::generators() const noexcept {
    return data_->generators;
}

std::size_t RingDescriptor::size() const noexcept { return data_->generators.size(); }

int RingDescriptor::truncation() const noexcept { return data_->truncation; }

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const {
    const auto& gens = data_->generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name)
            return i;
    return std::nullopt;
}

int RingDescriptor::weighted_degree(const Monomial& m) const {
    int deg = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        deg += static_cast<int>(m[i]) * data_->generators[i].degree;
    return deg;
}

bool RingDescriptor::operator==(const RingDescriptor& other) const {
    if (data_ == other.data_)
        return true;
    return data_->truncation == other.data_->truncation &&
           data_->generators == other.data_->generators;
}

RingDescriptor RingDescriptor::with_truncation(int truncation) const {
    return define(data_->generators, truncation);
}

bool canonical_less(const Term& a, const Term& b) {
    if (a.degree != b.degree)
        return a.degree < b.degree;
    return a.exponents > b.exponents;
}

namespace {

struct KeyLess {
    bool operator()(const std::pair<int, Monomial>& a, const std::pair<int, Monomial>& b) const {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second > b.second;
    }
};

using Accumulator = std::map<std::pair<int, Monomial>, mpz_class, KeyLess>;

std::vector<Term> drain(Accumulator& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) {
        if (c == 0)
            continue;
        out.push_back(Term{std::move(key.second), key.first, std::move(c)});
    }
    return out;
}

} // namespace

RingElement::RingElement() = default;

RingElement::RingElement(RingDescriptor descriptor) : descriptor_(std::move(descriptor)) {}

RingElement RingElement::constant(const RingDescriptor& descriptor, const mpz_class& value) {
    RingElement r(descriptor);
    if (value != 0)
        r.terms_.push_back(Term{Monomial(descriptor.size(), 0), 0, value});
    return r;
}

RingElement RingElement::generator(const RingDescriptor& descriptor, std::string_view name) {
    auto idx = descriptor.index_of(name);
    if (!idx)
        throw ValidationError("unknown generator '" + std::string(name) + "'");
    Monomial m(descriptor.size(), 0);
    m[*idx] = 1;
    return monomial(descriptor, std::move(m), 1);
}

RingElement RingElement::monomial(const RingDescriptor& descriptor, Monomial exponents,
                                  const mpz_class& coeff) {
    if (exponents.size() != descriptor.size())
        throw ValidationError("monomial length does not match ring");
    RingElement r(descriptor);
    const int deg = descriptor.weighted_degree(exponents);
    if (coeff != 0 && deg <= descriptor.truncation())
        r.terms_.push_back(Term{std::move(exponents), deg, coeff});
    return r;
}

RingElement RingElement::from_terms(const RingDescriptor& descriptor, std::vector<Term> terms) {
    Accumulator acc;
    for (auto& t : terms) {
        if (t.exponents.size() != descriptor.size())
            throw ValidationError("monomial length does not match ring");
        const int deg = descriptor.weighted_degree(t.exponents);
        if (deg > descriptor.truncation() || t.coeff == 0)
            continue;
        acc[{deg, std::move(t.exponents)}] += t.coeff;
    }
    RingElement r(descriptor);
    r.terms_ = drain(acc);
    return r;
}

std::optional<mpz_class> RingElement::as_integer() const {
    if (terms_.empty())
        return mpz_class(0);
    if (terms_.size() == 1 && terms_[0].degree == 0 &&
        std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(),
                    [](unsigned e) { return e == 0; }))
        return terms_[0].coeff;
    return std::nullopt;
}

RingElement RingElement::grade_component(int k) const {
    RingElement r(descriptor_);
    for (const auto& t : terms_)
        if (t.degree == k)
            r.terms_.push_back(t);
    return r;
}

bool RingElement::is_homogeneous_of_degree(int k) const {
    return std::all_of(terms_.begin(), terms_.end(), [k](const Term& t) { return t.degree == k; });
}

std::optional<int> RingElement::homogeneous_degree() const {
    if (terms_.empty())
        return std::nullopt;
    const int k = terms_.front().degree;
    if (terms_.back().degree != k)
        return std::nullopt;
    return k;
}

int RingElement::max_degree() const { return terms_.empty() ? -1 : terms_.back().degree; }

bool RingElement::divisible_by(const mpz_class& n) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&n](const Term& t) { return mpz_divisible_p(t.coeff.get_mpz_t(), n.get_mpz_t()) != 0; });
}

RingElement RingElement::exact_div(const mpz_class& n) const {
    if (n == 0 || !divisible_by(n))
        throw MathContractError("coefficients of " + to_string() + " are not divisible by " +
                                n.get_str());
    RingElement r = *this;
    for (auto& t : r.terms_)
        mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), n.get_mpz_t());
    return r;
}

RingElement RingElement::pow(unsigned exponent) const {
    RingElement result = constant(descriptor_, 1);
    RingElement base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

RingElement RingElement::with_descriptor(const RingDescriptor& target) const {
    if (target.generators() != descriptor_.generators())
        throw ValidationError("cannot move element between rings with different generators");
    RingElement r(target);
    for (const auto& t : terms_)
        if (t.degree <= target.truncation())
            r.terms_.push_back(t);
    return r;
}

void RingElement::check_same_ring(const RingElement& other) const {
    if (!(descriptor_ == other.descriptor_))
        throw ValidationError("ring descriptor mismatch");
}

RingElement RingElement::combine(const RingElement& other, bool subtract) const {
    check_same_ring(other);
    RingElement r(descriptor_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && canonical_less(*a, *b))) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || canonical_less(*b, *a)) {
            r.terms_.push_back(*b++);
            if (subtract)
                r.terms_.back().coeff = -r.terms_.back().coeff;
        } else {
            mpz_class c = subtract ? mpz_class(a->coeff - b->coeff) : mpz_class(a->coeff + b->coeff);
            if (c != 0)
                r.terms_.push_back(Term{a->exponents, a->degree, std::move(c)});
            ++a;
            ++b;
        }
    }
    return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
    if (other.terms_.empty()) {
        check_same_ring(other);
        return *this;
    }
    *this = combine(other, false);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    if (other.terms_.empty()) {
        check_same_ring(other);
        return *this;
    }
    *this = combine(other, true);
    return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check_same_ring(b);
    RingElement r(a.descriptor_);
    if (a.terms_.empty() || b.terms_.empty())
        return r;
    const int cap = a.descriptor_.truncation();
    // Terms are sorted by degree, so both loops can stop early.
    if (a.terms_.front().degree + b.terms_.front().degree > cap)
        return r;
    const std::size_t k = a.descriptor_.size();
    if (k == 0) {
        r.terms_.push_back(Term{{}, 0, a.terms_[0].coeff * b.terms_[0].coeff});
        return r;
    }
    Accumulator acc;
    Monomial m(k);
    for (const auto& ta : a.terms_) {
        if (ta.degree + b.terms_.front().degree > cap)
            break;
        for (const auto& tb : b.terms_) {
            const int deg = ta.degree + tb.degree;
            if (deg > cap)
                break;
            for (std::size_t i = 0; i < k; ++i)
                m[i] = ta.exponents[i] + tb.exponents[i];
            auto [it, inserted] = acc.try_emplace({deg, m});
            mpz_addmul(it->second.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
        }
    }
    r.terms_ = drain(acc);
    return r;
}

RingElement& RingElement::operator*=(const RingElement& other) {
    *this = *this * other;
    return *this;
}

RingElement& RingElement::operator*=(const mpz_class& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.coeff *= scalar;
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement r = *this;
    for (auto& t : r.terms_)
        t.coeff = -t.coeff;
    return r;
}

bool RingElement::operator==(const RingElement& other) const {
    if (!(descriptor_ == other.descriptor_) || terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exponents != other.terms_[i].exponents ||
            terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

std::string RingElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    const auto& gens = descriptor_.generators();
    bool first = true;
    for (const auto& t : terms_) {
        mpz_class c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        bool wrote = false;
        if (c != 1 || t.degree == 0) {
            os << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0)
                continue;
            if (wrote)
                os << '*';
            os << gens[i].name;
            if (t.exponents[i] > 1)
                os << '^' << t.exponents[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& e) { return os << e.to_string(); }

} // namespace gysin
