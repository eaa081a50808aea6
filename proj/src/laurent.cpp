#include "gysin/laurent.hpp"

#include "gysin/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace gysin {

namespace {

using Accumulator = std::map<Exponents, RingElement, std::greater<>>;

void accumulate(Accumulator& acc, const Exponents& e, const RingElement& c) {
    if (c.is_zero())
        return;
    auto it = acc.find(e);
    if (it == acc.end())
        acc.emplace(e, c);
    else
        it->second += c;
}

} // namespace

LaurentPoly::LaurentPoly() = default;

LaurentPoly::LaurentPoly(std::size_t arity, RingDescriptor descriptor)
    : arity_(arity), descriptor_(std::move(descriptor)) {}

LaurentPoly LaurentPoly::constant(std::size_t arity, const RingElement& c) {
    LaurentPoly f(arity, c.descriptor());
    f.add_term(Exponents(arity, 0), c);
    return f;
}

LaurentPoly LaurentPoly::constant(std::size_t arity, const RingDescriptor& descriptor,
                                  const mpz_class& c) {
    return constant(arity, RingElement::constant(descriptor, c));
}

LaurentPoly LaurentPoly::monomial(Exponents exponents, const RingElement& c) {
    LaurentPoly f(exponents.size(), c.descriptor());
    f.add_term(exponents, c);
    return f;
}

LaurentPoly LaurentPoly::variable(std::size_t arity, const RingDescriptor& descriptor,
                                  std::size_t index) {
    if (index < 1 || index > arity)
        throw ValidationError("variable t_" + std::to_string(index) + " out of range for arity " +
                              std::to_string(arity));
    Exponents e(arity, 0);
    e[index - 1] = 1;
    return monomial(std::move(e), RingElement::constant(descriptor, 1));
}

void LaurentPoly::add_term(const Exponents& exponents, const RingElement& c) {
    if (exponents.size() != arity_)
        throw ValidationError("exponent vector length does not match arity");
    if (!(c.descriptor() == descriptor_))
        throw ValidationError("ring descriptor mismatch");
    if (c.is_zero())
        return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                               [](const Entry& e, const Exponents& x) { return e.exponents > x; });
    if (it != terms_.end() && it->exponents == exponents) {
        it->coeff += c;
        if (it->coeff.is_zero())
            terms_.erase(it);
    } else {
        terms_.insert(it, Entry{exponents, c});
    }
}

bool LaurentPoly::is_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Entry& e) {
        return std::all_of(e.exponents.begin(), e.exponents.end(), [](int x) { return x >= 0; });
    });
}

int LaurentPoly::min_exponent(std::size_t var) const {
    if (terms_.empty())
        return 0;
    int lo = terms_.front().exponents.at(var);
    for (const auto& e : terms_)
        lo = std::min(lo, e.exponents[var]);
    return lo;
}

int LaurentPoly::max_exponent(std::size_t var) const {
    if (terms_.empty())
        return 0;
    int hi = terms_.front().exponents.at(var);
    for (const auto& e : terms_)
        hi = std::max(hi, e.exponents[var]);
    return hi;
}

bool LaurentPoly::involves_only(std::size_t var) const {
    for (const auto& e : terms_)
        for (std::size_t i = 0; i < arity_; ++i)
            if (i != var && e.exponents[i] != 0)
                return false;
    return true;
}

LaurentPoly LaurentPoly::permuted(std::span<const std::size_t> perm) const {
    if (perm.size() != arity_)
        throw ValidationError("permutation length does not match arity");
    Accumulator acc;
    Exponents moved(arity_);
    for (const auto& e : terms_) {
        for (std::size_t i = 0; i < arity_; ++i)
            moved[perm[i]] = e.exponents[i];
        accumulate(acc, moved, e.coeff);
    }
    LaurentPoly out(arity_, descriptor_);
    for (auto& [ex, c] : acc)
        out.terms_.push_back(Entry{ex, std::move(c)});
    return out;
}

LaurentPoly LaurentPoly::shifted(const Exponents& shift) const {
    if (shift.size() != arity_)
        throw ValidationError("shift length does not match arity");
    LaurentPoly out = *this;
    for (auto& e : out.terms_)
        for (std::size_t i = 0; i < arity_; ++i)
            e.exponents[i] += shift[i];
    return out;  // a uniform shift preserves the lexicographic order
}

LaurentPoly LaurentPoly::embedded(std::size_t new_arity, std::size_t offset) const {
    LaurentPoly out(new_arity, descriptor_);
    for (const auto& e : terms_) {
        Exponents x(new_arity, 0);
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e.exponents[i] == 0)
                continue;
            if (offset + i >= new_arity)
                throw ValidationError("embedding drops a variable in use");
            x[offset + i] = e.exponents[i];
        }
        out.add_term(x, e.coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result = constant(arity_, descriptor_, 1);
    LaurentPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

void LaurentPoly::check_compatible(const LaurentPoly& other) const {
    if (arity_ != other.arity_)
        throw ValidationError("arity mismatch: " + std::to_string(arity_) + " vs " +
                              std::to_string(other.arity_));
    if (!(descriptor_ == other.descriptor_))
        throw ValidationError("ring descriptor mismatch");
}

namespace {

std::vector<LaurentPoly::Entry> merge_terms(const std::vector<LaurentPoly::Entry>& a,
                                            std::span<const LaurentPoly::Entry> b, bool subtract) {
    std::vector<LaurentPoly::Entry> out;
    out.reserve(a.size() + b.size());
    auto x = a.begin();
    auto y = b.begin();
    while (x != a.end() || y != b.end()) {
        if (y == b.end() || (x != a.end() && x->exponents > y->exponents)) {
            out.push_back(*x++);
        } else if (x == a.end() || y->exponents > x->exponents) {
            out.push_back(subtract ? LaurentPoly::Entry{y->exponents, -y->coeff} : *y);
            ++y;
        } else {
            RingElement c = subtract ? x->coeff - y->coeff : x->coeff + y->coeff;
            if (!c.is_zero())
                out.push_back(LaurentPoly::Entry{x->exponents, std::move(c)});
            ++x;
            ++y;
        }
    }
    return out;
}

} // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    check_compatible(other);
    terms_ = merge_terms(terms_, other.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    check_compatible(other);
    terms_ = merge_terms(terms_, other.terms_, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_compatible(b);
    Accumulator acc;
    Exponents sum(a.arity_);
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            RingElement c = x.coeff * y.coeff;
            if (c.is_zero())
                continue;
            for (std::size_t i = 0; i < a.arity_; ++i)
                sum[i] = x.exponents[i] + y.exponents[i];
            accumulate(acc, sum, c);
        }
    }
    LaurentPoly out(a.arity_, a.descriptor_);
    for (auto& [ex, c] : acc)
        if (!c.is_zero())
            out.terms_.push_back(LaurentPoly::Entry{ex, std::move(c)});
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
    *this = *this * other;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const RingElement& scalar) {
    if (!(scalar.descriptor() == descriptor_))
        throw ValidationError("ring descriptor mismatch");
    std::vector<Entry> kept;
    kept.reserve(terms_.size());
    for (auto& e : terms_) {
        RingElement c = e.coeff * scalar;
        if (!c.is_zero())
            kept.push_back(Entry{std::move(e.exponents), std::move(c)});
    }
    terms_ = std::move(kept);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& e : out.terms_)
        e.coeff = -e.coeff;
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
    if (arity_ != other.arity_ || !(descriptor_ == other.descriptor_) ||
        terms_.size() != other.terms_.size())
        return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exponents != other.terms_[i].exponents ||
            !(terms_[i].coeff == other.terms_[i].coeff))
            return false;
    return true;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : terms_) {
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < arity_; ++i) {
            if (e.exponents[i] == 0)
                continue;
            if (any)
                mono << '*';
            mono << 't' << (i + 1);
            if (e.exponents[i] != 1)
                mono << '^' << e.exponents[i];
            any = true;
        }
        std::string cs = e.coeff.to_string();
        bool negative = false;
        if (e.coeff.terms().size() == 1 && cs.front() == '-') {
            negative = true;
            cs.erase(0, 1);
        }
        if (e.coeff.terms().size() > 1)
            cs = "(" + cs + ")";
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (!any)
            os << cs;
        else if (cs == "1")
            os << mono.str();
        else
            os << cs << '*' << mono.str();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) { return os << f.to_string(); }

LaurentPoly lmul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

RingElement coeff(const LaurentPoly& f, const ExtractionTarget& m) {
    if (m.size() != f.arity())
        throw ValidationError("extraction target has " + std::to_string(m.size()) +
                              " exponents, polynomial has arity " + std::to_string(f.arity()));
    for (const auto& e : f.terms())
        if (e.exponents == m)
            return e.coeff;
    return RingElement(f.descriptor());
}

namespace {

// Exponent window [lo, hi] per variable that a partial product may occupy and
// still reach the target once the remaining factors are multiplied in.
struct Window {
    std::vector<int> lo, hi;

    bool admits(const Exponents& e) const {
        for (std::size_t j = 0; j < e.size(); ++j)
            if (e[j] < lo[j] || e[j] > hi[j])
                return false;
        return true;
    }
};

} // namespace

RingElement staged_extract(std::span<const LaurentPoly> factors, const ExtractionTarget& m) {
    if (factors.empty())
        throw ValidationError("staged_extract needs at least one factor");
    const std::size_t d = factors.front().arity();
    const RingDescriptor& ring = factors.front().descriptor();
    for (const auto& f : factors) {
        if (f.arity() != d)
            throw ValidationError("arity mismatch among extraction factors");
        if (!(f.descriptor() == ring))
            throw ValidationError("ring descriptor mismatch among extraction factors");
    }
    if (m.size() != d)
        throw ValidationError("extraction target has " + std::to_string(m.size()) +
                              " exponents, factors have arity " + std::to_string(d));
    const RingElement zero(ring);
    for (const auto& f : factors)
        if (f.is_zero())
            return zero;

    // Factors in a single variable are kept aside for the elimination stage.
    std::vector<const LaurentPoly*> multi;
    std::vector<std::vector<const LaurentPoly*>> single(d);
    for (const auto& f : factors) {
        std::size_t only = d;
        std::size_t used = 0;
        for (std::size_t j = 0; j < d; ++j) {
            if (f.min_exponent(j) != 0 || f.max_exponent(j) != 0) {
                only = j;
                ++used;
            }
        }
        if (used == 1 && f.involves_only(only))
            single[only].push_back(&f);
        else
            multi.push_back(&f);
    }

    // rest_lo/hi[k][j]: exponent range of t_j contributed by multi[k..] and all
    // single-variable factors.
    std::vector<std::vector<int>> rest_lo(multi.size() + 1, std::vector<int>(d, 0));
    std::vector<std::vector<int>> rest_hi(multi.size() + 1, std::vector<int>(d, 0));
    for (std::size_t j = 0; j < d; ++j)
        for (const auto* f : single[j]) {
            rest_lo[multi.size()][j] += f->min_exponent(j);
            rest_hi[multi.size()][j] += f->max_exponent(j);
        }
    for (std::size_t k = multi.size(); k-- > 0;)
        for (std::size_t j = 0; j < d; ++j) {
            rest_lo[k][j] = rest_lo[k + 1][j] + multi[k]->min_exponent(j);
            rest_hi[k][j] = rest_hi[k + 1][j] + multi[k]->max_exponent(j);
        }

    Accumulator current;
    current.emplace(Exponents(d, 0), RingElement::constant(ring, 1));
    {
        Window w{std::vector<int>(d), std::vector<int>(d)};
        for (std::size_t j = 0; j < d; ++j) {
            w.lo[j] = m[j] - rest_hi[0][j];
            w.hi[j] = m[j] - rest_lo[0][j];
        }
        if (!w.admits(Exponents(d, 0)))
            return zero;
    }

    Exponents sum(d);
    for (std::size_t k = 0; k < multi.size(); ++k) {
        Window w{std::vector<int>(d), std::vector<int>(d)};
        for (std::size_t j = 0; j < d; ++j) {
            w.lo[j] = m[j] - rest_hi[k + 1][j];
            w.hi[j] = m[j] - rest_lo[k + 1][j];
        }
        Accumulator next;
        for (const auto& [ex, c] : current) {
            for (const auto& term : multi[k]->terms()) {
                for (std::size_t j = 0; j < d; ++j)
                    sum[j] = ex[j] + term.exponents[j];
                if (!w.admits(sum))
                    continue;
                accumulate(next, sum, c * term.coeff);
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        current = std::move(next);
        if (current.empty())
            return zero;
    }

    // Eliminate t_1, t_2, ... : each surviving term a contributes
    // c_a * [t_j^{m_j - a_j}](product of the t_j-only factors).
    for (std::size_t j = 0; j < d; ++j) {
        int lo = current.begin()->first[j];
        int hi = lo;
        for (const auto& [ex, c] : current) {
            lo = std::min(lo, ex[j]);
            hi = std::max(hi, ex[j]);
        }
        // Needed exponents of the univariate product lie in [m_j - hi, m_j - lo].
        std::map<int, RingElement> uni;
        uni.emplace(0, RingElement::constant(ring, 1));
        int uni_rest_lo = 0, uni_rest_hi = 0;
        for (const auto* f : single[j]) {
            uni_rest_lo += f->min_exponent(j);
            uni_rest_hi += f->max_exponent(j);
        }
        for (const auto* f : single[j]) {
            uni_rest_lo -= f->min_exponent(j);
            uni_rest_hi -= f->max_exponent(j);
            std::map<int, RingElement> next;
            for (const auto& [a, c] : uni) {
                for (const auto& term : f->terms()) {
                    const int s = a + term.exponents[j];
                    if (s + uni_rest_hi < m[j] - hi || s + uni_rest_lo > m[j] - lo)
                        continue;
                    RingElement p = c * term.coeff;
                    if (p.is_zero())
                        continue;
                    auto it = next.find(s);
                    if (it == next.end())
                        next.emplace(s, std::move(p));
                    else
                        it->second += p;
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
            uni = std::move(next);
        }
        Accumulator next;
        for (const auto& [ex, c] : current) {
            auto it = uni.find(m[j] - ex[j]);
            if (it == uni.end())
                continue;
            Exponents reduced = ex;
            reduced[j] = 0;
            accumulate(next, reduced, c * it->second);
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        current = std::move(next);
        if (current.empty())
            return zero;
    }
    auto it = current.find(Exponents(d, 0));
    return it == current.end() ? zero : it->second;
}

RingElement det_extract(const Matrix<LaurentPoly>& F, const ExtractionTarget& m) {
    const std::size_t d = F.size();
    if (m.size() != d)
        throw ValidationError("extraction target length does not match matrix size");
    if (d == 0)
        throw ValidationError("det_extract of an empty matrix");
    const RingDescriptor& ring = F[0][0].descriptor();
    Matrix<RingElement> extracted(d, std::vector<RingElement>(d, RingElement(ring)));
    for (std::size_t i = 0; i < d; ++i) {
        if (F[i].size() != d)
            throw ValidationError("det_extract needs a square matrix");
        for (std::size_t j = 0; j < d; ++j) {
            const LaurentPoly& entry = F[i][j];
            if (entry.arity() != d)
                throw ValidationError("matrix entry arity does not match matrix size");
            if (!entry.involves_only(j))
                throw ValidationError("entry (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ") involves a variable other than t_" +
                                      std::to_string(j + 1));
            for (const auto& term : entry.terms())
                if (term.exponents[j] == m[j])
                    extracted[i][j] = term.coeff;
        }
    }
    return determinant(extracted, RingElement(ring), RingElement::constant(ring, 1));
}

LaurentPoly laurent_determinant(const Matrix<LaurentPoly>& F) {
    if (F.empty())
        throw ValidationError("determinant of an empty matrix");
    const auto& probe = F[0][0];
    return determinant(F, LaurentPoly(probe.arity(), probe.descriptor()),
                       LaurentPoly::constant(probe.arity(), probe.descriptor(), 1));
}

LaurentPoly divide_by_difference(const LaurentPoly& p, std::size_t a, std::size_t b) {
    const std::size_t d = p.arity();
    if (a >= d || b >= d || a == b)
        throw ValidationError("divide_by_difference: bad variable indices");
    if (!p.is_polynomial())
        throw ValidationError("divide_by_difference needs a polynomial");
    if (p.is_zero())
        return p;
    // p = sum_k A_k t_a^k, quotient Q = sum_k Q_k t_a^k with
    // Q_{k-1} = A_k + t_b Q_k and remainder A_0 + t_b Q_0.
    const int top = p.max_exponent(a);
    std::vector<LaurentPoly> slices(top + 1, LaurentPoly(d, p.descriptor()));
    for (const auto& term : p.terms()) {
        Exponents e = term.exponents;
        const int k = e[a];
        e[a] = 0;
        slices[k].add_term(e, term.coeff);
    }
    Exponents tb(d, 0);
    tb[b] = 1;
    LaurentPoly quotient(d, p.descriptor());
    LaurentPoly carry(d, p.descriptor());  // Q_k
    for (int k = top; k >= 1; --k) {
        carry = slices[k] + carry.shifted(tb);  // Q_{k-1}
        Exponents up(d, 0);
        up[a] = k - 1;
        quotient += carry.shifted(up);
    }
    if (!(slices[0] + carry.shifted(tb)).is_zero())
        throw MathContractError("polynomial is not divisible by t" + std::to_string(a + 1) +
                                " - t" + std::to_string(b + 1));
    return quotient;
}

namespace {

LaurentPoly permutation_sum(const LaurentPoly& f, std::size_t first, std::size_t last,
                            bool signed_sum) {
    if (first < 1 || last > f.arity() || first > last)
        throw ValidationError("permutation block out of range");
    std::vector<std::size_t> perm(f.arity());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    LaurentPoly out(f.arity(), f.descriptor());
    const auto begin = perm.begin() + static_cast<std::ptrdiff_t>(first - 1);
    const auto end = perm.begin() + static_cast<std::ptrdiff_t>(last);
    do {
        int inversions = 0;
        for (auto i = begin; i != end; ++i)
            for (auto j = i + 1; j != end; ++j)
                inversions += *i > *j ? 1 : 0;
        if (signed_sum && inversions % 2 == 1)
            out -= f.permuted(perm);
        else
            out += f.permuted(perm);
    } while (std::next_permutation(begin, end));
    return out;
}

} // namespace

LaurentPoly symmetrized(const LaurentPoly& f, std::size_t first, std::size_t last) {
    return permutation_sum(f, first, last, false);
}

LaurentPoly antisymmetrized(const LaurentPoly& f) {
    if (f.arity() == 0)
        return f;
    return permutation_sum(f, 1, f.arity(), true);
}

LaurentPoly vandermonde(std::size_t arity, const RingDescriptor& descriptor) {
    LaurentPoly v = LaurentPoly::constant(arity, descriptor, 1);
    for (std::size_t i = 0; i < arity; ++i)
        for (std::size_t j = i + 1; j < arity; ++j)
            v *= LaurentPoly::variable(arity, descriptor, i + 1) -
                 LaurentPoly::variable(arity, descriptor, j + 1);
    return v;
}

} // namespace gysin
