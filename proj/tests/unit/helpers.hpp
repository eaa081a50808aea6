#pragma once

#include "gysin/chow_ring.hpp"
#include "gysin/laurent.hpp"

#include <string>
#include <vector>

namespace gysin::test {

inline RingDescriptor ring_h(int truncation) {
    return RingDescriptor::define({{"h", 1}}, truncation);
}

inline RingDescriptor ring_ab(int truncation) {
    return RingDescriptor::define({{"a", 1}, {"b", 2}}, truncation);
}

inline RingElement gen(const RingDescriptor& r, const std::string& name) {
    return RingElement::generator(r, name);
}

inline RingElement num(const RingDescriptor& r, long v) { return RingElement::constant(r, v); }

inline LaurentPoly tvar(std::size_t arity, const RingDescriptor& r, std::size_t k) {
    return LaurentPoly::variable(arity, r, k);
}

inline LaurentPoly lconst(std::size_t arity, const RingElement& c) {
    return LaurentPoly::constant(arity, c);
}

inline LaurentPoly mono(const RingDescriptor& r, Exponents e, long c = 1) {
    return LaurentPoly::monomial(std::move(e), RingElement::constant(r, c));
}

} // namespace gysin::test
