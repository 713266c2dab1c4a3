#pragma once

/// Obstructions for equivariant cobordisms between freely periodic knots.
///
/// An equivariant cobordism between a freely (p,q)-periodic and a freely
/// (p,q')-periodic knot descends to a homology cobordism between L(p,q) and
/// L(p,q'), which forces q' = +-q^{+-1} (mod p). Separately, the genus of an
/// equivariant surface in the 4-ball is always a multiple of p.

#include <cstdint>
#include <string>

#include "fpk/errors.hpp"
#include "fpk/lens.hpp"

namespace fpk {

/// A genus lower bound for equivariant surfaces: any ordinary 4-genus lower
/// bound, rounded up to the next multiple of p.
struct GenusBound {
    std::int64_t p;
    std::int64_t ordinary_lower_bound;
    std::int64_t equivariant_lower_bound;

    friend bool operator==(const GenusBound&, const GenusBound&) = default;
};

/// True iff an equivariant cobordism between a freely (p,q)-periodic and a
/// freely (p,q')-periodic knot is not ruled out: q' in {+-q^{+-1}} mod p.
/// This is the same rule as the homeomorphism classification of L(p,q).
inline bool cobordism_compatible(std::int64_t p, std::int64_t q,
                                 std::int64_t q_prime) {
    return is_homeomorphic(LensSpace(p, q), LensSpace(p, q_prime));
}

/// Rounds an externally supplied genus lower bound up to a multiple of p.
/// The multiple-of-p rule constrains surfaces that exist; it does not force
/// positive genus, so 0 stays 0.
inline GenusBound equivariant_genus_lower_bound(
    std::int64_t p, std::int64_t ordinary_lower_bound) {
    if (p < 2) {
        throw InvalidParameters(
            "equivariant_genus_lower_bound: p must be >= 2, got " +
            std::to_string(p));
    }
    if (ordinary_lower_bound < 0) {
        throw InvalidParameters(
            "equivariant_genus_lower_bound: genus bound must be >= 0, got " +
            std::to_string(ordinary_lower_bound));
    }
    std::int64_t rounded = (ordinary_lower_bound + p - 1) / p * p;
    return GenusBound{p, ordinary_lower_bound, rounded};
}

}  // namespace fpk
