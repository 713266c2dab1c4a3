#pragma once

/// Modular arithmetic over Z/p and the lens space layer.
///
/// A lens space L(p,q) is determined by coprime integers p >= 2 and
/// 1 <= q <= p-1, and has H_1(L(p,q)) = Z/p. Two lens spaces L(p,q) and
/// L(p,q') are homeomorphic exactly when q' is one of +-q, +-q^{-1} mod p,
/// and the homology classes represented by the cores of the two Heegaard
/// solid tori are +-1 and +-q^{-1}. Everything downstream (the diagram
/// criterion, the torus knot criterion, cobordism compatibility) reduces to
/// these residue computations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "fpk/errors.hpp"

namespace fpk {

/// Reduces a into the canonical range [0, p-1]; works for negative a.
inline std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

/// Multiplicative inverse of a mod p via the extended Euclidean algorithm.
///
/// Returns the unique b in [0, p-1] with a*b = 1 (mod p). For p = 1 every
/// residue is 0 and the inverse is 0 by convention. Throws NotAUnit when
/// gcd(a, p) != 1.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    if (p < 1) {
        throw InvalidParameters("inv_mod: modulus must be >= 1, got " +
                                std::to_string(p));
    }
    if (p == 1) return 0;
    std::int64_t r0 = p, r1 = mod_reduce(a, p);
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        std::int64_t r2 = r0 - quot * r1;
        std::int64_t t2 = t0 - quot * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw NotAUnit("inv_mod: " + std::to_string(a) + " is not a unit mod " +
                       std::to_string(p));
    }
    return mod_reduce(t0, p);
}

/// A set of residues mod a fixed modulus. Elements are kept sorted and
/// unique, all in [0, modulus-1].
struct ResidueSet {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> elements;

    ResidueSet() = default;

    ResidueSet(std::int64_t mod, std::vector<std::int64_t> elems)
        : modulus(mod), elements(std::move(elems)) {
        if (modulus < 1) {
            throw InvalidParameters("ResidueSet: modulus must be >= 1");
        }
        for (std::int64_t& e : elements) {
            if (e < 0 || e >= modulus) {
                throw InvalidParameters(
                    "ResidueSet: element " + std::to_string(e) +
                    " outside [0, " + std::to_string(modulus - 1) + "]");
            }
        }
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()),
                       elements.end());
    }

    bool contains(std::int64_t r) const {
        return std::binary_search(elements.begin(), elements.end(), r);
    }

    std::size_t size() const { return elements.size(); }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

/// The quotient space of a free cyclic action: coprime p >= 2 and q in
/// [1, p-1]. The constructor reduces q mod p and validates.
class LensSpace {
public:
    LensSpace(std::int64_t p, std::int64_t q) : p_(p) {
        if (p < 2) {
            throw InvalidParameters("LensSpace: p must be >= 2, got " +
                                    std::to_string(p));
        }
        q_ = mod_reduce(q, p);
        if (std::gcd(p_, q_) != 1) {
            throw InvalidParameters("LensSpace: gcd(p, q) must be 1, got p=" +
                                    std::to_string(p) + " q=" +
                                    std::to_string(q));
        }
    }

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }

    friend bool operator==(const LensSpace&, const LensSpace&) = default;

private:
    std::int64_t p_;
    std::int64_t q_;
};

/// Reduces arbitrary integer parameters to a valid LensSpace.
inline LensSpace normalize(std::int64_t p, std::int64_t q) {
    return LensSpace(p, q);
}

/// The orbit {+-q, +-q^{-1}} mod p: every q' such that L(p,q') is
/// homeomorphic to L(p,q). Has 1, 2, or 4 elements.
inline ResidueSet q_orbit(const LensSpace& L) {
    std::int64_t p = L.p();
    std::int64_t qi = inv_mod(L.q(), p);
    return ResidueSet(p, {L.q(), p - L.q(), qi, mod_reduce(p - qi, p)});
}

/// Homeomorphism classification: L(p1,q1) = L(p2,q2) iff p1 = p2 and
/// q2 is one of +-q1^{+-1} mod p.
inline bool is_homeomorphic(const LensSpace& lhs, const LensSpace& rhs) {
    return lhs.p() == rhs.p() && q_orbit(lhs).contains(rhs.q());
}

/// The simple homology classes of L(p,q): the classes represented by the
/// cores of the two solid tori of the genus 1 Heegaard splitting, with both
/// orientations. Concretely {+-1, +-q^{-1}} mod p.
inline ResidueSet simple_classes(const LensSpace& L) {
    std::int64_t p = L.p();
    std::int64_t qi = inv_mod(L.q(), p);
    return ResidueSet(p, {1, p - 1, qi, mod_reduce(p - qi, p)});
}

}  // namespace fpk
