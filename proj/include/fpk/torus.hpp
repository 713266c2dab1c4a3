#pragma once

/// Free periods of torus knots and the divisor criterion.
///
/// T(r,s) has a free symmetry of order p exactly when gcd(p, rs) = 1, and
/// the symmetry of each order is unique up to conjugacy. Its quotient data
/// comes from the standard r-strand presentation: the s total twists split
/// as +-q full twists plus p identical tangles of n twists each,
///
///     s = +-q*r + n*p,   so   +-q = s*r^{-1} (mod p).
///
/// The knot equivariantly bounds in the 4-ball for that symmetry exactly
/// when p divides one of r-1, r+1, s-1, s+1; `standard_diagram` realizes the
/// r-strand presentation so the diagram-level criterion can be checked
/// against the divisor criterion directly.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "fpk/diagram.hpp"
#include "fpk/errors.hpp"
#include "fpk/lens.hpp"

namespace fpk {

/// A nontrivial torus knot T(r,s), canonicalized to 2 <= r < s with
/// gcd(r,s) = 1. T(1,s) is the unknot and rejected.
class TorusKnot {
public:
    TorusKnot(std::int64_t r, std::int64_t s) : r_(r), s_(s) {
        if (r_ > s_) std::swap(r_, s_);
        if (r_ < 2) {
            throw InvalidParameters(
                "TorusKnot: parameters must be >= 2 (T(1,s) is the unknot), "
                "got r=" +
                std::to_string(r) + " s=" + std::to_string(s));
        }
        if (std::gcd(r_, s_) != 1) {
            throw InvalidParameters("TorusKnot: gcd(r, s) must be 1, got r=" +
                                    std::to_string(r) + " s=" +
                                    std::to_string(s));
        }
    }

    std::int64_t r() const noexcept { return r_; }
    std::int64_t s() const noexcept { return s_; }

    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;

private:
    std::int64_t r_;
    std::int64_t s_;
};

/// The unique free symmetry of a given order p. q_canonical labels the
/// orbit {+-q^{+-1}} by its minimum; q_r_strand is the twist parameter of
/// the r-strand diagram, the representative of +-(s*r^{-1}) mod p in
/// [1, p-1] closest to 0, i.e. min(t, p-t) for t = s*r^{-1} mod p.
struct FreePeriod {
    std::int64_t p;
    std::int64_t q_canonical;
    std::int64_t q_r_strand;

    friend bool operator==(const FreePeriod&, const FreePeriod&) = default;
};

/// True iff T(r,s) admits a free symmetry of order p: gcd(p, rs) = 1.
inline bool has_free_period(const TorusKnot& k, std::int64_t p) {
    if (p < 2) {
        throw InvalidParameters("has_free_period: p must be >= 2, got " +
                                std::to_string(p));
    }
    return std::gcd(p, k.r()) == 1 && std::gcd(p, k.s()) == 1;
}

/// The unique order-p free period. Throws NoFreePeriod if gcd(p, rs) != 1.
inline FreePeriod free_period(const TorusKnot& k, std::int64_t p) {
    if (!has_free_period(k, p)) {
        throw NoFreePeriod("T(" + std::to_string(k.r()) + "," +
                           std::to_string(k.s()) +
                           ") has no free period of order " +
                           std::to_string(p));
    }
    std::int64_t t =
        mod_reduce(mod_reduce(k.s(), p) * inv_mod(k.r(), p), p);
    std::int64_t q_r = std::min(t, p - t);
    std::int64_t q_canonical = q_orbit(LensSpace(p, t)).elements.front();
    return FreePeriod{p, q_canonical, q_r};
}

/// Divisor criterion: the order-p free symmetry of T(r,s) equivariantly
/// bounds iff p divides r-1, r+1, s-1, or s+1.
inline bool equivariantly_bounds(const TorusKnot& k, std::int64_t p) {
    if (!has_free_period(k, p)) {
        throw NoFreePeriod("T(" + std::to_string(k.r()) + "," +
                           std::to_string(k.s()) +
                           ") has no free period of order " +
                           std::to_string(p));
    }
    return (k.r() - 1) % p == 0 || (k.r() + 1) % p == 0 ||
           (k.s() - 1) % p == 0 || (k.s() + 1) % p == 0;
}

/// The smallest member of {r-1, r+1, s-1, s+1} divisible by p, if any.
inline std::optional<std::int64_t> bounding_witness(const TorusKnot& k,
                                                    std::int64_t p) {
    std::int64_t candidates[4] = {k.r() - 1, k.r() + 1, k.s() - 1, k.s() + 1};
    std::sort(std::begin(candidates), std::end(candidates));
    for (std::int64_t value : candidates) {
        if (value % p == 0) return value;
    }
    return std::nullopt;
}

/// All p in [2, p_max] with a free period that equivariantly bounds, sorted.
/// Every such p divides one of r-1, r+1, s-1, s+1, so the divisors of those
/// four numbers are enumerated instead of scanning [2, p_max].
inline std::vector<std::int64_t> bounding_periods(const TorusKnot& k,
                                                  std::int64_t p_max) {
    std::vector<std::int64_t> periods;
    auto consider = [&](std::int64_t d) {
        if (d >= 2 && d <= p_max && std::gcd(d, k.r()) == 1 &&
            std::gcd(d, k.s()) == 1) {
            periods.push_back(d);
        }
    };
    for (std::int64_t value : {k.r() - 1, k.r() + 1, k.s() - 1, k.s() + 1}) {
        for (std::int64_t d = 1; d * d <= value; ++d) {
            if (value % d == 0) {
                consider(d);
                consider(value / d);
            }
        }
    }
    std::sort(periods.begin(), periods.end());
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    return periods;
}

/// The standard freely periodic diagram for T(r,s) with r strands: all
/// strands oriented left to right, connectivity the n-th power of the
/// r-cycle i -> i+1, where n is the per-tangle twist count from
/// s = +-q*r + n*p (sign chosen to make n integral; when both work, the
/// smaller |n| — the two choices agree mod r). The closure is always a
/// single component since n*p = s (mod r) and gcd(r,s) = 1.
inline FreelyPeriodicDiagram standard_diagram(const TorusKnot& k,
                                              std::int64_t p) {
    FreePeriod fp = free_period(k, p);
    const std::int64_t q = fp.q_r_strand;
    const std::int64_t r = k.r();

    std::optional<std::int64_t> twists;
    for (std::int64_t sign : {+1, -1}) {
        std::int64_t numerator = k.s() - sign * q * r;
        if (numerator % p != 0) continue;
        std::int64_t n = numerator / p;
        if (!twists || std::abs(n) < std::abs(*twists)) twists = n;
    }
    // free_period guarantees q = +-s*r^{-1} (mod p), so a sign always works.
    std::int64_t shift = mod_reduce(*twists, r);

    std::vector<Strand> strands;
    strands.reserve(static_cast<std::size_t>(r));
    for (std::int64_t i = 0; i < r; ++i) {
        strands.push_back({Endpoint{Side::left, i},
                           Endpoint{Side::right, (i + shift) % r}});
    }
    return FreelyPeriodicDiagram(p, q, FundamentalTangle(r, std::move(strands)));
}

}  // namespace fpk
