#pragma once

/// Freely (p,q)-periodic knot diagrams.
///
/// A freely (p,q)-periodic diagram is the closure of p identical copies of a
/// fundamental tangle followed by q full twists. Full twists are pure braids,
/// so every question answered here — how many components the closure has, and
/// which homology class the quotient knot represents in L(p,q) — depends only
/// on the tangle's endpoint matching and strand orientations. Crossing data
/// is deliberately not modelled.
///
/// The fundamental tangle lives in a box with n numbered endpoints on the
/// left edge and n on the right edge. Each strand is an oriented arc joining
/// two of the 2n endpoints. Gluing consistency makes the p copies
/// concatenate: endpoint (Left, i) is an outgoing start exactly when
/// (Right, i) is an incoming end, so orientations match across the seam.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fpk/errors.hpp"
#include "fpk/lens.hpp"

namespace fpk {

enum class Side : std::uint8_t { left, right };

struct Endpoint {
    Side side;
    std::int64_t index;

    friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

/// An oriented strand, running from `from` to `to`.
struct Strand {
    Endpoint from;
    Endpoint to;

    friend auto operator<=>(const Strand&, const Strand&) = default;
};

inline std::string to_string(const Endpoint& e) {
    return (e.side == Side::left ? "L" : "R") + std::to_string(e.index);
}

/// The repeated tangle of a freely periodic diagram: an oriented perfect
/// matching on the 2n boundary endpoints.
class FundamentalTangle {
public:
    /// Validates the matching and gluing invariants; throws InvalidTangle on
    /// violation, InvalidParameters when endpoints_per_edge < 1.
    FundamentalTangle(std::int64_t endpoints_per_edge,
                      std::vector<Strand> strands)
        : n_(endpoints_per_edge), strands_(std::move(strands)) {
        validate();
    }

    std::int64_t endpoints_per_edge() const noexcept { return n_; }
    const std::vector<Strand>& strands() const noexcept { return strands_; }

    friend bool operator==(const FundamentalTangle&,
                           const FundamentalTangle&) = default;

private:
    void validate() const {
        if (n_ < 1) {
            throw InvalidParameters(
                "tangle: endpoints per edge must be >= 1, got " +
                std::to_string(n_));
        }
        // Roles per endpoint: 0 unseen, 'f' strand start, 't' strand end.
        std::vector<char> role(static_cast<std::size_t>(2 * n_), 0);
        auto slot = [&](const Endpoint& e) -> char& {
            if (e.index < 0 || e.index >= n_) {
                throw InvalidTangle("tangle: endpoint " + to_string(e) +
                                    " out of range for n=" +
                                    std::to_string(n_));
            }
            std::size_t k = static_cast<std::size_t>(
                e.side == Side::left ? e.index : n_ + e.index);
            return role[k];
        };
        auto occupy = [&](const Endpoint& e, char r) {
            char& s = slot(e);
            if (s != 0) {
                throw InvalidTangle("tangle: endpoint " + to_string(e) +
                                    " used more than once");
            }
            s = r;
        };
        for (const Strand& s : strands_) {
            occupy(s.from, 'f');
            occupy(s.to, 't');
        }
        for (std::int64_t i = 0; i < n_; ++i) {
            if (role[static_cast<std::size_t>(i)] == 0) {
                throw InvalidTangle("tangle: endpoint L" + std::to_string(i) +
                                    " unused");
            }
            if (role[static_cast<std::size_t>(n_ + i)] == 0) {
                throw InvalidTangle("tangle: endpoint R" + std::to_string(i) +
                                    " unused");
            }
            // (Left, i) starts a strand iff (Right, i) ends one, so that
            // copy k's right edge feeds copy k+1's left edge head-to-tail.
            bool left_is_start = role[static_cast<std::size_t>(i)] == 'f';
            bool right_is_end = role[static_cast<std::size_t>(n_ + i)] == 't';
            if (left_is_start != right_is_end) {
                throw InvalidTangle(
                    "tangle: inconsistent orientation across the seam at "
                    "index " +
                    std::to_string(i));
            }
        }
    }

    std::int64_t n_;
    std::vector<Strand> strands_;
};

/// Returns the tangle with every strand orientation reversed.
inline FundamentalTangle reversed(const FundamentalTangle& t) {
    std::vector<Strand> flipped;
    flipped.reserve(t.strands().size());
    for (const Strand& s : t.strands()) flipped.push_back({s.to, s.from});
    return FundamentalTangle(t.endpoints_per_edge(), std::move(flipped));
}

/// A freely (p,q)-periodic diagram: p copies of the fundamental tangle plus
/// q full twists, closed up. q is stored reduced into [1, p-1]; any integer
/// twist count is accepted and only its residue matters homologically.
class FreelyPeriodicDiagram {
public:
    FreelyPeriodicDiagram(std::int64_t p, std::int64_t q,
                          FundamentalTangle tangle)
        : quotient_(p, q), tangle_(std::move(tangle)) {}

    std::int64_t p() const noexcept { return quotient_.p(); }
    std::int64_t q() const noexcept { return quotient_.q(); }
    const LensSpace& quotient_space() const noexcept { return quotient_; }
    const FundamentalTangle& tangle() const noexcept { return tangle_; }

    friend bool operator==(const FreelyPeriodicDiagram&,
                           const FreelyPeriodicDiagram&) = default;

private:
    LensSpace quotient_;
    FundamentalTangle tangle_;
};

/// The signed count of strands crossing the vertical cut, left-to-right
/// positive. Strands with both endpoints on the same edge contribute 0.
inline std::int64_t signed_strand_count(const FundamentalTangle& t) {
    std::int64_t m = 0;
    for (const Strand& s : t.strands()) {
        if (s.from.side == Side::left && s.to.side == Side::right) ++m;
        if (s.from.side == Side::right && s.to.side == Side::left) --m;
    }
    return m;
}

inline std::int64_t signed_strand_count(const FreelyPeriodicDiagram& d) {
    return signed_strand_count(d.tangle());
}

/// Number of components of the closed-up curve: p copies of the tangle are
/// glued in a cycle, (Right, i) of copy k to (Left, i) of copy k+1 mod p.
/// The strand matching plus the gluing make every endpoint 2-valent, so the
/// closure is a disjoint union of circles; this walks them. Full twists are
/// pure braids and never change the count.
inline std::int64_t closure_component_count(const FreelyPeriodicDiagram& d) {
    const FundamentalTangle& t = d.tangle();
    const std::int64_t n = t.endpoints_per_edge();
    const std::int64_t p = d.p();
    const std::int64_t per_copy = 2 * n;

    // Endpoint encoding within one copy: L i -> i, R i -> n + i.
    auto encode = [n](const Endpoint& e) {
        return e.side == Side::left ? e.index : n + e.index;
    };
    std::vector<std::int64_t> mate(static_cast<std::size_t>(per_copy));
    for (const Strand& s : t.strands()) {
        mate[static_cast<std::size_t>(encode(s.from))] = encode(s.to);
        mate[static_cast<std::size_t>(encode(s.to))] = encode(s.from);
    }

    std::vector<char> visited(static_cast<std::size_t>(p * per_copy), 0);
    std::int64_t components = 0;
    for (std::int64_t start = 0; start < p * per_copy; ++start) {
        if (visited[static_cast<std::size_t>(start)]) continue;
        ++components;
        std::int64_t at = start;
        do {
            std::int64_t copy = at / per_copy;
            std::int64_t e = at % per_copy;
            visited[static_cast<std::size_t>(at)] = 1;
            // Cross the tangle along the strand...
            e = mate[static_cast<std::size_t>(e)];
            std::int64_t other = copy * per_copy + e;
            visited[static_cast<std::size_t>(other)] = 1;
            // ...then cross the seam into the neighbouring copy.
            if (e < n) {
                at = mod_reduce(copy - 1, p) * per_copy + (n + e);
            } else {
                at = mod_reduce(copy + 1, p) * per_copy + (e - n);
            }
        } while (at != start);
    }
    return components;
}

/// True iff the closure is a single circle.
inline bool is_knot(const FreelyPeriodicDiagram& d) {
    return closure_component_count(d) == 1;
}

/// The class of the quotient knot in H_1(L(p,q)) = Z/p, with respect to the
/// generator represented by a single left-to-right strand: m mod p.
inline std::int64_t quotient_homology_class(const FreelyPeriodicDiagram& d) {
    return mod_reduce(signed_strand_count(d), d.p());
}

/// Decides whether the diagram's knot bounds an orientable surface in the
/// 4-ball invariant under the free symmetry: true iff the quotient knot
/// represents a simple homology class, i.e. m = +-1 or +-q^{-1} (mod p).
/// Throws NotAKnot when the closure has more than one component.
inline bool is_equivariant_boundary(const FreelyPeriodicDiagram& d) {
    std::int64_t components = closure_component_count(d);
    if (components != 1) {
        throw NotAKnot("diagram closes up to " + std::to_string(components) +
                       " components, not a knot");
    }
    return simple_classes(d.quotient_space())
        .contains(quotient_homology_class(d));
}

}  // namespace fpk
