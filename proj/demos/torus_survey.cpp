// Surveys the free periods of a torus knot: for each order p up to a bound,
// prints the canonical q, whether the symmetry equivariantly bounds, and the
// divisor of r-1, r+1, s-1, or s+1 that witnesses it.
//
// Usage: torus_survey [r s max_p]   (default: 2 7 40)

#include <cstdint>
#include <iostream>
#include <string>

#include "fpk/fpk.hpp"

int main(int argc, char** argv) {
    std::int64_t r = 2, s = 7, max_p = 40;
    if (argc == 4) {
        r = std::stoll(argv[1]);
        s = std::stoll(argv[2]);
        max_p = std::stoll(argv[3]);
    } else if (argc != 1) {
        std::cerr << "usage: torus_survey [r s max_p]\n";
        return 64;
    }

    fpk::TorusKnot knot(r, s);
    std::cout << "free periods of T(" << knot.r() << "," << knot.s() << ")\n";
    std::cout << "p\tq\tbounds\twitness\n";
    for (std::int64_t p = 2; p <= max_p; ++p) {
        if (!fpk::has_free_period(knot, p)) continue;
        fpk::FreePeriod period = fpk::free_period(knot, p);
        auto witness = fpk::bounding_witness(knot, p);
        std::cout << period.p << '\t' << period.q_canonical << '\t'
                  << (witness ? "yes" : "no") << '\t'
                  << (witness ? std::to_string(*witness) : "-") << '\n';
    }
    return 0;
}
