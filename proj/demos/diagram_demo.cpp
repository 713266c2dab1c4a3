// Builds the freely (5,1)-periodic diagram whose tangle is a single
// transposition on two strands, prints its canonical text form, and runs the
// strand-count criterion on it. The quotient class is 2, which is not simple
// in L(5,1), so the knot bounds no equivariant surface in the 4-ball.

#include <iostream>

#include "fpk/fpk.hpp"

int main() {
    using namespace fpk;

    FundamentalTangle transposition(2, {
        {{Side::left, 0}, {Side::right, 1}},
        {{Side::left, 1}, {Side::right, 0}},
    });
    FreelyPeriodicDiagram diagram(5, 1, transposition);

    std::cout << serialize_diagram(diagram);
    std::cout << "knot: " << (is_knot(diagram) ? "true" : "false") << '\n';
    std::cout << "m: " << signed_strand_count(diagram) << '\n';
    std::cout << "equivariant boundary: "
              << (is_equivariant_boundary(diagram) ? "true" : "false") << '\n';
    return 0;
}
