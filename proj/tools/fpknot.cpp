// fpknot: decides whether freely (p,q)-periodic knots bound equivariant
// orientable surfaces in the 4-ball, from arithmetic or diagram data.
//
// Exit codes: 0 success, 1 domain-level negative (not a knot, no free
// period), 2 invalid parameters or parse error, 64 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fpk/fpk.hpp"

namespace {

constexpr int kExitDomainNegative = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;

const char* bool_text(bool b) { return b ? "true" : "false"; }

void print_residues(const fpk::ResidueSet& set) {
    bool first = true;
    for (std::int64_t r : set.elements) {
        if (!first) std::cout << ' ';
        std::cout << r;
        first = false;
    }
    std::cout << '\n';
}

int check_diagram_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitInvalid;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    fpk::FreelyPeriodicDiagram diagram = fpk::parse_diagram(buffer.str());

    bool knot = fpk::is_knot(diagram);
    std::cout << "knot: " << bool_text(knot) << '\n';
    std::cout << "m: " << fpk::signed_strand_count(diagram) << '\n';
    if (!knot) {
        std::cerr << "error: diagram closes up to more than one component\n";
        return kExitDomainNegative;
    }
    std::int64_t cls = fpk::quotient_homology_class(diagram);
    bool simple = fpk::simple_classes(diagram.quotient_space()).contains(cls);
    std::cout << "class: " << cls << '\n';
    std::cout << "simple: " << bool_text(simple) << '\n';
    std::cout << "equivariant_boundary: "
              << bool_text(fpk::is_equivariant_boundary(diagram)) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant boundaries of freely periodic knots"};
    app.require_subcommand(1);

    std::int64_t p = 0, q = 0, q2 = 0, r = 0, s = 0;
    std::int64_t max_p = 0, max_rs = 0, g4 = 0;
    std::string diagram_path;
    bool only_bounding = false;

    CLI::App* lens = app.add_subcommand("lens", "Lens space arithmetic");
    lens->require_subcommand(1);
    CLI::App* lens_classes = lens->add_subcommand(
        "classes", "Print the simple homology classes of L(p,q)");
    lens_classes->add_option("-p", p, "Order of the cyclic group")->required();
    lens_classes->add_option("-q", q, "Lens space parameter")->required();
    CLI::App* lens_homeo = lens->add_subcommand(
        "homeo", "Decide whether L(p,q) and L(p,q2) are homeomorphic");
    lens_homeo->add_option("-p", p, "Order of the cyclic group")->required();
    lens_homeo->add_option("-q", q, "First lens space parameter")->required();
    lens_homeo->add_option("--q2", q2, "Second lens space parameter")
        ->required();

    CLI::App* diagram =
        app.add_subcommand("diagram", "Freely periodic diagram files");
    diagram->require_subcommand(1);
    CLI::App* diagram_check = diagram->add_subcommand(
        "check",
        "Validate an fpdiagram file and decide equivariant boundedness");
    diagram_check->add_option("file", diagram_path, "Diagram file to check")
        ->required();

    CLI::App* torus =
        app.add_subcommand("torus", "Free periods of torus knots");
    torus->require_subcommand(1);
    CLI::App* torus_periods = torus->add_subcommand(
        "periods", "List free periods of T(r,s) up to a bound");
    torus_periods->add_option("-r", r, "First torus knot parameter")
        ->required();
    torus_periods->add_option("-s", s, "Second torus knot parameter")
        ->required();
    torus_periods->add_option("--max-p", max_p, "Largest order to list")
        ->required();
    CLI::App* torus_bounds = torus->add_subcommand(
        "bounds",
        "Decide whether the order-p symmetry of T(r,s) equivariantly bounds");
    torus_bounds->add_option("-r", r, "First torus knot parameter")
        ->required();
    torus_bounds->add_option("-s", s, "Second torus knot parameter")
        ->required();
    torus_bounds->add_option("-p", p, "Order of the symmetry")->required();
    CLI::App* torus_genus = torus->add_subcommand(
        "genus", "Round a 4-genus lower bound up for equivariant surfaces");
    torus_genus->add_option("-r", r, "First torus knot parameter")->required();
    torus_genus->add_option("-s", s, "Second torus knot parameter")
        ->required();
    torus_genus->add_option("-p", p, "Order of the symmetry")->required();
    torus_genus
        ->add_option("--g4", g4, "Ordinary 4-genus lower bound for T(r,s)")
        ->required();

    CLI::App* census = app.add_subcommand(
        "census", "CSV census of torus knot free periods");
    census->add_option("--max-rs", max_rs, "Largest torus knot parameter")
        ->required();
    census->add_option("--max-p", max_p, "Largest symmetry order")->required();
    census->add_flag("--only-bounding", only_bounding,
                     "Keep only rows that equivariantly bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (lens_classes->parsed()) {
            print_residues(fpk::simple_classes(fpk::LensSpace(p, q)));
        } else if (lens_homeo->parsed()) {
            std::cout << bool_text(fpk::is_homeomorphic(
                             fpk::LensSpace(p, q), fpk::LensSpace(p, q2)))
                      << '\n';
        } else if (diagram_check->parsed()) {
            return check_diagram_file(diagram_path);
        } else if (torus_periods->parsed()) {
            fpk::TorusKnot knot(r, s);
            for (std::int64_t order = 2; order <= max_p; ++order) {
                if (!fpk::has_free_period(knot, order)) continue;
                fpk::FreePeriod period = fpk::free_period(knot, order);
                std::cout << period.p << ' ' << period.q_canonical << ' '
                          << bool_text(fpk::equivariantly_bounds(knot, order))
                          << '\n';
            }
        } else if (torus_bounds->parsed()) {
            std::cout << bool_text(
                             fpk::equivariantly_bounds(fpk::TorusKnot(r, s), p))
                      << '\n';
        } else if (torus_genus->parsed()) {
            fpk::TorusKnot knot(r, s);
            if (!fpk::has_free_period(knot, p)) {
                throw fpk::NoFreePeriod(
                    "T(" + std::to_string(knot.r()) + "," +
                    std::to_string(knot.s()) +
                    ") has no free period of order " + std::to_string(p));
            }
            std::cout << fpk::equivariant_genus_lower_bound(p, g4)
                             .equivariant_lower_bound
                      << '\n';
        } else if (census->parsed()) {
            fpk::write_census_csv(
                std::cout, fpk::generate_census(max_rs, max_p, only_bounding));
        }
    } catch (const fpk::NotAKnot& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainNegative;
    } catch (const fpk::NoFreePeriod& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainNegative;
    } catch (const fpk::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return 0;
}
