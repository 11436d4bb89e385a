// Walks one singularity through every module and prints what it finds.
// Usage: tour [n q]   (default 11 7)

#include <cstdlib>
#include <iostream>

#include "cqs/deform.hpp"
#include "cqs/gfan.hpp"
#include "cqs/invariant_ring.hpp"
#include "cqs/mckay.hpp"
#include "cqs/reconstruct.hpp"
#include "cqs/toric.hpp"

int main(int argc, char** argv) {
    using namespace cqs;
    try {
        auto s = SingularityInput::make(argc > 2 ? std::atoll(argv[1]) : 11, argc > 2 ? std::atoll(argv[2]) : 7);
        std::cout << "1/" << s.n << "(1," << s.q << ")\n";
        std::cout << "  n/q = " << fraction(s).str() << ", n/(n-q) = " << dual_fraction(s).str() << '\n';

        std::cout << "  invariants:";
        for (auto& g : generators(s)) std::cout << ' ' << format_monomial_xy(g.i, g.j);
        std::cout << '\n';

        auto fan = resolution_fan(s);
        std::cout << "  resolution rays (x1/" << fan.denominator << "):";
        for (auto& r : fan.interior()) std::cout << " (" << r.x << ',' << r.y << ')';
        std::cout << '\n';

        std::cout << "  special representations:";
        for (auto k : special_reps(s)) std::cout << " rho_" << k;
        std::cout << "\n  G-clusters:";
        for (auto& c : g_clusters(s)) std::cout << ' ' << format_ideal(c);
        std::cout << '\n';

        auto gf = groebner_fan(s);
        std::cout << "  Groebner fan has " << gf.cones.size() << " cones, same as toric fan: "
                  << (fans_equal(gf.fan, fan) ? "yes" : "no") << '\n';
        std::cout << "  dim T^1 = " << dim_t1(s) << '\n';

        auto rq = reconstruction_quiver(s);
        std::cout << "  reconstruction quiver: " << rq.quiver.vertices.size() << " vertices, "
                  << rq.quiver.arrows.size() << " arrows, relations " << rq.status << '\n';
        for (auto& r : rq.relations) std::cout << "    " << format_relation(rq.quiver, r) << '\n';
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
