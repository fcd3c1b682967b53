// Factorize a pumped word over u = ab, reduce it with the canonical map and
// show where positions outside the runs land.

#include <iostream>

#include "palred/palred.hpp"

int main() {
    using namespace palred;
    const Word u = Word::from_text("ab");
    const WordSource src = pumped_word({Word::from_text("cccc"), Word::from_text("dc")}, u,
                                       parity_exponents(power(4, 2), power(6, 2)));
    const Word w = src.prefix(40);
    const Factorization f = factorize(w, u);
    const ReductionPolicy policy = ReductionPolicy::canonical();
    const Word reduced = reduce(f, policy);
    const PositionMaps maps = position_maps(f, policy);

    std::cout << "w       " << w.text() << "\n";
    for (const auto& pc : f.pieces)
        std::cout << "  piece " << pc.w.text() << " (" << pc.z.text() << ")^" << pc.d.str() << "\n";
    std::cout << "trailing " << f.trailing.text() << "\n";
    std::cout << "reduced " << reduced.text() << "\n";
    for (Pos i : {1, 5, 12, 20})
        if (maps.in_domain(i)) std::cout << "rpo(" << i << ") = " << maps.rpo(i) << "\n";

    std::cout << "PL(w) = " << pl_online(w.letters()) << ", PL(reduced) = " << pl_online(reduced.letters()) << "\n";
    std::cout << "power bound holds: " << std::boolalpha << power_bound_check(reduced, u, 3) << "\n";
}
