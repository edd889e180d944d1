// Pull the K3 class back to M_{3,1} and try to write it in terms of the
// Weierstrass divisor, the pointed Brill-Noether class and delta_1, delta_2.
#include <iostream>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

int main() {
    NamedClass k = k3_class();
    const DivisorClass target = pullback_attach(3, 10, k.cls);
    std::cout << "j_3^*(K) = " << target.str() << "\n";

    const ModuliSpace s{3, 1};
    std::vector<NamedClass> gens{{"alpha", weierstrass_class(3), {}}, {"beta", bn1_pointed_class(3), {}}};
    for (int i = 1; i <= 2; ++i) gens.push_back({"c" + std::to_string(i), DivisorClass(s).add_delta(i, 1), {}});

    const CombinationSolve sol = solve_combination(target, gens, {});
    std::cout << "solve: " << status_name(sol.status) << ", rank " << sol.rank << "\n";
    for (const auto& [name, v] : sol.values) std::cout << "  " << name << " = " << to_string(v) << "\n";

    const EffectivityCertificate cert = decompose(target, gens, false);
    std::cout << "nonnegative combination: " << kind_name(cert.kind) << ", verified "
              << std::boolalpha << verify_certificate(cert, target, gens, false) << "\n";
}
