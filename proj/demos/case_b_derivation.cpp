// Symbolic derivation of the weak lower bound for b_10 on M_g, g >= 20.
#include <iostream>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

int main() {
    const CaseBDerivation d = derive_case_b_constants();
    std::cout << "lambda coefficient:  " << d.lambda_coeff.str() << "\n";
    std::cout << "delta_0 coefficient: " << d.delta0_coeff.str() << "\n";
    std::cout << "m >= " << d.m_floor.str() << "\n";
    std::cout << "after eliminating m: " << d.eliminated.str() << " >= 0\n";
    std::cout << "b_10 >= " << to_string(d.coef_b0) << " b_0 - " << to_string(-d.coef_a) << " a"
              << "  (" << to_decimal(d.coef_b0, 6) << ", " << to_decimal(-d.coef_a, 6) << ")\n";
    for (int i = 1; i <= 11; ++i)
        std::cout << "  threshold i=" << i << ": " << to_string(corollary_threshold(i)) << "\n";
}
