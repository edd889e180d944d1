// Upper bounds for the slope and the gap to the boundary inequalities, 3 <= g <= 23.
#include <iomanip>
#include <iostream>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

int main() {
    std::cout << std::left << std::setw(4) << "g" << std::setw(14) << "bound" << std::setw(12) << "decimal"
              << std::setw(12) << "eps" << "margin\n";
    for (int g = 3; g <= 23; ++g) {
        const Rational bound = slope_upper_bound(g);
        std::cout << std::setw(4) << g << std::setw(14) << to_string(bound) << std::setw(12) << to_decimal(bound, 5)
                  << std::setw(12) << to_string(max_epsilon(g)) << to_string(pipeline_epsilon(g)) << "\n";
    }
    std::cout << "\nslope of the K3 class: " << slope(k3_class()).str() << " vs 78/11 for BN_10\n";
}
