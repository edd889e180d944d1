// LP margin for the canonical class of M_{10,n} as n grows.
#include <iostream>

#include <modulislope/modulislope.hpp>

using namespace modulislope;

int main() {
    for (int n = 10; n <= 13; ++n) {
        const GeneralTypeReport r = general_type_certificate(n, 12);
        std::cout << "n=" << n << " margin=" << to_string(r.margin) << " alpha=" << to_string(r.alpha)
                  << " beta=" << to_string(r.beta) << " a=" << to_string(r.a) << " b_irr=" << to_string(r.b_irr)
                  << " rows=" << r.rows << (r.certificate_verified ? " verified" : " UNVERIFIED") << "\n";
    }
}
