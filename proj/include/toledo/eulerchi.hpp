#pragma once

#include "toledo/cyclotomic.hpp"

#include <string>
#include <vector>

namespace toledo {

// Nodal-count polynomial chi_bar_{g,n}(kappa), coefficients low degree first.
struct ChiPoly {
    int g = 0, n = 0;
    std::vector<Rational> coeffs;
    Rational operator()(const Rational& kappa) const;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    std::string to_string() const;
};

Rational bernoulli(int k);
// Orbifold Euler characteristic of the open moduli space M_{g,n}.
Rational harer_zagier(int g, int n);
// Memoized; d/dkappa chi_bar_{g,n} = chi_bar_{g-1,n+2}/2
//   + (1/2) sum over g1 + g2 = g and ordered subset splittings I u J = [n]
//     of chi_bar_{g1,|I|+1} chi_bar_{g2,|J|+1} (both sides stable).
ChiPoly chi_bar(int g, int n);
// Euler characteristic of the l-twisted compactification.
Rational chi_twisted(int g, int n, int l);

}  // namespace toledo
