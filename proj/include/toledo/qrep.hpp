#pragma once

#include "toledo/cyclotomic.hpp"
#include "toledo/hermitian.hpp"
#include "toledo/matrix.hpp"

#include <vector>

namespace toledo {

// Sphere with four points colored (w, w, e_i, e_i), w = e_{r-1}.
struct FourPointData {
    int l = 0, i = 0;
    Embedding e;
    CycloNum f0_norm, f1_norm, g0_norm, g1_norm;
    CycloNum gamma_eigen[2], delta_eigen[2];
};

FourPointData four_point_data(int l, const Embedding& e, int i);
Rational four_point_toledo(int l, const Embedding& e, int i, int j);

// Torus with one point colored e_i, in the basis psi_j of the admissible window.
struct PuncturedTorusRep {
    int l = 0, i = 0;
    Embedding e;
    std::vector<int> window;  // the j's with i <= 2j < 2r - i
    std::vector<CycloNum> norms;
    CMat h, Cg, Cd, Tg, Td;
    int dim() const { return static_cast<int>(window.size()); }
};

PuncturedTorusRep punctured_torus_rep(int l, const Embedding& e, int i);
Rational tau_11(int l, const Embedding& e, int i);
Rational tau_11(const PuncturedTorusRep& T);

}  // namespace toledo
