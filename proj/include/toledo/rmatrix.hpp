#pragma once

#include "toledo/fusion.hpp"
#include "toledo/mgnclasses.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace toledo {

// R_1 = M_{r1} + R', columns are images of e_j.  R' is trace-orthogonal to
// every multiplication operator.
struct R1Matrix {
    QMat R;
    QVec r1;
    QMat Rprime;
};

struct R1Invariants {
    bool self_adjoint = false;   // eta R symmetric
    bool orthogonal = false;     // tr(R' M_v) = 0 for all v
    bool decomposition = false;  // R = M_{r1} + R'
    bool denominators = false;   // every denominator divides the bound
    Integer bound;
    bool all() const { return self_adjoint && orthogonal && decomposition && denominators; }
};

// 2 * 3 * l * Delta_V^2 with Delta_V the discriminant of the trace form.
Integer r1_denominator_bound(const FrobeniusAlgebra& V);
R1Invariants check_r1(const FrobeniusAlgebra& V, const R1Matrix& R);

Rational tau_from_r1_04(const FrobeniusAlgebra& V, const QMat& R, const std::vector<QVec>& v);
Rational tau_from_r1_11(const FrobeniusAlgebra& V, const QMat& R, const QVec& v);

// Input tables: tau04_pivot[i] = tau_{0,4}(w, w, e_i, e_i) with w = e_{r-1},
// tau11[i] = tau_{1,1}(e_i).
struct R1Input {
    std::vector<Rational> tau04_pivot, tau11;
};
R1Input r1_input(int l, long exponent);

class R1SolveError : public std::runtime_error {
public:
    R1SolveError(const std::string& what, std::vector<Rational> residuals)
        : std::runtime_error(what), residuals_(std::move(residuals))
    {
    }
    const std::vector<Rational>& residuals() const { return residuals_; }

private:
    std::vector<Rational> residuals_;
};

// Krylov test: 1, w, .., w^{r-1} independent, i.e. M_w has simple spectrum.
bool pivot_has_simple_spectrum(const FrobeniusAlgebra& V);

R1Matrix solve_r1(const FrobeniusAlgebra& V, const R1Input& in);
R1Matrix solve_r1(int l, long exponent);

// r_{mu nu} = R[mu][nu] eps_nu, the entries of R eta^{-1}.
QMat r_entries(const FrobeniusAlgebra& V, const QMat& R);

// tau_{g,n}(colors) in the basis psi_i, kappa_1, delta_irr, delta_{a,A}.
H2Class degree2_class(const FrobeniusAlgebra& V, const QMat& R, int g, int n, const std::vector<QVec>& colors);

// Level 5, q -> exp(2 pi i/5), every point colored t = e_1.  The closed side
// is degree2_class; the relation side is a lambda_1 + c sum psi + sum b_i delta_i
// with the coefficients obtained from the relation values (mu, C2 relation).
struct CrosscheckRow {
    int g = 0, n = 0;
    Rational sigma;
    Rational kt_closed, psi_closed, irr_closed;  // kappa~ basis
    Rational lambda_pipeline, psi_pipeline, irr_pipeline;
    Rational lambda_literal;  // (92/15) sigma_{g,n} + (4/3) sigma_{g-1,n}
    Rational lambda_second;   // -(46/45) sigma_{g,n} - (4/9) sigma_{g,n+1}
    bool closed_formula_match = false;  // degree2_class equals a, b, c of the level-5 formulas
    bool class_match = false;           // both sides agree as classes (lambda basis)
    bool literal_match = false;
    bool second_match = false;
};
std::vector<CrosscheckRow> closed_formula_crosscheck(int gmax, int nmax);

}  // namespace toledo
