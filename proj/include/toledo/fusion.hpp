#pragma once

#include "toledo/cyclotomic.hpp"
#include "toledo/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toledo {

enum class Family { SU2, SO3 };

std::string family_name(Family f);
Family parse_family(const std::string& s);

// Rational Frobenius algebra of an SU2 or SO3 modular functor at one root
// of unity.  level is l for SO3 (field Q(zeta_l)) and r for SU2 (field
// Q(zeta_4r)).  Vectors are coordinates in e_0..e_{rank-1}.
class FrobeniusAlgebra {
public:
    FrobeniusAlgebra(Family family, int level, Embedding e, std::vector<int> eps, std::vector<int> omega,
                     std::vector<int> basis_signs);

    Family family() const { return family_; }
    int level() const { return level_; }
    int rank() const { return rank_; }
    const Embedding& embedding() const { return emb_; }
    int field_order() const { return emb_.order(); }

    int epsilon(int i) const { return eps_.at(i); }
    const std::vector<int>& epsilons() const { return eps_; }
    int omega03(int i, int j, int k) const { return omega_[(i * rank_ + j) * rank_ + k]; }
    // e_i of this algebra is basis_sign(i) times the e_i of the raw sign formula.
    int basis_sign(int i) const { return signs_.at(i); }

    QVec basis(int i) const;
    QVec unit() const { return basis(0); }
    // Columns are the images of e_j.
    const QMat& left_mult(int i) const { return mult_.at(i); }
    QMat mult_matrix(const QVec& v) const;
    QVec product(const QVec& a, const QVec& b) const;
    QVec power(const QVec& a, long e) const;

    Rational counit(const QVec& x) const { return x.at(0); }
    Rational eta(const QVec& x, const QVec& y) const;
    QMat eta_matrix() const;
    Rational trace_V(const QVec& x) const;
    QMat trace_gram() const;

    const QVec& alpha() const { return alpha_; }
    const QVec& omega_element() const { return Omega_; }

    std::string label(int i) const { return "e" + std::to_string(i); }

private:
    Family family_;
    int level_;
    Embedding emb_;
    int rank_;
    std::vector<int> eps_;
    std::vector<int> omega_;
    std::vector<int> signs_;
    std::vector<QMat> mult_;
    QVec alpha_, Omega_;
};

// Exact theta symbol <I,J,K> over Q(zeta_l) (SO3 colors are even).
CycloNum so3_theta(int l, int I, int J, int K);
bool so3_admissible(int l, int i, int j, int k);

FrobeniusAlgebra so3_algebra(int l, const Embedding& e);
FrobeniusAlgebra su2_algebra(int r, const Embedding& e);
FrobeniusAlgebra build_algebra(Family f, int level, long exponent);

// The variable q (SO3) or A (SU2) as an element of the coefficient field.
CycloNum root_q(Family f, int level);

struct SemisimpleWitness {
    bool semisimple;
    Rational determinant;
};
SemisimpleWitness is_semisimple(const FrobeniusAlgebra& V);

// sigma_{g,n}(v_1..v_n) = tr_V(v_1...v_n alpha^{1-g}).
Rational tft_value(const FrobeniusAlgebra& V, int g, const std::vector<QVec>& colors);
Rational tft_value(const FrobeniusAlgebra& V, int g, const std::vector<int>& colors);

// Embedding exponent for which every epsilon is +1, if any.
std::optional<long> unitary_exponent(Family f, int level);

struct SignatureCell {
    int g = 0, n = 0;
    Rational sigma, dim, p, q;
    bool stable = true;
};

// Cells for 0 <= g <= gmax, 0 <= n <= nmax; all marked points carry color.
std::vector<SignatureCell> signature_table(const FrobeniusAlgebra& V, const FrobeniusAlgebra& unitary, int gmax,
                                           int nmax, int color = 1);
std::vector<SignatureCell> signature_table(const FrobeniusAlgebra& V, int gmax, int nmax, int color = 1);

Rational verlinde_dimension(int l, int g);
double verlinde_sine_formula(int l, int g);

struct GluingReport {
    bool passed = true;
    int checked = 0;
    std::vector<std::string> failures;
};
GluingReport gluing_checks(const FrobeniusAlgebra& V, int samples, unsigned seed = 1, int gmax = 3, int nmax = 4);

struct ConjectureReport {
    std::string number_field;    // "yes", "no", "undetermined"
    std::string maximal_order;   // "yes", "undetermined"
    std::vector<long> same_field_as;  // exponents whose algebra matched every tested prime
    std::vector<Integer> min_poly;
};
ConjectureReport conjecture_report(int l, long exponent, int prime_bound = 400);

}  // namespace toledo
