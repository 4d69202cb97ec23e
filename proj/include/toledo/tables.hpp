#pragma once

#include "toledo/fusion.hpp"
#include "toledo/rmatrix.hpp"

#include <string>
#include <vector>

namespace toledo {

// Table kernels come in two flavors: an OpenMP loop over independent cells
// and the plain serial loop kept as the reference.
enum class Exec { Serial, Parallel };

// Every cell is an exact string (rationals as p/q).
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

std::vector<SignatureCell> signature_grid(const FrobeniusAlgebra& V, const FrobeniusAlgebra& U, int gmax, int nmax,
                                          int color, Exec exec);

struct Level7Row {
    std::string label;
    Rational sigma[3], tau[3];  // embeddings q1, q2, q3
};
// tau values come from the solved R_1 of each embedding.
std::vector<Level7Row> level7_rows(Exec exec);

Table fibonacci_table(Exec exec = Exec::Parallel);
Table level7_table(Exec exec = Exec::Parallel);
Table r1_table(int l, long exponent);
Table uniformization_table();
Table crosscheck_table(int gmax, int nmax);
Table euler_table();

// Names accepted by reproduce --table, in reproduce --all order.
const std::vector<std::string>& table_names();
std::vector<Table> reproduce_table(const std::string& name);

}  // namespace toledo
