#pragma once

#include "pencil/binary_form.hpp"
#include "pencil/combinant.hpp"
#include "pencil/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace pencil {

/// Index pair (i, j) of the term (C_{2i-1}, C_{2j-1})_{2(r-i-j+1)}.
struct TermIndex {
    int i;
    int j;

    friend auto operator<=>(const TermIndex&, const TermIndex&) = default;
};

/// All (i, j) with 1 <= i <= j <= r and i + j <= r + 1, ordered by j then i.
std::vector<TermIndex> syzygy_index_set(int r);

/// Transvectant order 2(r-i-j+1) of the (i, j) term.
inline int term_transvectant_order(int r, TermIndex ij) { return 2 * (r - ij.i - ij.j + 1); }

/// Throws PreconditionError unless 3 <= r <= floor((d+1)/2).
void require_syzygy_range(int d, int r);

/// Additionally 1 <= i, j <= r and i + j <= r + 1 (i > j allowed).
void require_term_range(int d, int r, int i, int j);

/// Closed-form eigenvalue theta_{i,j} for weight 2r, symmetric in (i, j):
///
///   theta = [ (i,j) in {(1,r),(r,1)} ] - 8 N1/N2
///
///   N1 = (2di + 2dj - dr - 2i^2 - 2j^2 - 2d + 3i + 3j - 2) d!(d-1)!(2r-1)!(2d-4i+3)!(2d-4j+3)!
///   N2 = (2i-1)!(2j-1)!(d-2i+1)!(d-2j+1)!(2d-2i+2)!(2d-2j+2)!(2r-2i-2j+2)!
///
/// Valid for 3 <= r <= floor((d+1)/2), 1 <= i, j <= r, i + j <= r + 1.
Rational theta(int d, int r, int i, int j);

/// Coefficients alpha_{i,j} = eps_{i,j} theta_{i,j} (eps = 2 off the diagonal)
/// of the weight-2r syzygy sum alpha_{i,j} (C_{2i-1}, C_{2j-1})_{2(r-i-j+1)} = 0.
struct SyzygyTable {
    int d = 0;
    int r = 0;
    std::map<TermIndex, Rational> alphas;

    const Rational& alpha(int i, int j) const { return alphas.at(TermIndex{i, j}); }
};

SyzygyTable syzygy_table(int d, int r);

/// The syzygy evaluated on the pencil's combinants; identically zero, order 4(d-r).
BinaryForm evaluate_syzygy(const Pencil& pencil, int r);

/// C_{2r-1} rebuilt from C_1, ..., C_{2r-3} by dividing the remaining syzygy
/// terms by alpha_{1,r} C_1.
BinaryForm recover_combinant(const Pencil& pencil, int r);

/// Same, trusting the caller's sequence; only entries 1..r-1 are read.
BinaryForm recover_combinant(const CombinantSequence& sequence, int r);

/// Gamma(r,d) = 4(dr-2r^2+3r-1) (d-1)!(2d-4r+3)! / ((d-2r+1)!(2d-2r+2)!),
/// for r >= 3 and d >= 2r-1. Equals 1 - theta_{1,r}.
Rational gamma(int r, int d);

/// Exact witnesses that Gamma(r,d) < 1.
struct PositivityCertificate {
    int r = 0;
    int d = 0;
    Rational gamma;
    Rational boundary_value;  // Gamma(r, 2r-1)
    Rational dn_difference;   // D - N with Gamma(r,d+1)/Gamma(r,d) = N/D
    Rational dn_factored;     // (r-1)(r-2)(2r-1)(d-2r+3)
};

/// Throws FormulaViolation if any witness disagrees.
PositivityCertificate positivity_certificate(int r, int d);

/// Multiplicity of S_{4(d-r)} in the fourth exterior power of S_d, i.e. the
/// dimension of the space of weight-2r quadratic syzygies.
std::int64_t syzygy_space_dim(int d, int r);

} // namespace pencil
