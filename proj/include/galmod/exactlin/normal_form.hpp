#pragma once

#include <optional>

#include "galmod/exactlin/matrix.hpp"

namespace galmod {

// U * A * V = D with U, V unimodular and d_1 | d_2 | ... on the diagonal.
struct SmithForm {
  IntMatrix U, D, V;
  IntMatrix U_inv;  // inverse of U
  std::size_t rank = 0;
  IntVector diagonal() const;  // first min(rows, cols) diagonal entries of D
};

SmithForm snf(const IntMatrix& a);

// Column Hermite form of the lattice spanned by the columns of a.
// Result has full column rank; pivot rows strictly increase, pivots are
// positive and entries left of a pivot lie in [0, pivot).
IntMatrix hermite_columns(const IntMatrix& a);

// Reduced row echelon form over Q.
struct Rref {
  RatMatrix R;                     // rank x cols
  std::vector<std::size_t> pivots; // pivot column per row
};
Rref rref(const RatMatrix& a);
std::size_t rank(const RatMatrix& a);
std::size_t rank(const IntMatrix& a);

// Basis (as columns) of {x in Q^n : a x = 0}.
RatMatrix rational_kernel(const RatMatrix& a);

// Hermite basis (columns) of {x in Z^n : a x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);
IntMatrix integer_kernel(const RatMatrix& a);

// Some x in Q^n with a x = b.
std::optional<RatVector> rational_solve(const RatMatrix& a, const RatVector& b);
// Some x in Z^n with a x = b.
std::optional<IntVector> integer_solve(const IntMatrix& a, const IntVector& b);

// Left inverse of a full column rank matrix.
RatMatrix left_inverse(const RatMatrix& a);

// Rows spanning the annihilator of the column span of a (so that
// the column span is the kernel of the result).
RatMatrix span_equations(const RatMatrix& a);

Int floor_div(const Int& a, const Int& b);
Int mod_floor(const Int& a, const Int& b);
// Fractional part in [0, 1).
Rat frac(const Rat& q);
Rat floor_rat(const Rat& q);

}  // namespace galmod
