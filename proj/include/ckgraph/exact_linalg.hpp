#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ckgraph {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntMatrix transposed() const;
    IntMatrix submatrix(std::span<const std::size_t> row_idx,
                        std::span<const std::size_t> col_idx) const;

    bool is_zero() const;
    bool is_diagonal() const;
    bool is_square() const { return rows_ == cols_; }

    // Elementary operations. All of them are unimodular except scaling,
    // which is only offered as a sign flip.
    void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntVector operator*(const IntMatrix& a, const IntVector& x);

std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

/// One elementary unimodular operation, as recorded in reduction logs.
struct ElementaryOp {
    enum class Kind { AddRow, AddCol, SwapRows, SwapCols, NegateRow, NegateCol };
    Kind kind;
    std::size_t target;
    std::size_t source = 0;  // unused for negations
    Integer factor = 1;      // only meaningful for AddRow/AddCol

    bool is_row_op() const {
        return kind == Kind::AddRow || kind == Kind::SwapRows || kind == Kind::NegateRow;
    }

    static ElementaryOp add_row(std::size_t target, std::size_t source, Integer factor);
    static ElementaryOp add_col(std::size_t target, std::size_t source, Integer factor);
    static ElementaryOp swap_rows(std::size_t a, std::size_t b);
    static ElementaryOp swap_cols(std::size_t a, std::size_t b);
    static ElementaryOp negate_row(std::size_t r);
    static ElementaryOp negate_col(std::size_t c);
};

void apply(const ElementaryOp& op, IntMatrix& m);
/// Applies a row operation to a column vector; column operations are ignored.
void apply_row_op(const ElementaryOp& op, IntVector& v);
std::string to_string(const ElementaryOp& op);

/// X·M·Y = D with X, Y unimodular and D in canonical Smith form.
struct SmithDecomposition {
    IntMatrix X;
    IntMatrix D;
    IntMatrix Y;
    std::vector<ElementaryOp> ops;  // filled only when requested

    /// Diagonal entries d_1 | d_2 | ... followed by zeros, length min(rows, cols).
    IntVector diagonal() const;
    std::size_t rank() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& m, bool record_ops = false);

/// Canonical Smith diagonal of diag(entries): sorted divisibility chain,
/// positive entries first, zeros last.
IntVector canonical_smith_diagonal(const IntVector& entries);

struct HermiteForm {
    IntMatrix H;
    IntMatrix U;  // U·M = H
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot). Zero rows are moved to the bottom.
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Nonzero rows of the Hermite form: the canonical basis of the row lattice.
IntMatrix lattice_basis(const IntMatrix& rows);

std::size_t matrix_rank(const IntMatrix& m);

/// Z-basis of {x : M·x = 0}, one vector per row, in Hermite normal form.
IntMatrix kernel_basis(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank ⊕ ⊕ Z/d_i.
struct AbelianGroup {
    std::size_t free_rank = 0;
    IntVector torsion;  // invariant factors, each >= 2, d_i | d_{i+1}

    /// Builds the canonical form from arbitrary cyclic factors, where a
    /// factor 0 contributes a free summand and a factor ±1 vanishes.
    static AbelianGroup from_cyclic_factors(std::size_t free_rank, const IntVector& factors);

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

std::string to_string(const AbelianGroup& g);

/// Z^rows / M·Z^cols.
AbelianGroup cokernel(const IntMatrix& m);

struct ScalarSolution {
    Integer lambda;
    IntVector witness;  // M·witness = lambda·b
};

/// Smallest λ > 0 for which M·x = λ·b has an integral solution.
std::optional<ScalarSolution> solve_min_scalar(const IntMatrix& m, const IntVector& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Univariate polynomial over Z; coefficient index equals degree.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(IntVector coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, std::size_t degree);

    /// -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const IntVector& coefficients() const { return coeffs_; }
    Integer coefficient(std::size_t k) const;
    Integer leading_coefficient() const;

    Integer evaluate(const Integer& u) const;
    IntPolynomial pow(std::size_t e) const;

    /// Quotient by (1 - u) if the division is exact.
    std::optional<IntPolynomial> divide_by_one_minus_u() const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

private:
    void trim();
    IntVector coeffs_;
};

std::string to_string(const IntPolynomial& p);

using PolyMatrix = std::vector<std::vector<IntPolynomial>>;

/// Exact determinant of a square polynomial matrix, by evaluation at
/// u = 0, 1, -1, 2, -2, ... and Newton interpolation.
IntPolynomial poly_matrix_det(const PolyMatrix& p);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace ckgraph
