#include "ckgraph/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ckgraph {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx,
                               std::span<const std::size_t> col_idx) const {
    IntMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (r != c && (*this)(r, c) != 0) return false;
    return true;
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    assert(target != source);
    if (factor == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
    assert(target != source);
    if (factor == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    IntMatrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) + b(i, j);
    return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    IntMatrix s(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) s(i, j) = a(i, j) - b(i, j);
    return s;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVector y(a.rows(), Integer(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
    return y;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
    os << ']';
    return os.str();
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? ", " : "") << to_string(m.row(r));
    os << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// Elementary operations

ElementaryOp ElementaryOp::add_row(std::size_t target, std::size_t source, Integer factor) {
    return {Kind::AddRow, target, source, std::move(factor)};
}
ElementaryOp ElementaryOp::add_col(std::size_t target, std::size_t source, Integer factor) {
    return {Kind::AddCol, target, source, std::move(factor)};
}
ElementaryOp ElementaryOp::swap_rows(std::size_t a, std::size_t b) {
    return {Kind::SwapRows, a, b, Integer(1)};
}
ElementaryOp ElementaryOp::swap_cols(std::size_t a, std::size_t b) {
    return {Kind::SwapCols, a, b, Integer(1)};
}
ElementaryOp ElementaryOp::negate_row(std::size_t r) { return {Kind::NegateRow, r, 0, Integer(-1)}; }
ElementaryOp ElementaryOp::negate_col(std::size_t c) { return {Kind::NegateCol, c, 0, Integer(-1)}; }

void apply(const ElementaryOp& op, IntMatrix& m) {
    using K = ElementaryOp::Kind;
    switch (op.kind) {
        case K::AddRow: m.add_row_multiple(op.target, op.source, op.factor); break;
        case K::AddCol: m.add_col_multiple(op.target, op.source, op.factor); break;
        case K::SwapRows: m.swap_rows(op.target, op.source); break;
        case K::SwapCols: m.swap_cols(op.target, op.source); break;
        case K::NegateRow: m.negate_row(op.target); break;
        case K::NegateCol: m.negate_col(op.target); break;
    }
}

void apply_row_op(const ElementaryOp& op, IntVector& v) {
    using K = ElementaryOp::Kind;
    switch (op.kind) {
        case K::AddRow: v[op.target] += op.factor * v[op.source]; break;
        case K::SwapRows: std::swap(v[op.target], v[op.source]); break;
        case K::NegateRow: v[op.target] = -v[op.target]; break;
        default: break;
    }
}

std::string to_string(const ElementaryOp& op) {
    using K = ElementaryOp::Kind;
    std::ostringstream os;
    switch (op.kind) {
        case K::AddRow:
            os << "row " << op.target << " += " << op.factor.get_str() << " * row " << op.source;
            break;
        case K::AddCol:
            os << "col " << op.target << " += " << op.factor.get_str() << " * col " << op.source;
            break;
        case K::SwapRows: os << "swap rows " << op.target << ' ' << op.source; break;
        case K::SwapCols: os << "swap cols " << op.target << ' ' << op.source; break;
        case K::NegateRow: os << "negate row " << op.target; break;
        case K::NegateCol: os << "negate col " << op.target; break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

// Applies an operation to the working matrix and mirrors it on the
// transformation matrices: row ops act on X from the left, column ops on Y
// from the right, so X·M·Y = D is maintained throughout.
class SmithWorkspace {
public:
    SmithWorkspace(const IntMatrix& m, bool record)
        : d(m), x(IntMatrix::identity(m.rows())), y(IntMatrix::identity(m.cols())),
          record_(record) {}

    void run(const ElementaryOp& op) {
        apply(op, d);
        if (op.is_row_op())
            apply(op, x);
        else
            apply(op, y);
        if (record_) ops.push_back(op);
    }

    IntMatrix d, x, y;
    std::vector<ElementaryOp> ops;

private:
    bool record_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m, bool record_ops) {
    SmithWorkspace w(m, record_ops);
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t diag = std::min(rows, cols);

    bool exhausted = false;
    for (std::size_t t = 0; t < diag && !exhausted; ++t) {
        for (;;) {
            // Pivot: nonzero entry of minimal absolute value in the trailing block.
            std::size_t pr = rows, pc = cols;
            Integer best;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Integer& v = w.d(i, j);
                    if (v != 0 && (pr == rows || abs(v) < best)) {
                        best = abs(v);
                        pr = i;
                        pc = j;
                    }
                }
            if (pr == rows) {  // trailing block is zero
                exhausted = true;
                break;
            }

            if (pr != t) w.run(ElementaryOp::swap_rows(t, pr));
            if (pc != t) w.run(ElementaryOp::swap_cols(t, pc));

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (w.d(i, t) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), w.d(i, t).get_mpz_t(), w.d(t, t).get_mpz_t());
                if (q != 0) w.run(ElementaryOp::add_row(i, t, -q));
                if (w.d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (w.d(t, j) == 0) continue;
                Integer q;
                mpz_tdiv_q(q.get_mpz_t(), w.d(t, j).get_mpz_t(), w.d(t, t).get_mpz_t());
                if (q != 0) w.run(ElementaryOp::add_col(j, t, -q));
                if (w.d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility of the trailing block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (!mpz_divisible_p(w.d(i, j).get_mpz_t(), w.d(t, t).get_mpz_t())) {
                        w.run(ElementaryOp::add_row(t, i, Integer(1)));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (!exhausted && w.d(t, t) < 0) w.run(ElementaryOp::negate_row(t));
    }
    return SmithDecomposition{std::move(w.x), std::move(w.d), std::move(w.y), std::move(w.ops)};
}

IntVector SmithDecomposition::diagonal() const {
    IntVector out;
    const std::size_t n = std::min(D.rows(), D.cols());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
    return out;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    for (const auto& d : diagonal())
        if (d != 0) ++r;
    return r;
}

IntVector canonical_smith_diagonal(const IntVector& entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return smith_normal_form(m).diagonal();
}

// ---------------------------------------------------------------------------
// Hermite normal form

HermiteForm hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    const std::size_t rows = m.rows(), cols = m.cols();
    auto row_add = [&](std::size_t t, std::size_t s, const Integer& f) {
        h.add_row_multiple(t, s, f);
        u.add_row_multiple(t, s, f);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        h.swap_rows(a, b);
        u.swap_rows(a, b);
    };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Euclid on column c among rows r.., always pivoting on the smallest entry.
        for (;;) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (h(i, c) != 0 && (p == rows || abs(h(i, c)) < abs(h(p, c)))) p = i;
            if (p == rows) break;
            row_swap(r, p);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h(i, c) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
                row_add(i, r, -q);
                if (h(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (h(r, c) == 0) continue;
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            if (q != 0) row_add(i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

IntMatrix lattice_basis(const IntMatrix& rows) {
    const IntMatrix h = hermite_normal_form(rows).H;
    std::vector<IntVector> nonzero;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        IntVector v = h.row(r);
        if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }))
            nonzero.push_back(std::move(v));
    }
    return IntMatrix::from_rows(nonzero, rows.cols());
}

std::size_t matrix_rank(const IntMatrix& m) { return lattice_basis(m).rows(); }

IntMatrix kernel_basis(const IntMatrix& m) {
    // U·Mᵀ = H; the rows of U opposite the zero rows of H span ker M over Z.
    const HermiteForm hf = hermite_normal_form(m.transposed());
    const std::size_t n = m.cols();
    std::size_t rank = 0;
    for (std::size_t r = 0; r < hf.H.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < hf.H.cols() && zero; ++c) zero = hf.H(r, c) == 0;
        if (!zero) rank = r + 1;
    }
    std::vector<IntVector> basis;
    for (std::size_t r = rank; r < n; ++r) basis.push_back(hf.U.row(r));
    return lattice_basis(IntMatrix::from_rows(basis, n));
}

// ---------------------------------------------------------------------------
// Abelian groups

AbelianGroup AbelianGroup::from_cyclic_factors(std::size_t free_rank, const IntVector& factors) {
    AbelianGroup g;
    g.free_rank = free_rank;
    for (const Integer& d : canonical_smith_diagonal(factors)) {
        if (d == 0)
            ++g.free_rank;
        else if (d != 1)
            g.torsion.push_back(d);
    }
    return g;
}

std::string to_string(const AbelianGroup& g) {
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << "Z^" << g.free_rank;
        first = false;
    }
    for (const Integer& d : g.torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
    const SmithDecomposition s = smith_normal_form(m);
    AbelianGroup g;
    std::size_t nonzero = 0;
    for (const Integer& d : s.diagonal()) {
        if (d == 0) continue;
        ++nonzero;
        if (d != 1) g.torsion.push_back(d);
    }
    g.free_rank = m.rows() - nonzero;
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

std::optional<ScalarSolution> solve_min_scalar(const IntMatrix& m, const IntVector& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length mismatch");
    const SmithDecomposition s = smith_normal_form(m);
    const IntVector c = s.X * b;
    const std::size_t diag = std::min(m.rows(), m.cols());

    Integer lambda = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const bool pivot = i < diag && s.D(i, i) != 0;
        if (!pivot) {
            if (c[i] != 0) return std::nullopt;
            continue;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), s.D(i, i).get_mpz_t(), c[i].get_mpz_t());
        lambda = lcm(lambda, Integer(s.D(i, i) / g));
    }

    IntVector y(m.cols(), Integer(0));
    for (std::size_t i = 0; i < diag; ++i)
        if (s.D(i, i) != 0) y[i] = lambda * c[i] / s.D(i, i);
    ScalarSolution sol{lambda, s.Y * y};

    IntVector scaled = b;
    for (auto& v : scaled) v *= lambda;
    if (m * sol.witness != scaled) throw std::logic_error("solve_min_scalar: witness check failed");
    return sol;
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = v;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Polynomials

IntPolynomial::IntPolynomial(IntVector coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
    for (long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(IntVector{c}); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
    IntVector v(degree + 1, Integer(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Integer(0) : coeffs_.back();
}

Integer IntPolynomial::evaluate(const Integer& u) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
    return acc;
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
    IntPolynomial result{1};
    for (std::size_t i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::optional<IntPolynomial> IntPolynomial::divide_by_one_minus_u() const {
    if (is_zero()) return IntPolynomial{};
    // p = (1 - u) q  ⇔  q_k = p_0 + ... + p_k, with p(1) = 0 required.
    if (evaluate(Integer(1)) != 0) return std::nullopt;
    IntVector q;
    Integer running = 0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
        running += coeffs_[k];
        q.push_back(running);
    }
    return IntPolynomial(std::move(q));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntVector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    IntVector c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    IntVector c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        const Integer& c = p.coefficients()[k];
        if (c == 0) continue;
        const Integer mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k >= 1) os << 'u';
        if (k >= 2) os << '^' << k;
        first = false;
    }
    return os.str();
}

IntPolynomial poly_matrix_det(const PolyMatrix& p) {
    const std::size_t n = p.size();
    for (const auto& row : p)
        if (row.size() != n) throw std::invalid_argument("polynomial matrix must be square");
    if (n == 0) return IntPolynomial{1};

    std::ptrdiff_t max_deg = 0;
    for (const auto& row : p)
        for (const auto& e : row) max_deg = std::max(max_deg, e.degree());
    const std::size_t bound = n * static_cast<std::size_t>(max_deg);

    // Points 0, 1, -1, 2, -2, ...
    std::vector<Integer> xs;
    std::vector<mpq_class> ys;
    for (std::size_t k = 0; xs.size() < bound + 1; ++k) {
        const long mag = static_cast<long>((k + 1) / 2);
        const Integer u = (k % 2 == 1) ? Integer(mag) : Integer(-mag);
        IntMatrix at(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) at(i, j) = p[i][j].evaluate(u);
        xs.push_back(u);
        ys.emplace_back(determinant(at));
    }

    // Newton divided differences, then expansion of the Newton form.
    const std::size_t pts = xs.size();
    std::vector<mpq_class> coef = ys;
    for (std::size_t level = 1; level < pts; ++level)
        for (std::size_t i = pts - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / mpq_class(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    std::vector<mpq_class> poly(1, coef[pts - 1]);
    for (std::size_t k = pts - 1; k-- > 0;) {
        // poly = poly * (u - xs[k]) + coef[k]
        std::vector<mpq_class> next(poly.size() + 1, mpq_class(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= poly[i] * mpq_class(xs[k]);
        }
        next[0] += coef[k];
        poly = std::move(next);
    }
    IntVector out;
    out.reserve(poly.size());
    for (auto& c : poly) {
        c.canonicalize();
        if (c.get_den() != 1) throw std::logic_error("poly_matrix_det: non-integral interpolant");
        out.push_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

}  // namespace ckgraph
