#ifndef MUC_SCALAR_HPP
#define MUC_SCALAR_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace muc {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);
// Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk or q = 0.
Rational parse_rational(const std::string& text);

/*
 * Element of Q[i]. Both components are canonical mpq values.
 */
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(long r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {
        re.canonicalize();
        im.canonicalize();
    }

    static GaussianRational i_unit() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_one() const { return re == 1 && sgn(im) == 0; }

    GaussianRational operator+(const GaussianRational& b) const;
    GaussianRational operator-(const GaussianRational& b) const;
    GaussianRational operator-() const;
    GaussianRational operator*(const GaussianRational& b) const;
    GaussianRational& operator+=(const GaussianRational& b);
    GaussianRational& operator-=(const GaussianRational& b);
    bool operator==(const GaussianRational& b) const { return re == b.re && im == b.im; }
    bool operator!=(const GaussianRational& b) const { return !(*this == b); }

    std::string to_string() const;
};

using GR = GaussianRational;

GR gr_add(const GR& a, const GR& b);
GR gr_mul(const GR& a, const GR& b);
GR gr_neg(const GR& a);
// nullopt when a = 0
std::optional<GR> gr_inv(const GR& a);
GR gr_conj(const GR& a);
// |a|^2 as a rational
Rational gr_norm2(const GR& a);

nlohmann::json gr_to_json(const GR& a);
GR gr_from_json(const nlohmann::json& j);

/*
 * Row-major dense matrix over Q[i]. Treated as a value; operations
 * never mutate their arguments.
 */
class DenseMatrix {
public:
    DenseMatrix() : rows_(0), cols_(0) {}
    DenseMatrix(std::size_t rows, std::size_t cols);
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<GR> entries);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    // rows given as nested initializer data, mostly for tests
    static DenseMatrix from_rows(const std::vector<std::vector<GR>>& rows);
    static DenseMatrix column(const std::vector<GR>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const GR& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    GR& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<GR>& entries() const { return entries_; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool operator==(const DenseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
    }
    bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

    DenseMatrix scaled(const GR& k) const;
    DenseMatrix operator+(const DenseMatrix& o) const;
    DenseMatrix operator-(const DenseMatrix& o) const;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GR> entries_;
};

class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_kron(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix mat_transpose(const DenseMatrix& a);
DenseMatrix mat_entrywise_conj(const DenseMatrix& a);
DenseMatrix mat_conj_transpose(const DenseMatrix& a);
// Throws DimensionError when not square; nullopt when singular.
std::optional<DenseMatrix> mat_inverse(const DenseMatrix& a);

struct RrefResult {
    DenseMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};
RrefResult mat_rref(const DenseMatrix& a);
std::size_t mat_rank(const DenseMatrix& a);
// Basis of {x : a x = 0}: one column per free column of the RREF, in
// ascending order, with a one in that free coordinate.
std::vector<DenseMatrix> mat_nullspace(const DenseMatrix& a);
// Columns side by side; an empty list gives a (rows x 0) matrix.
DenseMatrix mat_hconcat(const std::vector<DenseMatrix>& cols, std::size_t rows);
// Solve a x = b for one x; nullopt when b is outside the column space.
// When a has independent columns the answer is unique.
std::optional<DenseMatrix> mat_solve(const DenseMatrix& a, const DenseMatrix& b);

nlohmann::json mat_to_json(const DenseMatrix& m);
DenseMatrix mat_from_json(const nlohmann::json& j);

}  // namespace muc

#endif
