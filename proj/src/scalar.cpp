#include "muc/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace muc {

std::string rational_to_string(const Rational& q) {
    return q.get_str(10);
}

Rational parse_rational(const std::string& text) {
    std::string t;
    for (char ch : text) {
        if (ch != ' ') t.push_back(ch);
    }
    if (t.empty()) throw std::invalid_argument("empty rational");
    std::size_t slash = t.find('/');
    auto check_int = [&](const std::string& s, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start >= s.size()) throw std::invalid_argument("bad rational: " + text);
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational: " + text);
        }
    };
    std::string num = slash == std::string::npos ? t : t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    check_int(num, true);
    check_int(den, false);
    if (num[0] == '+') num = num.substr(1);
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    Rational q(n, d);
    q.canonicalize();
    return q;
}

GaussianRational GaussianRational::operator+(const GaussianRational& b) const {
    GaussianRational r;
    r.re = re + b.re;
    r.im = im + b.im;
    return r;
}

GaussianRational GaussianRational::operator-(const GaussianRational& b) const {
    GaussianRational r;
    r.re = re - b.re;
    r.im = im - b.im;
    return r;
}

GaussianRational GaussianRational::operator-() const {
    GaussianRational r;
    r.re = -re;
    r.im = -im;
    return r;
}

GaussianRational GaussianRational::operator*(const GaussianRational& b) const {
    GaussianRational r;
    if (sgn(im) == 0 && sgn(b.im) == 0) {
        r.re = re * b.re;
        return r;
    }
    r.re = re * b.re - im * b.im;
    r.im = re * b.im + im * b.re;
    return r;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) {
    re += b.re;
    im += b.im;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& b) {
    re -= b.re;
    im -= b.im;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (sgn(im) == 0) return rational_to_string(re);
    std::string s;
    if (sgn(re) != 0) s = rational_to_string(re) + (sgn(im) > 0 ? "+" : "");
    if (im == 1) return s + "i";
    if (im == -1) return s + "-i";
    return s + rational_to_string(im) + "i";
}

GR gr_add(const GR& a, const GR& b) { return a + b; }
GR gr_mul(const GR& a, const GR& b) { return a * b; }
GR gr_neg(const GR& a) { return -a; }

std::optional<GR> gr_inv(const GR& a) {
    if (a.is_zero()) return std::nullopt;
    Rational n = a.re * a.re + a.im * a.im;
    return GR(Rational(a.re / n), Rational(-a.im / n));
}

GR gr_conj(const GR& a) {
    GR r = a;
    r.im = -r.im;
    return r;
}

Rational gr_norm2(const GR& a) {
    return a.re * a.re + a.im * a.im;
}

nlohmann::json gr_to_json(const GR& a) {
    return nlohmann::json::array({rational_to_string(a.re), rational_to_string(a.im)});
}

GR gr_from_json(const nlohmann::json& j) {
    if (j.is_array() && j.size() == 2) {
        auto part = [](const nlohmann::json& x) {
            if (x.is_string()) return parse_rational(x.get<std::string>());
            if (x.is_number_integer()) return Rational(x.get<long>());
            throw std::invalid_argument("entry component must be a rational string");
        };
        return GR(part(j[0]), part(j[1]));
    }
    if (j.is_string()) return GR(parse_rational(j.get<std::string>()), Rational(0));
    if (j.is_number_integer()) return GR(j.get<long>());
    throw std::invalid_argument("entry must be [re, im]");
}

// ---------------------------------------------------------------------------

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<GR> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw DimensionError("entry count does not match shape");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GR(1);
    return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<GR>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    DenseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

DenseMatrix DenseMatrix::column(const std::vector<GR>& v) {
    return DenseMatrix(v.size(), 1, v);
}

bool DenseMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

DenseMatrix DenseMatrix::scaled(const GR& k) const {
    DenseMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] * k;
    return m;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("add: shape mismatch");
    DenseMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] + o.entries_[i];
    return m;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("sub: shape mismatch");
    DenseMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] - o.entries_[i];
    return m;
}

std::string DenseMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

DenseMatrix mat_mul(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    DenseMatrix m(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const GR& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const GR& y = b.at(k, j);
                if (y.is_zero()) continue;
                m.at(i, j) += x * y;
            }
        }
    }
    return m;
}

DenseMatrix mat_kron(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GR& x = a.at(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const GR& y = b.at(k, l);
                    if (y.is_zero()) continue;
                    m.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
            }
        }
    }
    return m;
}

DenseMatrix mat_transpose(const DenseMatrix& a) {
    DenseMatrix m(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(j, i) = a.at(i, j);
    }
    return m;
}

DenseMatrix mat_entrywise_conj(const DenseMatrix& a) {
    DenseMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = gr_conj(a.at(i, j));
    }
    return m;
}

DenseMatrix mat_conj_transpose(const DenseMatrix& a) {
    return mat_transpose(mat_entrywise_conj(a));
}

RrefResult mat_rref(const DenseMatrix& a) {
    DenseMatrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        }
        GR inv = *gr_inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            GR f = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m.at(row, j).is_zero()) m.at(r, j) -= f * m.at(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t mat_rank(const DenseMatrix& a) {
    return mat_rref(a).pivots.size();
}

std::vector<DenseMatrix> mat_nullspace(const DenseMatrix& a) {
    RrefResult rr = mat_rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<DenseMatrix> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        DenseMatrix v(a.cols(), 1);
        v.at(free, 0) = GR(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
            v.at(rr.pivots[r], 0) = -rr.reduced.at(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

DenseMatrix mat_hconcat(const std::vector<DenseMatrix>& cols, std::size_t rows) {
    std::size_t total = 0;
    for (const auto& c : cols) {
        if (c.rows() != rows) throw DimensionError("hconcat: row mismatch");
        total += c.cols();
    }
    DenseMatrix m(rows, total);
    std::size_t off = 0;
    for (const auto& c : cols) {
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < c.cols(); ++j) m.at(i, off + j) = c.at(i, j);
        }
        off += c.cols();
    }
    return m;
}

std::optional<DenseMatrix> mat_solve(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("mat_solve: row mismatch");
    DenseMatrix aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, a.cols() + j) = b.at(i, j);
    }
    RrefResult rr = mat_rref(aug);
    DenseMatrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) {
            x.at(rr.pivots[r], j) = rr.reduced.at(r, a.cols() + j);
        }
    }
    return x;
}

std::optional<DenseMatrix> mat_inverse(const DenseMatrix& a) {
    if (!a.is_square()) throw DimensionError("mat_inverse: matrix is not square");
    std::size_t n = a.rows();
    auto x = mat_solve(a, DenseMatrix::identity(n));
    // a singular square matrix cannot reach I, so x exists iff a is invertible
    return x;
}

nlohmann::json mat_to_json(const DenseMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : m.entries()) entries.push_back(gr_to_json(e));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

DenseMatrix mat_from_json(const nlohmann::json& j) {
    std::size_t r = j.at("rows").get<std::size_t>();
    std::size_t c = j.at("cols").get<std::size_t>();
    const auto& es = j.at("entries");
    std::vector<GR> v;
    // accept flat row-major lists and nested row lists
    if (es.size() == r && r > 0 && es[0].is_array() && !es[0].empty() && es[0][0].is_array()) {
        for (const auto& row : es) {
            for (const auto& e : row) v.push_back(gr_from_json(e));
        }
    } else {
        for (const auto& e : es) v.push_back(gr_from_json(e));
    }
    return DenseMatrix(r, c, std::move(v));
}

}  // namespace muc
