#include "tropcurve/trop.hpp"

#include <sstream>

namespace tropcurve {

const Rat& TropScalar::value() const {
    if (!finite_) throw std::domain_error("value() on -inf tropical scalar");
    return value_;
}

TropScalar trop_add(const TropScalar& a, const TropScalar& b) {
    if (a.is_neg_inf()) return b;
    if (b.is_neg_inf()) return a;
    return a.value() >= b.value() ? a : b;
}

TropScalar trop_mul(const TropScalar& a, const TropScalar& b) {
    if (a.is_neg_inf() || b.is_neg_inf()) return TropScalar::neg_inf();
    return TropScalar(a.value() + b.value());
}

TropMatrix::TropMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    entries_.assign(static_cast<size_t>(rows) * cols, TropScalar::neg_inf());
}

int TropMatrix::idx(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index out of range");
    return r * cols_ + c;
}

TropMatrix TropMatrix::identity(int n) {
    TropMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, TropScalar(Rat(0)));
    return m;
}

TropMatrix TropMatrix::permutation(const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("not a permutation");
        seen[v] = 1;
    }
    TropMatrix m(n, n);
    for (int k = 0; k < n; ++k) m.set(k, perm[k], TropScalar(Rat(0)));
    return m;
}

std::string TropMatrix::str() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << (r == 0 ? "[" : " ");
        os << "[";
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << at(r, c).str();
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    os << "]";
    return os.str();
}

TropMatrix mat_mul(const TropMatrix& a, const TropMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    TropMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            TropScalar acc = TropScalar::neg_inf();
            for (int k = 0; k < a.cols(); ++k)
                acc = trop_add(acc, trop_mul(a.at(i, k), b.at(k, j)));
            r.set(i, j, acc);
        }
    }
    return r;
}

namespace {

// perm[k] = column of the unique finite entry in row k, or nullopt if some
// row/column does not have exactly one finite entry.
std::optional<std::vector<int>> gen_perm_support(const TropMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    int n = a.rows();
    std::vector<int> perm(n, -1), col_count(n, 0);
    for (int r = 0; r < n; ++r) {
        int finite = 0;
        for (int c = 0; c < n; ++c) {
            if (a.at(r, c).is_finite()) {
                ++finite;
                perm[r] = c;
                ++col_count[c];
            }
        }
        if (finite != 1) return std::nullopt;
    }
    for (int c = 0; c < n; ++c)
        if (col_count[c] != 1) return std::nullopt;
    return perm;
}

} // namespace

bool is_permutation_matrix(const TropMatrix& a) {
    auto perm = gen_perm_support(a);
    if (!perm) return false;
    for (int r = 0; r < a.rows(); ++r)
        if (a.at(r, (*perm)[r]).value() != 0) return false;
    return true;
}

bool is_generalized_permutation(const TropMatrix& a) {
    return gen_perm_support(a).has_value();
}

bool is_regular(const TropMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("is_regular: non-square matrix");
    return is_generalized_permutation(a);
}

TropMatrix invert(const TropMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("invert: non-square matrix");
    auto perm = gen_perm_support(a);
    if (!perm) throw std::invalid_argument("invert: matrix is not regular");
    TropMatrix b(a.rows(), a.cols());
    for (int k = 0; k < a.rows(); ++k)
        b.set((*perm)[k], k, TropScalar(-a.at(k, (*perm)[k]).value()));
    return b;
}

bool pgl_equal(const TropMatrix& a, const TropMatrix& b) {
    if (!is_regular(a) || !is_regular(b)) throw std::invalid_argument("pgl_equal: non-regular input");
    if (a.rows() != b.rows()) throw std::invalid_argument("pgl_equal: order mismatch");
    std::optional<Rat> shift;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) {
            bool fa = a.at(r, c).is_finite(), fb = b.at(r, c).is_finite();
            if (fa != fb) return false;
            if (!fa) continue;
            Rat d = b.at(r, c).value() - a.at(r, c).value();
            if (!shift) shift = d;
            else if (*shift != d) return false;
        }
    }
    return true;
}

ProjPoint::ProjPoint(std::vector<TropScalar> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("ProjPoint needs at least one coordinate");
    bool any = false;
    for (const auto& c : coords_) any = any || c.is_finite();
    if (!any) throw std::invalid_argument("ProjPoint: all coordinates are -inf");
}

std::string ProjPoint::str() const {
    std::string s = "(";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += " : ";
        s += coords_[i].str();
    }
    return s + ")";
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
    if (p.dim() != q.dim()) throw std::invalid_argument("proj_equal: dimension mismatch");
    std::optional<Rat> shift;
    for (size_t i = 0; i < p.coords().size(); ++i) {
        const auto& a = p.coords()[i];
        const auto& b = q.coords()[i];
        if (a.is_finite() != b.is_finite()) return false;
        if (!a.is_finite()) continue;
        Rat d = b.value() - a.value();
        if (!shift) shift = d;
        else if (*shift != d) return false;
    }
    return true;
}

std::vector<TropScalar> mat_apply(const TropMatrix& a, const std::vector<TropScalar>& v) {
    if (a.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("mat_apply: dimension mismatch");
    std::vector<TropScalar> out;
    out.reserve(a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        TropScalar acc = TropScalar::neg_inf();
        for (int c = 0; c < a.cols(); ++c)
            acc = trop_add(acc, trop_mul(a.at(r, c), v[c]));
        out.push_back(acc);
    }
    return out;
}

} // namespace tropcurve
