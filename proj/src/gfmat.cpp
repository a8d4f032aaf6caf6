#include "char2/gfmat.hpp"

#include <cstring>
#include <stdexcept>

namespace char2 {

namespace {

// bitmask table for multiplication by a constant: for source plane s,
// cols[s] has bit t set iff x^s * c has coefficient t
struct MulTable {
    std::uint64_t cols[64];
};

MulTable mul_table(const Field* F, FElem c) {
    MulTable T;
    FElem v = c;
    for (int s = 0; s < F->k(); ++s) {
        T.cols[s] = v;
        v = F->mul(v, 2);  // multiply by x
    }
    return T;
}

}  // namespace

GfMat::GfMat(const Field* F, int rows, int cols)
    : F_(F), nr_(rows), nc_(cols), k_(F->k()), wpr_((cols + 63) / 64),
      data_(static_cast<std::size_t>(F->k()) * rows * wpr_, 0) {}

void GfMat::rebind_field(const Field* F) {
    if (F->k() != k_) throw std::invalid_argument("rebind_field: degree mismatch");
    F_ = F;
}

GfMat GfMat::identity(const Field* F, int n) {
    GfMat M(F, n, n);
    for (int i = 0; i < n; ++i) M.set(i, i, 1);
    return M;
}

FElem GfMat::get(int i, int j) const {
    FElem v = 0;
    std::size_t w = j >> 6;
    int b = j & 63;
    for (int p = 0; p < k_; ++p)
        v |= ((plane_row(p, i)[w] >> b) & 1ull) << p;
    return v;
}

void GfMat::set(int i, int j, FElem v) {
    std::size_t w = j >> 6;
    int b = j & 63;
    for (int p = 0; p < k_; ++p) {
        std::uint64_t* row = plane_row(p, i);
        row[w] = (row[w] & ~(1ull << b)) | (((v >> p) & 1ull) << b);
    }
}

bool GfMat::is_zero() const {
    for (std::uint64_t w : data_)
        if (w) return false;
    return true;
}

bool GfMat::operator==(const GfMat& o) const {
    return nr_ == o.nr_ && nc_ == o.nc_ && data_ == o.data_;
}

GfMat GfMat::operator+(const GfMat& o) const {
    GfMat r = *this;
    r.add_assign(o);
    return r;
}

void GfMat::add_assign(const GfMat& o) {
    if (nr_ != o.nr_ || nc_ != o.nc_)
        throw std::invalid_argument("GfMat: shape mismatch in add");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] ^= o.data_[i];
}

GfMat GfMat::operator*(const GfMat& o) const {
    if (nc_ != o.nr_) throw std::invalid_argument("GfMat: shape mismatch in mul");
    const int k = k_;
    GfMat C(F_, nr_, o.nc_);
    // polynomial planes before reduction: degree up to 2k-2
    std::vector<std::vector<std::uint64_t>> acc(
        2 * k - 1,
        std::vector<std::uint64_t>(static_cast<std::size_t>(nr_) * C.wpr_, 0));
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            auto& out = acc[a + b];
            for (int i = 0; i < nr_; ++i) {
                const std::uint64_t* arow = plane_row(a, i);
                std::uint64_t* crow = out.data() + static_cast<std::size_t>(i) * C.wpr_;
                for (std::size_t w = 0; w < wpr_; ++w) {
                    std::uint64_t bits = arow[w];
                    while (bits) {
                        int j = static_cast<int>(w << 6) + __builtin_ctzll(bits);
                        bits &= bits - 1;
                        const std::uint64_t* brow = o.plane_row(b, j);
                        for (std::size_t t = 0; t < C.wpr_; ++t) crow[t] ^= brow[t];
                    }
                }
            }
        }
    }
    // fold planes k..2k-2 with the defining polynomial
    std::uint64_t poly = F_->defining_poly() ^ (1ull << k);
    for (int t = 2 * k - 2; t >= k; --t) {
        std::uint64_t bits = poly;
        while (bits) {
            int j = __builtin_ctzll(bits);
            bits &= bits - 1;
            auto& dst = acc[t - k + j];
            const auto& src = acc[t];
            for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
        }
    }
    for (int p = 0; p < k; ++p)
        std::memcpy(C.plane_row(p, 0), acc[p].data(),
                    acc[p].size() * sizeof(std::uint64_t));
    return C;
}

GfMat GfMat::transposed() const {
    GfMat T(F_, nc_, nr_);
    for (int p = 0; p < k_; ++p) {
        for (int i = 0; i < nr_; ++i) {
            const std::uint64_t* row = plane_row(p, i);
            std::size_t wi = static_cast<std::size_t>(i) >> 6;
            std::uint64_t bi = 1ull << (i & 63);
            for (std::size_t w = 0; w < wpr_; ++w) {
                std::uint64_t bits = row[w];
                while (bits) {
                    int j = static_cast<int>(w << 6) + __builtin_ctzll(bits);
                    bits &= bits - 1;
                    T.plane_row(p, j)[wi] |= bi;
                }
            }
        }
    }
    return T;
}

GfMat GfMat::scaled(FElem c) const {
    GfMat r(F_, nr_, nc_);
    MulTable T = mul_table(F_, c);
    for (int s = 0; s < k_; ++s) {
        std::uint64_t bits = T.cols[s];
        while (bits) {
            int t = __builtin_ctzll(bits);
            bits &= bits - 1;
            const std::uint64_t* src = plane_row(s, 0);
            std::uint64_t* dst = r.plane_row(t, 0);
            std::size_t n = static_cast<std::size_t>(nr_) * wpr_;
            for (std::size_t w = 0; w < n; ++w) dst[w] ^= src[w];
        }
    }
    return r;
}

void GfMat::row_addmul(int dst, int src, FElem c) {
    row_addmul_from(dst, *this, src, c);
}

void GfMat::row_addmul_from(int dst, const GfMat& other, int src, FElem c) {
    if (c == 0) return;
    MulTable T = mul_table(F_, c);
    // accumulate target planes from source planes
    for (int t = 0; t < k_; ++t) {
        std::uint64_t* d = plane_row(t, dst);
        for (int s = 0; s < k_; ++s) {
            if ((T.cols[s] >> t) & 1) {
                const std::uint64_t* sp = other.plane_row(s, src);
                for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= sp[w];
            }
        }
    }
}

void GfMat::row_scale(int r, FElem c) {
    MulTable T = mul_table(F_, c);
    std::vector<std::uint64_t> tmp(static_cast<std::size_t>(k_) * wpr_, 0);
    for (int t = 0; t < k_; ++t) {
        std::uint64_t* d = tmp.data() + static_cast<std::size_t>(t) * wpr_;
        for (int s = 0; s < k_; ++s) {
            if ((T.cols[s] >> t) & 1) {
                const std::uint64_t* sp = plane_row(s, r);
                for (std::size_t w = 0; w < wpr_; ++w) d[w] ^= sp[w];
            }
        }
    }
    for (int t = 0; t < k_; ++t)
        std::memcpy(plane_row(t, r), tmp.data() + static_cast<std::size_t>(t) * wpr_,
                    wpr_ * sizeof(std::uint64_t));
}

void GfMat::swap_rows(int a, int b) {
    if (a == b) return;
    for (int p = 0; p < k_; ++p) {
        std::uint64_t* ra = plane_row(p, a);
        std::uint64_t* rb = plane_row(p, b);
        for (std::size_t w = 0; w < wpr_; ++w) std::swap(ra[w], rb[w]);
    }
}

GfMat GfMat::row(int r) const {
    GfMat v(F_, 1, nc_);
    for (int p = 0; p < k_; ++p)
        std::memcpy(v.plane_row(p, 0), plane_row(p, r), wpr_ * sizeof(std::uint64_t));
    return v;
}

void GfMat::set_row(int r, const GfMat& v) {
    for (int p = 0; p < k_; ++p)
        std::memcpy(plane_row(p, r), v.plane_row(p, 0), wpr_ * sizeof(std::uint64_t));
}

GfMat GfMat::submatrix(int r0, int nrows, int c0, int ncols) const {
    GfMat S(F_, nrows, ncols);
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) S.set(i, j, get(r0 + i, c0 + j));
    return S;
}

std::vector<int> GfMat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < nc_ && r < nr_; ++c) {
        int piv = -1;
        for (int i = r; i < nr_; ++i)
            if (get(i, c) != 0) { piv = i; break; }
        if (piv < 0) continue;
        swap_rows(r, piv);
        FElem d = get(r, c);
        if (d != 1) row_scale(r, F_->inv(d));
        for (int i = 0; i < nr_; ++i) {
            if (i == r) continue;
            FElem v = get(i, c);
            if (v) row_addmul(i, r, v);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int GfMat::rank() const {
    GfMat tmp = *this;
    return static_cast<int>(tmp.rref().size());
}

GfMat GfMat::right_nullspace() const {
    GfMat R = *this;
    std::vector<int> pivots = R.rref();
    std::vector<bool> is_pivot(nc_, false);
    for (int c : pivots) is_pivot[c] = true;
    int nfree = nc_ - static_cast<int>(pivots.size());
    GfMat N(F_, nfree, nc_);
    int row_idx = 0;
    for (int c = 0; c < nc_; ++c) {
        if (is_pivot[c]) continue;
        N.set(row_idx, c, 1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            N.set(row_idx, pivots[pr], R.get(static_cast<int>(pr), c));
        ++row_idx;
    }
    return N;
}

GfMat GfMat::inverse() const {
    if (nr_ != nc_) throw std::invalid_argument("GfMat: inverse of non-square");
    GfMat aug(F_, nr_, 2 * nc_);
    for (int i = 0; i < nr_; ++i) {
        for (int j = 0; j < nc_; ++j) aug.set(i, j, get(i, j));
        aug.set(i, nc_ + i, 1);
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) != nr_ || piv.back() >= nc_)
        throw std::domain_error("GfMat: singular matrix");
    return aug.submatrix(0, nr_, nc_, nc_);
}

GfMat GfMat::kron(const GfMat& o) const {
    GfMat K(F_, nr_ * o.nr_, nc_ * o.nc_);
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j) {
            FElem a = get(i, j);
            if (!a) continue;
            for (int p = 0; p < o.nr_; ++p)
                for (int q = 0; q < o.nc_; ++q) {
                    FElem b = o.get(p, q);
                    if (b) K.set(i * o.nr_ + p, j * o.nc_ + q, F_->mul(a, b));
                }
        }
    return K;
}

GfMat GfMat::vstack(const std::vector<GfMat>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack: empty");
    int total = 0;
    for (const auto& p : parts) total += p.rows();
    GfMat R(parts[0].field(), total, parts[0].cols());
    int r = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i) R.set_row(r++, p.row(i));
    }
    return R;
}

std::optional<GfMat> GfMat::solve_left(const GfMat& A) const {
    // echelonize A with a transformation record T so that T * A = R
    GfMat R = A;
    GfMat T = GfMat::identity(F_, A.rows());
    std::vector<int> pivots;
    std::vector<int> pivrow;
    int prow = 0;
    for (int col = 0; col < A.cols() && prow < A.rows(); ++col) {
        int sel = -1;
        for (int i = prow; i < A.rows(); ++i)
            if (R.get(i, col) != 0) { sel = i; break; }
        if (sel < 0) continue;
        R.swap_rows(prow, sel);
        T.swap_rows(prow, sel);
        FElem d = R.get(prow, col);
        if (d != 1) {
            FElem di = F_->inv(d);
            R.row_scale(prow, di);
            T.row_scale(prow, di);
        }
        for (int i = 0; i < A.rows(); ++i) {
            if (i == prow) continue;
            FElem c = R.get(i, col);
            if (c) {
                R.row_addmul(i, prow, c);
                T.row_addmul(i, prow, c);
            }
        }
        pivots.push_back(col);
        pivrow.push_back(prow);
        ++prow;
    }
    GfMat X(F_, nr_, A.rows());
    for (int i = 0; i < nr_; ++i) {
        GfMat r = row(i);
        GfMat x(F_, 1, A.rows());
        for (std::size_t t = 0; t < pivots.size(); ++t) {
            FElem c = r.get(0, pivots[t]);
            if (c) {
                r.row_addmul_from(0, R, pivrow[t], c);
                x.row_addmul_from(0, T, pivrow[t], c);
            }
        }
        if (!r.is_zero()) return std::nullopt;
        X.set_row(i, x);
    }
    return X;
}

FElem GfMat::first_nonzero() const {
    for (int i = 0; i < nr_; ++i)
        for (int j = 0; j < nc_; ++j) {
            FElem v = get(i, j);
            if (v) return v;
        }
    return 0;
}

EchelonBasis::EchelonBasis(const Field* F, int dim) : F_(F), dim_(dim) {}

bool EchelonBasis::insert(GfMat v) {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        FElem c = v.get(0, pivots_[i]);
        if (c) v.row_addmul_from(0, vecs_[i], 0, c);
    }
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (v.get(0, j) != 0) { piv = j; break; }
    if (piv < 0) return false;
    FElem d = v.get(0, piv);
    if (d != 1) v.row_scale(0, F_->inv(d));
    vecs_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool EchelonBasis::reduces_to_zero(GfMat v) const {
    for (std::size_t i = 0; i < pivots_.size(); ++i) {
        FElem c = v.get(0, pivots_[i]);
        if (c) v.row_addmul_from(0, vecs_[i], 0, c);
    }
    return v.is_zero();
}

GfMat EchelonBasis::basis() const {
    GfMat B(F_, size(), dim_);
    for (int i = 0; i < size(); ++i) B.set_row(i, vecs_[i]);
    return B;
}

}  // namespace char2
