#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "cutfem/errors.hpp"

namespace cutfem {

struct Triplet {
    int row = 0;
    int col = 0;
    double value = 0.0;
};

/// Compressed sparse row matrix with sorted column indices per row.
/// Compression sums duplicate (row, col) triplets in insertion order, so two
/// accumulations that insert symmetric pairs back-to-back produce a bitwise
/// symmetric matrix.
struct Csr {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<double> val;

    static Csr from_coo(int n, std::vector<Triplet> triplets) {
        std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
            return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
        Csr A;
        A.n = n;
        A.row_ptr.assign(static_cast<size_t>(n) + 1, 0);
        for (size_t k = 0; k < triplets.size();) {
            const int r = triplets[k].row;
            const int c = triplets[k].col;
            if (r < 0 || r >= n || c < 0 || c >= n) raise(ErrCode::DofMismatch, "triplet index out of range");
            double s = 0.0;
            while (k < triplets.size() && triplets[k].row == r && triplets[k].col == c) s += triplets[k++].value;
            A.col.push_back(c);
            A.val.push_back(s);
            ++A.row_ptr[static_cast<size_t>(r) + 1];
        }
        for (int r = 0; r < n; ++r) A.row_ptr[static_cast<size_t>(r) + 1] += A.row_ptr[static_cast<size_t>(r)];
        return A;
    }

    size_t nnz() const { return val.size(); }

    void matvec(const std::vector<double>& x, std::vector<double>& y) const {
        y.assign(static_cast<size_t>(n), 0.0);
        for (int r = 0; r < n; ++r) {
            double s = 0.0;
            for (int k = row_ptr[static_cast<size_t>(r)]; k < row_ptr[static_cast<size_t>(r) + 1]; ++k)
                s += val[static_cast<size_t>(k)] * x[static_cast<size_t>(col[static_cast<size_t>(k)])];
            y[static_cast<size_t>(r)] = s;
        }
    }

    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> y;
        matvec(x, y);
        return y;
    }

    double entry(int r, int c) const {
        for (int k = row_ptr[static_cast<size_t>(r)]; k < row_ptr[static_cast<size_t>(r) + 1]; ++k)
            if (col[static_cast<size_t>(k)] == c) return val[static_cast<size_t>(k)];
        return 0.0;
    }

    std::vector<double> diagonal() const {
        std::vector<double> d(static_cast<size_t>(n), 0.0);
        for (int r = 0; r < n; ++r) d[static_cast<size_t>(r)] = entry(r, r);
        return d;
    }

    double norm_inf() const {
        double m = 0.0;
        for (double v : val) m = std::max(m, std::abs(v));
        return m;
    }
};

/// A + scale * B for matrices of equal size (row-wise sorted merge).
inline Csr csr_add(const Csr& A, const Csr& B, double scale) {
    if (A.n != B.n) raise(ErrCode::DofMismatch, "matrix size mismatch in sum");
    Csr C;
    C.n = A.n;
    C.row_ptr.assign(static_cast<size_t>(A.n) + 1, 0);
    for (int r = 0; r < A.n; ++r) {
        int ka = A.row_ptr[static_cast<size_t>(r)];
        int kb = B.row_ptr[static_cast<size_t>(r)];
        const int ea = A.row_ptr[static_cast<size_t>(r) + 1];
        const int eb = B.row_ptr[static_cast<size_t>(r) + 1];
        while (ka < ea || kb < eb) {
            const int ca = ka < ea ? A.col[static_cast<size_t>(ka)] : A.n;
            const int cb = kb < eb ? B.col[static_cast<size_t>(kb)] : A.n;
            if (ca < cb) {
                C.col.push_back(ca);
                C.val.push_back(A.val[static_cast<size_t>(ka++)]);
            } else if (cb < ca) {
                C.col.push_back(cb);
                C.val.push_back(scale * B.val[static_cast<size_t>(kb++)]);
            } else {
                C.col.push_back(ca);
                C.val.push_back(A.val[static_cast<size_t>(ka++)] + scale * B.val[static_cast<size_t>(kb++)]);
            }
        }
        C.row_ptr[static_cast<size_t>(r) + 1] = static_cast<int>(C.col.size());
    }
    return C;
}

/// ASCII MatrixMarket coordinate dump (general symmetric content, 1-based).
inline void write_matrix_market(const std::string& path, const Csr& A) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) raise(ErrCode::DofMismatch, "cannot open " + path + " for writing");
    std::fprintf(fp, "%%%%MatrixMarket matrix coordinate real general\n");
    std::fprintf(fp, "%d %d %zu\n", A.n, A.n, A.nnz());
    for (int r = 0; r < A.n; ++r)
        for (int k = A.row_ptr[static_cast<size_t>(r)]; k < A.row_ptr[static_cast<size_t>(r) + 1]; ++k)
            std::fprintf(fp, "%d %d %.17g\n", r + 1, A.col[static_cast<size_t>(k)] + 1,
                         A.val[static_cast<size_t>(k)]);
    std::fclose(fp);
}

}  // namespace cutfem
