#pragma once

#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "contact_atlas/numeric.hpp"

namespace contact_atlas {

// Dense row-major matrix over an exact number type.
template <class T>
struct MatT {
    int rows = 0;
    int cols = 0;
    std::vector<T> entries;

    MatT() = default;

    MatT(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {
        if (r < 1 || c < 1) throw std::invalid_argument("matrix dimensions must be at least 1x1");
    }

    MatT(std::initializer_list<std::initializer_list<T>> init) {
        rows = static_cast<int>(init.size());
        if (rows == 0) throw std::invalid_argument("matrix dimensions must be at least 1x1");
        cols = static_cast<int>(init.begin()->size());
        if (cols == 0) throw std::invalid_argument("matrix dimensions must be at least 1x1");
        entries.reserve(static_cast<std::size_t>(rows) * cols);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols)
                throw std::invalid_argument("ragged matrix initializer");
            for (const auto& v : row) entries.push_back(v);
        }
    }

    T& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }

    static MatT identity(int n) {
        MatT m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    bool operator==(const MatT&) const = default;
};

using IntegerMatrix = MatT<Int>;
using RationalMatrix = MatT<Rat>;

template <class T>
MatT<T> operator*(const MatT<T>& a, const MatT<T>& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    MatT<T> c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const T& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

template <class T>
MatT<T> operator+(const MatT<T>& a, const MatT<T>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix sum dimension mismatch");
    MatT<T> c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] += b.entries[i];
    return c;
}

template <class T>
MatT<T> operator-(const MatT<T>& a, const MatT<T>& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix difference dimension mismatch");
    MatT<T> c = a;
    for (std::size_t i = 0; i < c.entries.size(); ++i) c.entries[i] -= b.entries[i];
    return c;
}

template <class T>
MatT<T> transpose(const MatT<T>& a) {
    MatT<T> t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

template <class T>
std::vector<T> operator*(const MatT<T>& a, const std::vector<T>& v) {
    if (a.cols != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> out(a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != 0) out[i] += a.at(i, j) * v[j];
    return out;
}

inline RationalMatrix to_rational(const IntegerMatrix& a) {
    RationalMatrix r(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = Rat(a.entries[i]);
    return r;
}

}  // namespace contact_atlas
