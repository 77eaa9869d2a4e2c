#include "contact_atlas/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace contact_atlas {

namespace {

// Floor division; b must be positive.
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

// g = s*a + t*b with g = gcd(a,b) >= 0.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    Int old_r = a, r = b;
    Int old_s = 1, cs = 0;
    Int old_t = 0, ct = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cs;
        old_s = cs;
        cs = tmp;
        tmp = old_t - q * ct;
        old_t = ct;
        ct = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    s = old_s;
    t = old_t;
}

void swap_rows(IntegerMatrix& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(r1, c), m.at(r2, c));
}

void swap_cols(IntegerMatrix& m, int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
}

void negate_row(IntegerMatrix& m, int r) {
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
}

// rows (r1, r2) <- (a*r1 + b*r2, c*r1 + d*r2); caller guarantees ad - bc = +-1.
void combine_rows(IntegerMatrix& m, int r1, int r2, const Int& a, const Int& b, const Int& c,
                  const Int& d) {
    for (int j = 0; j < m.cols; ++j) {
        Int x = m.at(r1, j), y = m.at(r2, j);
        m.at(r1, j) = a * x + b * y;
        m.at(r2, j) = c * x + d * y;
    }
}

void combine_cols(IntegerMatrix& m, int c1, int c2, const Int& a, const Int& b, const Int& c,
                  const Int& d) {
    for (int i = 0; i < m.rows; ++i) {
        Int x = m.at(i, c1), y = m.at(i, c2);
        m.at(i, c1) = a * x + b * y;
        m.at(i, c2) = c * x + d * y;
    }
}

// row r2 -= q * row r1
void subtract_row_multiple(IntegerMatrix& m, int r2, int r1, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(r2, c) -= q * m.at(r1, c);
}

// col c2 -= q * col c1
void subtract_col_multiple(IntegerMatrix& m, int c2, int c1, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, c2) -= q * m.at(r, c1);
}

}  // namespace

LatticeMap make_lattice_map(IntegerMatrix m) {
    LatticeMap map;
    map.source_rank = m.cols;
    map.target_rank = m.rows;
    map.matrix = std::move(m);
    return map;
}

std::pair<IntegerMatrix, IntegerMatrix> hermite_normal_form(const IntegerMatrix& A) {
    IntegerMatrix H = A;
    IntegerMatrix U = IntegerMatrix::identity(A.rows);
    int pr = 0;
    for (int pc = 0; pc < H.cols && pr < H.rows; ++pc) {
        int pivot = -1;
        for (int r = pr; r < H.rows; ++r)
            if (H.at(r, pc) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        swap_rows(H, pr, pivot);
        swap_rows(U, pr, pivot);
        for (int r = pr + 1; r < H.rows; ++r) {
            if (H.at(r, pc) == 0) continue;
            Int g, s, t;
            ext_gcd(H.at(pr, pc), H.at(r, pc), g, s, t);
            Int a = H.at(pr, pc) / g;
            Int b = H.at(r, pc) / g;
            // [[s, t], [-b, a]] has determinant (s*a_pc + t*b_pc)/g = 1.
            combine_rows(H, pr, r, s, t, -b, a);
            combine_rows(U, pr, r, s, t, -b, a);
        }
        if (H.at(pr, pc) < 0) {
            negate_row(H, pr);
            negate_row(U, pr);
        }
        for (int r = 0; r < pr; ++r) {
            Int q = floor_div(H.at(r, pc), H.at(pr, pc));
            subtract_row_multiple(H, r, pr, q);
            subtract_row_multiple(U, r, pr, q);
        }
        ++pr;
    }
    return {H, U};
}

SmithDecomposition smith_normal_form(const IntegerMatrix& A) {
    IntegerMatrix D = A;
    IntegerMatrix U = IntegerMatrix::identity(A.rows);
    IntegerMatrix V = IntegerMatrix::identity(A.cols);
    const int limit = std::min(A.rows, A.cols);

    for (int t = 0; t < limit; ++t) {
        // Pick the submatrix entry of smallest absolute value as pivot.
        int pi = -1, pj = -1;
        Int best;
        for (int i = t; i < D.rows; ++i)
            for (int j = t; j < D.cols; ++j) {
                if (D.at(i, j) == 0) continue;
                Int v = abs(D.at(i, j));
                if (pi < 0 || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // submatrix is zero
        swap_rows(D, t, pi);
        swap_rows(U, t, pi);
        swap_cols(D, t, pj);
        swap_cols(V, t, pj);

        for (;;) {
            // Clear column t below the pivot.  When the pivot divides the
            // entry a plain subtraction removes it without disturbing row t;
            // otherwise a gcd combine strictly shrinks the pivot, so the
            // outer loop terminates.
            for (int r = t + 1; r < D.rows; ++r) {
                if (D.at(r, t) == 0) continue;
                if (D.at(r, t) % D.at(t, t) == 0) {
                    Int q = D.at(r, t) / D.at(t, t);
                    subtract_row_multiple(D, r, t, q);
                    subtract_row_multiple(U, r, t, q);
                } else {
                    Int g, s, u;
                    ext_gcd(D.at(t, t), D.at(r, t), g, s, u);
                    Int a = D.at(t, t) / g;
                    Int b = D.at(r, t) / g;
                    combine_rows(D, t, r, s, u, -b, a);
                    combine_rows(U, t, r, s, u, -b, a);
                }
            }
            // Clear row t to the right of the pivot; a gcd combine here may
            // refill the column.
            bool row_clear = true;
            for (int c = t + 1; c < D.cols; ++c) {
                if (D.at(t, c) == 0) continue;
                if (D.at(t, c) % D.at(t, t) == 0) {
                    Int q = D.at(t, c) / D.at(t, t);
                    subtract_col_multiple(D, c, t, q);
                    subtract_col_multiple(V, c, t, q);
                } else {
                    Int g, s, u;
                    ext_gcd(D.at(t, t), D.at(t, c), g, s, u);
                    Int a = D.at(t, t) / g;
                    Int b = D.at(t, c) / g;
                    combine_cols(D, t, c, s, u, -b, a);
                    combine_cols(V, t, c, s, u, -b, a);
                    row_clear = false;
                }
            }
            bool col_clear = true;
            for (int r = t + 1; r < D.rows; ++r)
                if (D.at(r, t) != 0) col_clear = false;
            if (!(row_clear && col_clear)) continue;

            // Pivot must divide every remaining entry; if not, fold the
            // offending row into row t and re-clear.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < D.rows && bi < 0; ++i)
                for (int j = t + 1; j < D.cols; ++j)
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi < 0) break;
            for (int c = 0; c < D.cols; ++c) D.at(t, c) += D.at(bi, c);
            for (int c = 0; c < U.cols; ++c) U.at(t, c) += U.at(bi, c);
        }
    }

    for (int t = 0; t < limit; ++t)
        if (D.at(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    return {U, D, V};
}

Int det(const IntegerMatrix& A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    IntegerMatrix M = A;
    const int n = A.rows;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n; ++i)
                if (M.at(i, k) != 0) {
                    r = i;
                    break;
                }
            if (r < 0) return 0;
            swap_rows(M, k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

Int sublattice_index(const LatticeMap& inclusion) {
    if (inclusion.source_rank != inclusion.target_rank)
        throw std::invalid_argument("infinite index: inclusion is not between lattices of equal rank");
    Int d = det(inclusion.matrix);
    if (d == 0) throw std::invalid_argument("infinite index: inclusion matrix is singular");
    return abs(d);
}

std::vector<Int> cokernel_invariants(const LatticeMap& inclusion) {
    if (inclusion.source_rank != inclusion.target_rank)
        throw std::invalid_argument("cokernel_invariants: inclusion must be square");
    if (det(inclusion.matrix) == 0)
        throw std::invalid_argument("cokernel_invariants: inclusion matrix is singular");
    SmithDecomposition snf = smith_normal_form(inclusion.matrix);
    std::vector<Int> factors;
    for (int i = 0; i < snf.D.rows; ++i)
        if (snf.D.at(i, i) > 1) factors.push_back(snf.D.at(i, i));
    return factors;
}

IntVec primitivize(IntVec v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    if (g == 0) throw std::invalid_argument("primitivize: zero vector");
    for (Int& x : v) x /= g;
    return v;
}

bool solve_integer(const IntegerMatrix& A, const IntVec& b, IntVec* out) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithDecomposition snf = smith_normal_form(A);
    IntVec c = snf.U * b;
    const int r = std::min(A.rows, A.cols);
    IntVec y(A.cols, Int(0));
    for (int i = 0; i < A.rows; ++i) {
        Int d = (i < r) ? snf.D.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return false;
        } else {
            if (c[i] % d != 0) return false;
            if (i < A.cols) y[i] = c[i] / d;
        }
    }
    if (out) *out = snf.V * y;
    return true;
}

}  // namespace contact_atlas
