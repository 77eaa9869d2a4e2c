#include "contact_atlas/rational_linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace contact_atlas {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<int> rref(RationalMatrix& M) {
    std::vector<int> pivot_cols;
    int pr = 0;
    for (int pc = 0; pc < M.cols && pr < M.rows; ++pc) {
        int pivot = -1;
        for (int r = pr; r < M.rows; ++r)
            if (M.at(r, pc) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int c = 0; c < M.cols; ++c) std::swap(M.at(pivot, c), M.at(pr, c));
        Rat inv = M.at(pr, pc);
        for (int c = 0; c < M.cols; ++c) M.at(pr, c) /= inv;
        for (int r = 0; r < M.rows; ++r) {
            if (r == pr || M.at(r, pc) == 0) continue;
            Rat f = M.at(r, pc);
            for (int c = 0; c < M.cols; ++c) M.at(r, c) -= f * M.at(pr, c);
        }
        pivot_cols.push_back(pc);
        ++pr;
    }
    return pivot_cols;
}

}  // namespace

int rank(const RationalMatrix& A) {
    RationalMatrix M = A;
    return static_cast<int>(rref(M).size());
}

int rank(const IntegerMatrix& A) { return rank(to_rational(A)); }

std::optional<RatVec> solve_linear(const RationalMatrix& A, const RatVec& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw std::invalid_argument("solve_linear: dimension mismatch");
    RationalMatrix M(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
        M.at(i, A.cols) = b[i];
    }
    std::vector<int> pivots = rref(M);
    // A pivot in the augmented column means the system is inconsistent.
    if (!pivots.empty() && pivots.back() == A.cols) return std::nullopt;
    RatVec x(A.cols, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = M.at(static_cast<int>(k), A.cols);
    return x;
}

namespace {

using Rel = LinearConstraint::Rel;

// Scale to integer entries with gcd 1 (positive scaling only, so the
// constraint is unchanged); used for deduplication and to keep numbers small.
void normalize(LinearConstraint& c) {
    Int l = 1;
    for (const Rat& x : c.a) l = lcm(l, rat_den(x));
    Int g = 0;
    for (Rat& x : c.a) {
        x *= Rat(l);
        g = gcd(g, rat_num(x));
    }
    if (g > 1)
        for (Rat& x : c.a) x /= Rat(g);
}

bool all_zero(const LinearConstraint& c) {
    for (const Rat& x : c.a) if (x != 0) return false;
    return true;
}

}  // namespace

bool homogeneous_feasible(std::vector<LinearConstraint> cs, int nvars) {
    std::vector<bool> active(nvars, true);
    for (auto& c : cs)
        if (static_cast<int>(c.a.size()) != nvars)
            throw std::invalid_argument("homogeneous_feasible: constraint arity mismatch");

    for (int eliminated = 0; eliminated <= nvars; ++eliminated) {
        // Drop trivial constraints, detect contradictions, deduplicate.
        std::map<std::pair<int, std::vector<std::string>>, bool> seen;
        std::vector<LinearConstraint> kept;
        for (auto& c : cs) {
            if (all_zero(c)) {
                if (c.rel == Rel::Gt) return false;  // 0 > 0
                continue;
            }
            normalize(c);
            std::vector<std::string> key;
            key.reserve(c.a.size());
            for (const Rat& x : c.a) key.push_back(rat_to_string(x));
            if (!seen.emplace(std::make_pair(static_cast<int>(c.rel), std::move(key)), true).second)
                continue;
            kept.push_back(std::move(c));
        }
        cs = std::move(kept);
        if (cs.empty()) return true;

        // Prefer pivoting on an equality: a Gaussian step instead of FM.
        int eq_idx = -1, eq_var = -1;
        for (std::size_t i = 0; i < cs.size() && eq_idx < 0; ++i) {
            if (cs[i].rel != Rel::Eq) continue;
            for (int v = 0; v < nvars; ++v)
                if (active[v] && cs[i].a[v] != 0) {
                    eq_idx = static_cast<int>(i);
                    eq_var = v;
                    break;
                }
        }
        if (eq_idx >= 0) {
            LinearConstraint eq = cs[eq_idx];
            cs.erase(cs.begin() + eq_idx);
            for (auto& c : cs) {
                if (c.a[eq_var] == 0) continue;
                Rat f = c.a[eq_var] / eq.a[eq_var];
                for (int v = 0; v < nvars; ++v) c.a[v] -= f * eq.a[v];
            }
            active[eq_var] = false;
            continue;
        }

        // Choose the active variable with the cheapest positive/negative split.
        int best_var = -1;
        long best_cost = 0;
        for (int v = 0; v < nvars; ++v) {
            if (!active[v]) continue;
            long pos = 0, neg = 0;
            for (const auto& c : cs) {
                if (c.a[v] > 0) ++pos;
                if (c.a[v] < 0) ++neg;
            }
            if (pos + neg == 0) continue;
            long cost = pos * neg;
            if (best_var < 0 || cost < best_cost) {
                best_var = v;
                best_cost = cost;
            }
        }
        if (best_var < 0) return true;  // constraints mention no active variable

        std::vector<LinearConstraint> next;
        std::vector<const LinearConstraint*> pos, neg;
        for (const auto& c : cs) {
            if (c.a[best_var] > 0)
                pos.push_back(&c);
            else if (c.a[best_var] < 0)
                neg.push_back(&c);
            else
                next.push_back(c);
        }
        for (const auto* p : pos)
            for (const auto* n : neg) {
                LinearConstraint c;
                c.a.resize(nvars);
                Rat lp = -n->a[best_var];  // positive
                Rat ln = p->a[best_var];   // positive
                for (int v = 0; v < nvars; ++v) c.a[v] = lp * p->a[v] + ln * n->a[v];
                c.rel = (p->rel == Rel::Gt || n->rel == Rel::Gt) ? Rel::Gt : Rel::Ge;
                next.push_back(std::move(c));
            }
        cs = std::move(next);
        active[best_var] = false;
    }
    // Every variable eliminated; any contradiction would have surfaced above.
    for (const auto& c : cs)
        if (all_zero(c) && c.rel == Rel::Gt) return false;
    return true;
}

}  // namespace contact_atlas
