#include "contact_atlas/nilpotent.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace contact_atlas {
namespace {

class RatSampler {
 public:
    RatSampler(std::uint64_t seed, int range) : rng_(seed), range_(range) {}

    Rat next() {
        const std::uint64_t span = 2 * static_cast<std::uint64_t>(range_) + 1;
        long long num = static_cast<long long>(rng_() % span) - range_;
        long long den = static_cast<long long>(rng_() % static_cast<std::uint64_t>(range_)) + 1;
        return Rat(num, den);
    }

    RatVec vec(int len) {
        RatVec v(len);
        for (auto& c : v) c = next();
        return v;
    }

 private:
    std::mt19937_64 rng_;
    int range_;
};

RationalMatrix sl2_block(const Rat& p, const Rat& q) {
    RationalMatrix m(2, 2);
    m.at(0, 0) = p * q;
    m.at(0, 1) = p * p;
    m.at(1, 0) = -q * q;
    m.at(1, 1) = -p * q;
    return m;
}

RationalMatrix sp4_pairing() {
    RationalMatrix j(4, 4);
    j.at(0, 2) = 1;
    j.at(1, 3) = 1;
    j.at(2, 0) = -1;
    j.at(3, 1) = -1;
    return j;
}

bool is_zero_matrix(const RationalMatrix& m) {
    for (const auto& e : m.entries)
        if (e != 0) return false;
    return true;
}

RationalMatrix scaled(const RationalMatrix& m, const Rat& c) {
    RationalMatrix r = m;
    for (auto& e : r.entries) e *= c;
    return r;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace

void validate_plan(const SamplePlan& plan) {
    if (plan.sample_count < 1)
        throw std::invalid_argument("sample plan: sample_count must be at least 1");
    if (plan.coordinate_range < 1)
        throw std::invalid_argument("sample plan: coordinate_range must be at least 1");
}

std::vector<RationalMatrix> psi_map(int n, const RatVec& x) {
    if (n < 0) throw std::invalid_argument("psi_map: n must be nonnegative");
    if (static_cast<int>(x.size()) != 2 * n + 2)
        throw std::invalid_argument("psi_map: expected a vector of length 2n+2");
    std::vector<RationalMatrix> blocks;
    blocks.reserve(n + 1);
    for (int i = 0; i <= n; ++i) blocks.push_back(sl2_block(x[i], x[i + n + 1]));
    return blocks;
}

std::pair<RationalMatrix, RationalMatrix> phi_map(const RatVec& x) {
    if (x.size() != 6) throw std::invalid_argument("phi_map: expected a vector of length 6");
    // Rank-one element u w^T of sp4 with u = (x0, x2, -x5, -x3) and
    // w = (x5, x3, x0, x2); w is J u, so J (u w^T) is symmetric.
    const Rat u[4] = {x[0], x[2], -x[5], -x[3]};
    const Rat w[4] = {x[5], x[3], x[0], x[2]};
    RationalMatrix sp4(4, 4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) sp4.at(r, c) = u[r] * w[c];
    return {sp4, sl2_block(x[1], x[4])};
}

QuadraticMap psi_quadratic_map(int n) {
    if (n < 0) throw std::invalid_argument("psi_quadratic_map: n must be nonnegative");
    return {2 * n + 2, [n](const RatVec& x) { return psi_map(n, x); }};
}

QuadraticMap phi_quadratic_map() {
    return {6, [](const RatVec& x) {
                auto [sp4, sl2] = phi_map(x);
                return std::vector<RationalMatrix>{sp4, sl2};
            }};
}

ImagePropertyReport verify_image_properties(const std::vector<RationalMatrix>& components) {
    ImagePropertyReport rep{true, true, true, true};
    for (const auto& m : components) {
        if (m.rows != m.cols)
            throw std::invalid_argument("verify_image_properties: component not square");

        Rat trace = 0;
        for (int i = 0; i < m.rows; ++i) trace += m.at(i, i);
        if (trace != 0) rep.traceless = false;

        if (m.rows == 2) {
            if (trace != 0) rep.algebra_membership = false;
        } else if (m.rows == 4) {
            RationalMatrix j = sp4_pairing();
            if (!is_zero_matrix(transpose(m) * j + j * m)) rep.algebra_membership = false;
        } else {
            throw std::invalid_argument("verify_image_properties: unsupported component size");
        }

        for (int r1 = 0; r1 < m.rows && rep.rank_le_1; ++r1)
            for (int r2 = r1 + 1; r2 < m.rows && rep.rank_le_1; ++r2)
                for (int c1 = 0; c1 < m.cols && rep.rank_le_1; ++c1)
                    for (int c2 = c1 + 1; c2 < m.cols; ++c2)
                        if (m.at(r1, c1) * m.at(r2, c2) != m.at(r1, c2) * m.at(r2, c1)) {
                            rep.rank_le_1 = false;
                            break;
                        }

        if (!is_zero_matrix(m * m)) rep.nilpotent = false;
    }
    return rep;
}

bool verify_image_properties_sampled(const QuadraticMap& map, const SamplePlan& plan) {
    validate_plan(plan);
    RatSampler sampler(plan.seed, plan.coordinate_range);
    for (long long s = 0; s < plan.sample_count; ++s)
        if (!verify_image_properties(map.eval(sampler.vec(map.input_dim))).all()) return false;
    return true;
}

bool verify_invariance(const QuadraticMap& map,
                       const std::vector<std::vector<int>>& sign_patterns,
                       const SamplePlan& plan) {
    validate_plan(plan);
    for (const auto& pattern : sign_patterns) {
        if (static_cast<int>(pattern.size()) != map.input_dim)
            throw std::invalid_argument("verify_invariance: sign pattern has wrong length");
        for (int s : pattern)
            if (s != 1 && s != -1)
                throw std::invalid_argument("verify_invariance: sign pattern entries must be +-1");
    }

    RatSampler sampler(plan.seed, plan.coordinate_range);
    for (long long s = 0; s < plan.sample_count; ++s) {
        RatVec x = sampler.vec(map.input_dim);
        auto base = map.eval(x);
        for (const auto& pattern : sign_patterns) {
            RatVec gx = x;
            for (int i = 0; i < map.input_dim; ++i)
                if (pattern[i] == -1) gx[i] = -gx[i];
            if (map.eval(gx) != base) return false;
        }
    }
    return true;
}

bool verify_homogeneity(const QuadraticMap& map, const SamplePlan& plan) {
    validate_plan(plan);
    RatSampler sampler(plan.seed, plan.coordinate_range);
    for (long long s = 0; s < plan.sample_count; ++s) {
        RatVec x = sampler.vec(map.input_dim);
        Rat t = sampler.next();
        RatVec tx = x;
        for (auto& c : tx) c *= t;
        auto scaled_input = map.eval(tx);
        auto base = map.eval(x);
        for (auto& m : base) m = scaled(m, t * t);
        if (scaled_input != base) return false;
    }
    return true;
}

int OrbitPoset::weight(std::uint32_t mask) const { return std::popcount(mask); }

std::vector<std::uint32_t> OrbitPoset::lower_covers(std::uint32_t mask) const {
    std::vector<std::uint32_t> covers;
    for (int b = 0; b < k; ++b)
        if (mask & (std::uint32_t{1} << b)) covers.push_back(mask ^ (std::uint32_t{1} << b));
    return covers;
}

std::vector<int> OrbitPoset::bits(std::uint32_t mask) const {
    std::vector<int> v(k);
    for (int b = 0; b < k; ++b) v[b] = (mask >> b) & 1;
    return v;
}

OrbitPoset orbit_poset(int k) {
    if (k < 1 || k > 20)
        throw std::invalid_argument("orbit_poset: k must be between 1 and 20");
    return {k};
}

std::vector<RationalMatrix> signature_generator(int k, std::uint32_t mask) {
    OrbitPoset poset = orbit_poset(k);
    if (mask >= poset.size())
        throw std::invalid_argument("signature_generator: mask out of range");
    std::vector<RationalMatrix> gen(k, RationalMatrix(2, 2));
    for (int b = 0; b < k; ++b)
        if (mask & (std::uint32_t{1} << b)) gen[b].at(0, 1) = 1;
    return gen;
}

bool stratification_parity(int k) {
    OrbitPoset poset = orbit_poset(k);
    // Covering steps (one component dropped) lose exactly one projective
    // dimension pair; comparable pairs then differ by twice the weight gap.
    for (std::uint32_t mask = 1; mask < poset.size(); ++mask)
        for (std::uint32_t lower : poset.lower_covers(mask))
            if (poset.projectivized_dim(mask) - poset.projectivized_dim(lower) != 2)
                return false;
    for (int w = 1; w <= k; ++w)
        for (int wp = 0; wp < w; ++wp) {
            int codim = 2 * (w - wp);
            if (codim % 2 != 0) return false;
        }
    return true;
}

namespace {

// Traceless 2x2 matrices as coordinate triples (alpha, beta, gamma) for
// [[alpha, beta], [gamma, -alpha]].
struct Sl2Coords {
    double a = 0, b = 0, c = 0;
};

// Commutator [x, y] of traceless 2x2 matrices, in the same coordinates.
Sl2Coords commutator(const Sl2Coords& x, const Sl2Coords& y) {
    return {x.b * y.c - x.c * y.b, 2 * (x.a * y.b - x.b * y.a),
            2 * (x.c * y.a - x.a * y.c)};
}

// Pushforward of the tangent vector (vp, vq) under the block map
// (p, q) -> [[pq, p^2], [-q^2, -pq]].
Sl2Coords push_forward(double p, double q, double vp, double vq) {
    return {q * vp + p * vq, 2 * p * vp, -2 * q * vq};
}

// Solves [xi, mu] = v for xi; the system is singular (the centralizer of mu
// is in its kernel), so eliminate with a pivot threshold and set free
// variables to zero. Returns false when the system is inconsistent.
bool realize(const Sl2Coords& mu, const Sl2Coords& v, Sl2Coords* xi) {
    double m[3][4] = {{0, mu.c, -mu.b, v.a},
                      {2 * mu.b, -2 * mu.a, 0, v.b},
                      {-2 * mu.c, 0, 2 * mu.a, v.c}};
    const double eps = 1e-12;

    int pivot_col[3] = {-1, -1, -1};
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int best = -1;
        for (int r = rank; r < 3; ++r)
            if (best < 0 || std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
        if (std::abs(m[best][col]) <= eps) continue;
        std::swap(m[best], m[rank]);
        for (int r = 0; r < 3; ++r) {
            if (r == rank) continue;
            double f = m[r][col] / m[rank][col];
            for (int c = col; c < 4; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (int r = rank; r < 3; ++r)
        if (std::abs(m[r][3]) > 1e-9) return false;

    double sol[3] = {0, 0, 0};
    for (int r = 0; r < rank; ++r) sol[pivot_col[r]] = m[r][3] / m[r][pivot_col[r]];
    *xi = {sol[0], sol[1], sol[2]};
    return true;
}

double trace_pairing(const Sl2Coords& mu, const Sl2Coords& c) {
    // tr(mu * C) for C = [[c.a, c.b], [c.c, -c.a]].
    return 2 * mu.a * c.a + mu.b * c.c + mu.c * c.b;
}

}  // namespace

KkSampleResult kk_pairing_at(int n, const RatVec& x, const RatVec& v, const RatVec& w) {
    if (n < 0) throw std::invalid_argument("kk_pairing_at: n must be nonnegative");
    const int dim = 2 * n + 2;
    if (static_cast<int>(x.size()) != dim || static_cast<int>(v.size()) != dim ||
        static_cast<int>(w.size()) != dim)
        throw std::invalid_argument("kk_pairing_at: expected vectors of length 2n+2");

    KkSampleResult res;
    res.realized = true;
    for (int i = 0; i <= n; ++i) {
        double p = to_double(x[i]);
        double q = to_double(x[i + n + 1]);
        Sl2Coords mu{p * q, p * p, -q * q};
        Sl2Coords vi = push_forward(p, q, to_double(v[i]), to_double(v[i + n + 1]));
        Sl2Coords wi = push_forward(p, q, to_double(w[i]), to_double(w[i + n + 1]));
        Sl2Coords xi, eta;
        if (!realize(mu, vi, &xi) || !realize(mu, wi, &eta)) {
            res.realized = false;
            break;
        }
        res.kk += trace_pairing(mu, commutator(xi, eta));
    }
    if (!res.realized) {
        res.kk = 0;
        return res;
    }
    for (int i = 0; i <= n; ++i)
        res.omega += to_double(v[i]) * to_double(w[i + n + 1]) -
                     to_double(v[i + n + 1]) * to_double(w[i]);
    return res;
}

KkReport kk_pullback_check(int n, const SamplePlan& plan) {
    if (n < 1) throw std::invalid_argument("kk_pullback_check: n must be at least 1");
    validate_plan(plan);
    const int dim = 2 * n + 2;

    RatSampler sampler(plan.seed, plan.coordinate_range);
    std::vector<std::pair<double, double>> pairs;  // (kk, omega)
    KkReport rep;
    for (long long s = 0; s < plan.sample_count; ++s) {
        RatVec x = sampler.vec(dim);
        bool degenerate = false;
        for (int i = 0; i <= n; ++i)
            if (x[i] == 0 && x[i + n + 1] == 0) degenerate = true;
        if (degenerate) {
            ++rep.samples_skipped;
            continue;
        }

        std::vector<std::pair<RatVec, RatVec>> tangents;
        for (int i = 0; i <= n; ++i) {
            RatVec v(dim, Rat(0)), w(dim, Rat(0));
            v[i] = 1;
            w[i + n + 1] = 1;
            tangents.emplace_back(std::move(v), std::move(w));
        }
        for (int extra = 0; extra < 3; ++extra)
            tangents.emplace_back(sampler.vec(dim), sampler.vec(dim));

        bool ok = true;
        std::vector<std::pair<double, double>> local;
        for (const auto& [v, w] : tangents) {
            KkSampleResult r = kk_pairing_at(n, x, v, w);
            if (!r.realized) {
                ok = false;
                break;
            }
            local.emplace_back(r.kk, r.omega);
        }
        if (!ok) {
            ++rep.samples_skipped;
            continue;
        }
        ++rep.samples_used;
        pairs.insert(pairs.end(), local.begin(), local.end());
    }

    double num = 0, den = 0;
    for (const auto& [kk, om] : pairs) {
        num += kk * om;
        den += om * om;
    }
    rep.constant = den > 0 ? num / den : 0.0;
    for (const auto& [kk, om] : pairs)
        rep.max_residual = std::max(rep.max_residual, std::abs(kk - rep.constant * om));
    rep.pair_count = static_cast<long long>(pairs.size());
    return rep;
}

}  // namespace contact_atlas
