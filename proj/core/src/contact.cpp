#include "contact_atlas/contact.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "contact_atlas/rational_linalg.hpp"

namespace contact_atlas {
namespace {

RationalMatrix rational_identity(int n) {
    return to_rational(IntegerMatrix::identity(n));
}

void require_square_of_dim(const RationalMatrix& g, int dim, const char* who) {
    if (g.rows != g.cols || g.rows != dim)
        throw std::invalid_argument(std::string(who) + ": dimension mismatch");
}

}  // namespace

SymplecticAmbient make_ambient(int n) {
    if (n < 0) throw std::invalid_argument("make_ambient: n must be nonnegative");
    const int half = n + 1;
    IntegerMatrix J(2 * half, 2 * half);
    for (int i = 0; i < half; ++i) {
        J.at(i, half + i) = 1;
        J.at(half + i, i) = -1;
    }
    return {n, J};
}

OmegaTransform omega_transform(const RationalMatrix& g, const SymplecticAmbient& amb) {
    require_square_of_dim(g, amb.dim(), "omega_transform");
    if (rank(g) != g.rows)
        throw std::invalid_argument("omega_transform: matrix is singular");

    RationalMatrix jq = to_rational(amb.J);
    RationalMatrix t = transpose(g) * jq * g;
    // J has a 1 at (0, n+1); the candidate scalar is read off there.
    Rat c = t.at(0, amb.n + 1);
    for (int r = 0; r < t.rows; ++r)
        for (int col = 0; col < t.cols; ++col)
            if (t.at(r, col) != c * jq.at(r, col)) return {OmegaClass::NonScalar, 0};
    if (c == 1) return {OmegaClass::Preserves, 1};
    if (c == -1) return {OmegaClass::Negates, -1};
    return {OmegaClass::Other, c};
}

std::string omega_class_name(const OmegaTransform& t) {
    switch (t.kind) {
        case OmegaClass::Preserves: return "preserves omega";
        case OmegaClass::Negates: return "negates omega";
        case OmegaClass::Other: return "scales omega by " + rat_to_string(t.scale);
        case OmegaClass::NonScalar: break;
    }
    return "does not scale omega";
}

bool theta_invariant(const RationalMatrix& g, const SymplecticAmbient& amb) {
    return omega_transform(g, amb).kind == OmegaClass::Preserves;
}

LinearContactAction make_action(int n, std::vector<RationalMatrix> generators,
                                int element_cap) {
    if (n < 0) throw std::invalid_argument("make_action: n must be nonnegative");
    const int dim = 2 * n + 2;
    for (const auto& g : generators) {
        require_square_of_dim(g, dim, "make_action");
        if (rank(g) != dim)
            throw std::invalid_argument("make_action: generator is singular");
    }

    LinearContactAction action{n, std::move(generators), {}};
    std::map<std::vector<Rat>, int> seen;
    std::deque<int> frontier;
    auto add = [&](RationalMatrix m) -> bool {
        auto [it, inserted] = seen.emplace(m.entries, static_cast<int>(action.elements.size()));
        if (!inserted) return false;
        action.elements.push_back(std::move(m));
        frontier.push_back(it->second);
        if (static_cast<int>(action.elements.size()) > element_cap)
            throw std::invalid_argument("make_action: group closure exceeded " +
                                        std::to_string(element_cap) + " elements");
        return true;
    };

    add(rational_identity(dim));
    while (!frontier.empty()) {
        int idx = frontier.front();
        frontier.pop_front();
        for (const auto& g : action.generators) add(action.elements[idx] * g);
    }
    return action;
}

RootOfUnity make_root(int order, int power) {
    if (order < 1) throw std::invalid_argument("make_root: order must be positive");
    power %= order;
    if (power < 0) power += order;
    if (power == 0) return {1, 0};
    int g = std::gcd(power, order);
    return {order / g, power / g};
}

RootOfUnity root_mul(const RootOfUnity& x, const RootOfUnity& y) {
    int l = std::lcm(x.order, y.order);
    return make_root(l, (l / x.order) * x.power + (l / y.order) * y.power);
}

RootOfUnity root_inverse(const RootOfUnity& x) {
    return make_root(x.order, x.order - x.power);
}

std::string root_to_string(const RootOfUnity& x) {
    if (x.order == 1) return "1";
    if (x.order == 2) return "-1";
    if (x.order == 4) return x.power == 1 ? "i" : "-i";
    std::string s = "zeta" + std::to_string(x.order);
    if (x.power != 1) s += "^" + std::to_string(x.power);
    return s;
}

int matrix_order(const RationalMatrix& g, int bound) {
    if (g.rows != g.cols) throw std::invalid_argument("matrix_order: matrix not square");
    RationalMatrix id = rational_identity(g.rows);
    RationalMatrix p = g;
    for (int k = 1; k <= bound; ++k) {
        if (p == id) return k;
        p = p * g;
    }
    throw std::invalid_argument("matrix_order: order exceeds " + std::to_string(bound) +
                                " - input does not have (small) finite order");
}

namespace {

// Arithmetic in Q(zeta) for zeta of order 3, 4, or 6, with zeta^2 reduced by
// zeta^2 = alpha*zeta + beta. Elements are a + b*zeta.
struct QuadField {
    Rat alpha, beta;
};

struct QuadElem {
    Rat a, b;

    bool is_zero() const { return a == 0 && b == 0; }
};

QuadField field_for_order(int order) {
    switch (order) {
        case 3: return {-1, -1};
        case 4: return {0, -1};
        case 6: return {1, -1};
        default: break;
    }
    throw std::invalid_argument("field_for_order: unsupported order " + std::to_string(order));
}

QuadElem qmul(const QuadField& f, const QuadElem& x, const QuadElem& y) {
    return {x.a * y.a + f.beta * x.b * y.b,
            x.a * y.b + x.b * y.a + f.alpha * x.b * y.b};
}

QuadElem qinv(const QuadField& f, const QuadElem& x) {
    Rat delta = x.a * x.a + f.alpha * x.a * x.b - f.beta * x.b * x.b;
    return {(x.a + f.alpha * x.b) / delta, -x.b / delta};
}

QuadElem qpow(const QuadField& f, QuadElem x, int e) {
    QuadElem acc{1, 0};
    for (int i = 0; i < e; ++i) acc = qmul(f, acc, x);
    return acc;
}

// Rank of (g - lambda*I) over Q(zeta); the nullity is the eigenvalue
// multiplicity.
int eigenspace_multiplicity(const RationalMatrix& g, const QuadField& f,
                            const QuadElem& lambda) {
    const int m = g.rows;
    std::vector<QuadElem> a(static_cast<std::size_t>(m) * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            a[r * m + c] = {g.at(r, c), 0};
            if (r == c) {
                a[r * m + c].a -= lambda.a;
                a[r * m + c].b -= lambda.b;
            }
        }

    int rank_count = 0;
    for (int col = 0; col < m && rank_count < m; ++col) {
        int pivot = -1;
        for (int r = rank_count; r < m; ++r)
            if (!a[r * m + col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < m; ++c) std::swap(a[pivot * m + c], a[rank_count * m + c]);
        QuadElem inv = qinv(f, a[rank_count * m + col]);
        for (int c = 0; c < m; ++c)
            a[rank_count * m + c] = qmul(f, a[rank_count * m + c], inv);
        for (int r = 0; r < m; ++r) {
            if (r == rank_count || a[r * m + col].is_zero()) continue;
            QuadElem factor = a[r * m + col];
            for (int c = 0; c < m; ++c) {
                QuadElem sub = qmul(f, factor, a[rank_count * m + c]);
                a[r * m + c].a -= sub.a;
                a[r * m + c].b -= sub.b;
            }
        }
        ++rank_count;
    }
    return m - rank_count;
}

int rational_eigenspace_multiplicity(const RationalMatrix& g, const Rat& lambda) {
    RationalMatrix shifted = g;
    for (int i = 0; i < g.rows; ++i) shifted.at(i, i) -= lambda;
    return g.rows - rank(shifted);
}

}  // namespace

std::vector<FixedComponentRecord> fixed_components(const RationalMatrix& g,
                                                   int element_index) {
    if (g.rows != g.cols || g.rows < 1)
        throw std::invalid_argument("fixed_components: matrix not square");
    const int m = g.rows;
    const int k = matrix_order(g);

    std::vector<FixedComponentRecord> records;
    int total = 0;
    std::vector<int> unsupported;
    for (int j = 0; j < k; ++j) {
        const int d = k / std::gcd(j, k);
        int mult;
        RootOfUnity eigenvalue{1, 0};
        if (d == 1) {
            mult = rational_eigenspace_multiplicity(g, 1);
        } else if (d == 2) {
            mult = rational_eigenspace_multiplicity(g, -1);
            eigenvalue = {2, 1};
        } else if (d == 3 || d == 4 || d == 6) {
            const int p = j / std::gcd(j, k);
            QuadField f = field_for_order(d);
            mult = eigenspace_multiplicity(g, f, qpow(f, {0, 1}, p));
            eigenvalue = {d, p};
        } else {
            unsupported.push_back(d);
            continue;
        }
        if (mult > 0)
            records.push_back({element_index, eigenvalue, mult - 1, m - mult});
        total += mult;
    }
    if (total != m) {
        std::string msg = "fixed_components: eigenvalue of unsupported order";
        for (int d : unsupported) msg += " " + std::to_string(d);
        throw std::invalid_argument(msg);
    }
    return records;
}

int min_fixed_codimension(const LinearContactAction& action) {
    if (action.elements.size() <= 1)
        throw std::invalid_argument("min_fixed_codimension: no non-identity elements");
    SymplecticAmbient amb = make_ambient(action.n);
    int best = 2 * action.n + 2;  // above any attainable codimension
    for (std::size_t i = 1; i < action.elements.size(); ++i) {
        const RationalMatrix& e = action.elements[i];
        if (omega_transform(e, amb).kind == OmegaClass::NonScalar)
            throw std::invalid_argument(
                "min_fixed_codimension: element does not preserve the contact distribution");
        for (const auto& rec : fixed_components(e, static_cast<int>(i)))
            best = std::min(best, rec.codimension);
    }
    return best;
}

EigenvalueRelationReport eigenvalue_relation_check(const RationalMatrix& g,
                                                   const SymplecticAmbient& amb,
                                                   int fixed_axis) {
    require_square_of_dim(g, amb.dim(), "eigenvalue_relation_check");
    if (fixed_axis < 0 || fixed_axis >= g.rows)
        throw std::invalid_argument("eigenvalue_relation_check: axis out of range");
    for (int r = 0; r < g.rows; ++r)
        for (int c = 0; c < g.cols; ++c) {
            if (r != c && g.at(r, c) != 0)
                throw std::invalid_argument(
                    "eigenvalue_relation_check: requires a diagonal matrix");
            if (r == c && g.at(r, c) == 0)
                throw std::invalid_argument("eigenvalue_relation_check: matrix is singular");
        }
    matrix_order(g);  // rejects non-finite-order input

    EigenvalueRelationReport rep;
    rep.lambda_v = g.at(fixed_axis, fixed_axis);
    for (int j = 0; j < g.rows; ++j)
        if (j != fixed_axis) rep.tangent_weights.push_back(g.at(j, j) / rep.lambda_v);
    rep.xi0 = 1 / (rep.lambda_v * rep.lambda_v);

    std::vector<Rat> remaining = rep.tangent_weights;
    auto it = std::find(remaining.begin(), remaining.end(), rep.xi0);
    rep.xi0_present = it != remaining.end();
    if (rep.xi0_present) {
        remaining.erase(it);
        std::vector<Rat> reciprocal;
        reciprocal.reserve(remaining.size());
        for (const Rat& w : remaining) reciprocal.push_back(rep.xi0 / w);
        std::sort(remaining.begin(), remaining.end());
        std::sort(reciprocal.begin(), reciprocal.end());
        rep.multiset_ok = remaining == reciprocal;

        rep.product_applicable = rep.xi0 == 1;
        if (rep.product_applicable) {
            Rat prod = rep.xi0;
            for (const Rat& w : remaining) prod *= w;
            rep.product_ok = prod == 1;
        }
    }
    rep.passed = rep.xi0_present && rep.multiset_ok &&
                 (!rep.product_applicable || rep.product_ok);
    return rep;
}

QuotientVerdict quotient_verdict(const LinearContactAction& action) {
    if (action.n < 1)
        throw std::invalid_argument(
            "quotient_verdict: ambient projective space must have dimension >= 3");
    SymplecticAmbient amb = make_ambient(action.n);
    QuotientVerdict verdict;
    for (std::size_t i = 0; i < action.generators.size(); ++i) {
        OmegaTransform t = omega_transform(action.generators[i], amb);
        if (t.kind != OmegaClass::Preserves) {
            verdict.induced = false;
            verdict.violating_generator = static_cast<int>(i);
            verdict.violating_transform = t;
            return verdict;
        }
    }
    verdict.induced = true;
    verdict.violating_transform = {OmegaClass::Preserves, 1};
    return verdict;
}

}  // namespace contact_atlas
