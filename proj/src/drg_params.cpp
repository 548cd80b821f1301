#include "drgforge/drg_params.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "drgforge/errors.hpp"

namespace drgforge {

Int gaussian_binomial(int n, int m, const Int& q) {
    if (m < 0 || m > n) throw BadParameters("gaussian binomial needs 0 <= m <= n");
    if (q < 2) throw BadParameters("gaussian binomial needs q >= 2");
    Rat result = 1;
    for (int i = 0; i < m; ++i) {
        result *= Rat(int_pow(q, static_cast<unsigned>(n - i)) - 1,
                      int_pow(q, static_cast<unsigned>(i + 1)) - 1);
    }
    if (!rat_is_integer(result)) throw Error("gaussian binomial evaluated to a non-integer");
    return rat_num(result);
}

namespace {

/// [j]_b = 1 + b + ... + b^{j-1}.
Int bracket(int j, long long b) {
    Int sum = 0;
    Int power = 1;
    for (int i = 0; i < j; ++i) {
        sum += power;
        power *= b;
    }
    return sum;
}

}  // namespace

std::optional<ClassicalParameters> detect_classical_parameters(const IntersectionArray& arr) {
    const int d = arr.diameter();
    if (d < 2) return std::nullopt;
    const long long b0 = arr.b[0];
    const long long c2 = arr.c[1];
    for (long long b = 2; b <= b0; ++b) {
        const Rat alpha = Rat(c2, b + 1) - 1;
        const Rat beta = Rat(b0) / Rat(bracket(d, b));
        bool ok = true;
        for (int i = 1; i <= d && ok; ++i) {
            const Rat ci = Rat(bracket(i, b)) * (1 + alpha * Rat(bracket(i - 1, b)));
            ok = (ci == Rat(arr.c[i - 1]));
        }
        for (int i = 0; i < d && ok; ++i) {
            const Rat bi =
                (Rat(bracket(d, b)) - Rat(bracket(i, b))) * (beta - alpha * Rat(bracket(i, b)));
            ok = (bi == Rat(arr.b[i]));
        }
        if (ok) return ClassicalParameters{d, b, alpha, beta};
    }
    return std::nullopt;
}

namespace {

using Poly = std::vector<Int>;  // little-endian coefficients

Poly charpoly_tridiagonal(const IntersectionArray& arr) {
    const int d = arr.diameter();
    std::vector<long long> a(d + 1);
    for (int i = 0; i <= d; ++i) a[i] = arr.a(i);

    // det(xI - L) by the standard three-term recurrence; the off-diagonal
    // product at step i is b_{i-1} * c_i.
    Poly prev = {1};              // p_{-1}
    Poly cur = {Int(-a[0]), 1};   // x - a_0
    for (int i = 1; i <= d; ++i) {
        Poly next(cur.size() + 1, Int(0));
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += cur[j];          // x * p_{i-1}
            next[j] -= Int(a[i]) * cur[j];  // -a_i * p_{i-1}
        }
        const Int off = Int(arr.b[i - 1]) * Int(arr.c[i - 1]);
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= off * prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Int eval_poly(const Poly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Divides p by (x - root); exact for actual roots.
Poly deflate(const Poly& p, const Int& root) {
    Poly q(p.size() - 1);
    Int carry = p.back();
    for (int i = static_cast<int>(p.size()) - 2; i >= 0; --i) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    return q;
}

}  // namespace

std::vector<EigenvalueBox> drg_eigenvalues(const IntersectionArray& arr) {
    const int d = arr.diameter();
    Poly p = charpoly_tridiagonal(arr);

    // Integer roots: the matrix is monic-integer, so rational roots are
    // integers; all eigenvalues lie in [-b_0, b_0].
    std::multiset<long long, std::greater<>> exact_roots;
    const long long b0 = arr.b[0];
    for (long long t = b0; t >= -b0; --t) {
        while (p.size() > 1 && eval_poly(p, Int(t)) == 0) {
            exact_roots.insert(t);
            p = deflate(p, Int(t));
        }
    }

    // Numeric values via the symmetrized tridiagonal form (similar matrix:
    // off-diagonal sqrt(b_{i-1} c_i)).
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d + 1, d + 1);
    for (int i = 0; i <= d; ++i) m(i, i) = static_cast<double>(arr.a(i));
    for (int i = 1; i <= d; ++i) {
        const double off = std::sqrt(static_cast<double>(arr.b[i - 1]) *
                                     static_cast<double>(arr.c[i - 1]));
        m(i, i - 1) = m(i - 1, i) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    std::vector<double> numeric(solver.eigenvalues().data(), solver.eigenvalues().data() + d + 1);
    std::sort(numeric.begin(), numeric.end(), std::greater<>());

    std::vector<EigenvalueBox> out;
    auto remaining = exact_roots;
    for (double x : numeric) {
        EigenvalueBox box;
        const double scale = std::max(1.0, std::abs(x));
        auto nearest = remaining.end();
        double best = 1e-6 * scale;
        for (auto it = remaining.begin(); it != remaining.end(); ++it) {
            const double diff = std::abs(x - static_cast<double>(*it));
            if (diff <= best) {
                best = diff;
                nearest = it;
            }
        }
        if (nearest != remaining.end()) {
            box.exact = Rat(*nearest);
            box.lo = box.hi = static_cast<double>(*nearest);
            remaining.erase(nearest);
        } else {
            box.lo = x - 1e-7 * scale;
            box.hi = x + 1e-7 * scale;
        }
        out.push_back(box);
    }
    return out;
}

TerwilligerConstraint terwilliger_constraint(const ClassicalParameters& params) {
    const int d = params.diameter;
    if (d < 3) throw BadParameters("Terwilliger constraint needs diameter >= 3");
    if (params.b < 2) throw BadParameters("only classical parameters with b >= 2 are supported");
    const long long b = params.b;

    TerwilligerConstraint result;
    result.roots[0] = params.beta - params.alpha - 1;
    result.roots[1] = Rat(-1);
    result.roots[2] = Rat(-b - 1);
    result.roots[3] =
        params.alpha * Rat(b) * Rat(int_pow(Int(b), static_cast<unsigned>(d - 1)) - 1, b - 1) -
        1;

    std::optional<int> sign;
    for (int i = 2; i <= d - 1; ++i) {
        const Int f1 = 2 * bracket(i + 1, b) - (1 + int_pow(Int(b), static_cast<unsigned>(i)));
        const Int f2 = 2 * bracket(i, b) - (1 + int_pow(Int(b), static_cast<unsigned>(i - 1)));
        const Int value = -f1 * f2;
        const int s = value > 0 ? 1 : value < 0 ? -1 : 0;
        if (!sign) {
            sign = s;
        } else if (*sign != s) {
            throw SignNotConstant("leading sign of the quartic varies with i");
        }
    }
    result.leading_sign = *sign;

    // Sign sweep over the sorted distinct roots.
    std::map<Rat, int> mult;
    for (const Rat& r : result.roots) ++mult[r];
    std::vector<std::pair<Rat, int>> roots(mult.begin(), mult.end());  // ascending

    const int k = static_cast<int>(roots.size());
    // segment_sign[i] = sign on the open interval between roots i-1 and i
    // (segment 0 is (-inf, r_0), segment k is (r_{k-1}, inf)).
    std::vector<int> segment_sign(k + 1);
    segment_sign[k] = result.leading_sign;
    for (int i = k - 1; i >= 0; --i)
        segment_sign[i] =
            (roots[i].second % 2 == 0) ? segment_sign[i + 1] : -segment_sign[i + 1];

    std::vector<RatInterval> intervals;
    for (int i = 1; i < k; ++i)
        if (segment_sign[i] >= 0) intervals.push_back({roots[i - 1].first, roots[i].first});
    for (const auto& [r, m] : roots) {
        bool covered = false;
        for (const auto& iv : intervals) covered |= iv.contains(r);
        if (!covered) intervals.push_back({r, r});
    }
    std::sort(intervals.begin(), intervals.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    std::vector<RatInterval> merged;
    for (const auto& iv : intervals) {
        if (!merged.empty() && iv.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        else
            merged.push_back(iv);
    }
    result.admissible = std::move(merged);
    result.unbounded_below = segment_sign[0] >= 0;
    result.unbounded_above = segment_sign[k] >= 0;
    return result;
}

std::vector<RatInterval> local_eigenvalue_window(long long q, int e, int d) {
    if (d < 2 || e < d || q < 2) throw BadParameters("need q >= 2 and e >= d >= 2");
    const Int qd = int_pow(Int(q), static_cast<unsigned>(d));
    const Int qe = int_pow(Int(q), static_cast<unsigned>(e));
    return {{Rat(-q - 1), Rat(-1)}, {Rat(qd - q - 1), Rat(qe - q - 1)}};
}

Rat clique_bound(const IntersectionArray& arr) {
    if (arr.diameter() < 2) throw BadParameters("clique bound needs diameter >= 2");
    const auto eig = drg_eigenvalues(arr);
    const auto& smallest = eig.back();
    Rat theta;
    if (smallest.exact) {
        theta = *smallest.exact;
    } else {
        // Rational upper bracket; the bound is increasing in theta_D, so this
        // caps from above.
        theta = Rat(static_cast<long long>(std::ceil(smallest.hi * 1e9)), 1000000000ll);
    }
    if (theta >= -1)
        throw DegenerateSmallestEigenvalue("theta_D = " + rat_to_string(theta) + " >= -1");
    return Rat(-1) - Rat(arr.b[1]) / (theta + 1);
}

IntersectionArray family_array(long long m) {
    if (m < 6) throw BadParameters("family array requires M >= 6");
    IntersectionArray arr;
    arr.b = {7 * (m - 1), 6 * (m - 2), 4 * (m - 4)};
    arr.c = {1, 6, 28};
    return arr;
}

}  // namespace drgforge
