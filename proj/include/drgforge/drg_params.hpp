#pragma once

#include <array>
#include <optional>
#include <vector>

#include "drgforge/intersection_array.hpp"
#include "drgforge/rational.hpp"

namespace drgforge {

/// q-ary Gaussian binomial [n m]_q by the exact product formula.
Int gaussian_binomial(int n, int m, const Int& q);

/// Classical parameterization (D, b, alpha, beta): c_i = [i](1 + alpha*[i-1])
/// and b_i = ([D] - [i])(beta - alpha*[i]) with [j] = 1 + b + ... + b^{j-1}.
struct ClassicalParameters {
    int diameter = 0;
    long long b = 0;
    Rat alpha, beta;

    bool operator==(const ClassicalParameters&) const = default;
};

/// Scans integer b in 2..b_0, solves alpha from c_2 = (b+1)(alpha+1) and beta
/// from b_0 = [D]*beta, verifies all entries exactly. b = 1 and b < 0
/// branches are deliberately unsupported.
std::optional<ClassicalParameters> detect_classical_parameters(const IntersectionArray& arr);

/// Exact value when the eigenvalue is rational, otherwise a numeric bracket.
struct EigenvalueBox {
    std::optional<Rat> exact;
    double lo = 0, hi = 0;

    double mid() const { return (lo + hi) / 2; }
};

/// D+1 eigenvalues of the tridiagonal intersection matrix, descending.
/// Integer roots are certified by rational-root extraction of the
/// characteristic polynomial; residual roots are bracketed numerically.
std::vector<EigenvalueBox> drg_eigenvalues(const IntersectionArray& arr);

/// Closed interval [lo, hi]; a point when lo == hi.
struct RatInterval {
    Rat lo, hi;

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool is_point() const { return lo == hi; }

    bool operator==(const RatInterval&) const = default;
};

/// Quartic sign constraint on non-principal local eigenvalues: the roots are
/// {beta-alpha-1, -1, -b-1, alpha*b*(b^(D-1)-1)/(b-1) - 1} and the admissible
/// set is where sign * prod(lambda - root_i) >= 0.
struct TerwilligerConstraint {
    std::array<Rat, 4> roots;  // as listed above, unsorted
    int leading_sign = 0;
    std::vector<RatInterval> admissible;  // bounded components, disjoint, ascending
    bool unbounded_below = false;         // (-inf, min root] also admissible
    bool unbounded_above = false;         // [max root, inf) also admissible
};

/// Requires D >= 3. The leading sign is computed for every i = 2..D-1 and
/// must be constant (SignNotConstant otherwise).
TerwilligerConstraint terwilliger_constraint(const ClassicalParameters& params);

/// The interval union {[-q-1, -1], [q^d - q - 1, q^e - q - 1]} that the
/// constraint specializes to for parameters (d, q, q-1, q^e-1).
std::vector<RatInterval> local_eigenvalue_window(long long q, int e, int d);

/// -1 - b_1/(theta_D + 1); requires theta_D < -1
/// (DegenerateSmallestEigenvalue otherwise).
Rat clique_bound(const IntersectionArray& arr);

/// {7(M-1), 6(M-2), 4(M-4); 1, 6, 28}; requires M >= 6.
IntersectionArray family_array(long long m);

}  // namespace drgforge
