#include "drgforge/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>

#include "drgforge/errors.hpp"

namespace drgforge {

long long SpectrumResult::multiplicity_of(long long value) const {
    for (const auto& e : entries)
        if (e.exact && *e.exact == value) return e.multiplicity;
    return 0;
}

std::array<Int, 5> walk_moments(const Graph& g) {
    const int n = g.vertex_count();
    std::array<Int, 5> tr{Int(n), 0, 0, 0, 0};
    long long deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += g.degree(v);
    tr[2] = deg_sum;

    // Row of A^2 per vertex via neighbor-of-neighbor accumulation gives
    // tr(A^3) and tr(A^4) without matrix products.
    std::vector<long long> count(n, 0);
    std::vector<std::int32_t> touched;
    Int tr3 = 0, tr4 = 0;
    for (int u = 0; u < n; ++u) {
        touched.clear();
        for (int v : g.neighbors(u))
            for (int w : g.neighbors(v)) {
                if (count[w] == 0) touched.push_back(w);
                ++count[w];
            }
        long long walks3 = 0;
        for (int v : g.neighbors(u)) walks3 += count[v];
        long long walks4 = 0;
        for (int w : touched) {
            walks4 += count[w] * count[w];
            count[w] = 0;
        }
        tr3 += walks3;
        tr4 += walks4;
    }
    tr[3] = tr3;
    tr[4] = tr4;
    return tr;
}

SpectrumResult spectrum_small(const Graph& g, int cap, double snap_tol) {
    const int n = g.vertex_count();
    if (n > cap) throw SizeCapExceeded("spectrum_small supports up to " + std::to_string(cap) +
                                       " vertices, got " + std::to_string(n));
    SpectrumResult result;
    if (n == 0) {
        result.certified = true;
        return result;
    }

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a(u, v) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(eig.begin(), eig.end(), std::greater<>());

    bool all_integer = true;
    std::size_t i = 0;
    while (i < eig.size()) {
        const double x = eig[i];
        const double rounded = std::round(x);
        if (std::abs(x - rounded) <= snap_tol) {
            const long long value = static_cast<long long>(rounded);
            SpectrumEntry entry;
            entry.exact = value;
            entry.lo = entry.hi = rounded;
            while (i < eig.size() && std::abs(eig[i] - rounded) <= snap_tol) {
                ++entry.multiplicity;
                ++i;
            }
            result.entries.push_back(entry);
        } else {
            all_integer = false;
            SpectrumEntry entry;
            entry.lo = entry.hi = x;
            const double cluster_tol = 1e-8 * std::max(1.0, std::abs(x));
            while (i < eig.size() && std::abs(eig[i] - x) <= cluster_tol) {
                entry.lo = std::min(entry.lo, eig[i]);
                entry.hi = std::max(entry.hi, eig[i]);
                ++entry.multiplicity;
                ++i;
            }
            entry.lo -= cluster_tol;
            entry.hi += cluster_tol;
            result.entries.push_back(entry);
        }
    }

    if (all_integer) {
        const auto tr = walk_moments(g);
        for (int l = 0; l <= 4; ++l) {
            Int sum = 0;
            for (const auto& e : result.entries) {
                Int power = 1;
                const Int theta(*e.exact);
                for (int t = 0; t < l; ++t) power *= theta;
                sum += Int(e.multiplicity) * power;
            }
            if (sum != tr[l])
                throw CertificationFailed("snapped spectrum fails exact moment l=" +
                                          std::to_string(l) + ": got " + sum.str() +
                                          ", trace is " + tr[l].str());
        }
        result.certified = result.entries.size() <= 5;
    }
    return result;
}

}  // namespace drgforge
