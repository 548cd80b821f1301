#pragma once

#include <optional>
#include <vector>

#include "drgforge/graph.hpp"
#include "drgforge/rational.hpp"

namespace drgforge {

struct SpectrumEntry {
    std::optional<long long> exact;  // snapped and integer
    double lo = 0, hi = 0;           // bracket (equals the snap when exact)
    long long multiplicity = 0;
};

struct SpectrumResult {
    std::vector<SpectrumEntry> entries;  // descending by eigenvalue
    bool certified = false;              // exact moment identities verified

    long long multiplicity_of(long long value) const;
};

/// Adjacency spectrum for |G| <= cap. Numeric eigenvalues within snap_tol of
/// an integer are snapped; a fully integral snap is certified by checking
/// tr(A^l) = sum m_i theta_i^l for l = 0..4 in exact arithmetic
/// (CertificationFailed if the exact moments disagree). Non-integer
/// eigenvalues are reported as floating brackets and leave the result
/// uncertified.
SpectrumResult spectrum_small(const Graph& g, int cap = 4096, double snap_tol = 1e-6);

/// Exact closed-walk counts tr(A^l) for l = 0..4.
std::array<Int, 5> walk_moments(const Graph& g);

}  // namespace drgforge
