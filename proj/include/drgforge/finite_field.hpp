#pragma once

#include <cstdint>
#include <vector>

#include "drgforge/errors.hpp"

namespace drgforge {

/// Arithmetic context for F_q, q = p^f. Elements are indices in [0, q):
/// index sum(c_i * p^i) stands for the residue class / polynomial with
/// coefficients c_i over F_p. Immutable after construction and safe to
/// share across threads.
class FieldContext {
public:
    int q() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return f_; }

    /// Coefficients c_0..c_{f-1} of the monic irreducible modulus
    /// x^f + c_{f-1} x^{f-1} + ... + c_0; empty when f = 1.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
    int neg(int a) const { return neg_[a]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }
    int inv(int a) const;

    void check_element(int a) const {
        if (a < 0 || a >= q_) throw EntryOutOfRange("field element index out of [0, q)");
    }

private:
    friend FieldContext make_field(long long q);
    int q_ = 0, p_ = 0, f_ = 0;
    std::vector<int> modulus_;
    std::vector<int> add_, mul_, neg_, inv_;
};

/// Builds F_q. Prime q of any practical size; prime powers supported for
/// q <= 16 with the lexicographically smallest irreducible monic modulus
/// (smallest base-p value of the coefficient vector), so that element
/// indexing is reproducible bit-for-bit.
FieldContext make_field(long long q);

/// Dense e x d matrix over the field of a FieldContext; entries are element
/// indices.
struct FqMatrix {
    int rows = 0, cols = 0;
    std::vector<std::uint8_t> entries;  // row-major, rows*cols

    FqMatrix() = default;
    FqMatrix(int e, int d) : rows(e), cols(d), entries(static_cast<std::size_t>(e) * d, 0) {}

    std::uint8_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    std::uint8_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const FqMatrix&) const = default;
};

/// F_q-rank by exact Gaussian elimination.
int rank(const FieldContext& ctx, const FqMatrix& m);

/// Entry-wise a - b.
FqMatrix subtract(const FieldContext& ctx, const FqMatrix& a, const FqMatrix& b);
FqMatrix add(const FieldContext& ctx, const FqMatrix& a, const FqMatrix& b);

inline constexpr std::uint64_t kDefaultEnumerationCap = 1ull << 20;

/// Number of e x d matrices, i.e. q^(e*d); throws EnumerationCapExceeded
/// when it exceeds cap.
std::uint64_t matrix_space_size(const FieldContext& ctx, int e, int d,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// Index <-> matrix maps for the deterministic enumeration order: entry
/// (i, j) of matrix #v is digit (i*d + j) of v written base q (entry (0,0)
/// least significant).
FqMatrix matrix_from_index(const FieldContext& ctx, int e, int d, std::uint64_t index);
std::uint64_t matrix_to_index(const FieldContext& ctx, const FqMatrix& m);

/// All q^(e*d) matrices in index order.
std::vector<FqMatrix> enumerate_matrices(const FieldContext& ctx, int e, int d,
                                         std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace drgforge
