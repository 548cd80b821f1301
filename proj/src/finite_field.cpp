#include "drgforge/finite_field.hpp"

#include <algorithm>
#include <string>

#include "drgforge/rational.hpp"

namespace drgforge {
namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Writes q = p^f with p prime, or returns false.
bool split_prime_power(long long q, long long& p, int& f) {
    if (q < 2) return false;
    for (long long cand = 2; cand * cand <= q; ++cand) {
        if (q % cand != 0) continue;
        long long rest = q;
        int exp = 0;
        while (rest % cand == 0) {
            rest /= cand;
            ++exp;
        }
        if (rest != 1 || !is_prime(cand)) return false;
        p = cand;
        f = exp;
        return true;
    }
    p = q;  // q itself prime
    f = 1;
    return true;
}

/// Polynomial arithmetic over F_p on coefficient vectors, little-endian.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& mod, int p) {
    const int deg = static_cast<int>(mod.size()) - 1;  // mod is monic of this degree
    for (int i = static_cast<int>(a.size()) - 1; i >= deg; --i) {
        const int lead = a[i];
        if (lead == 0) continue;
        for (int j = 0; j <= deg; ++j) {
            int& slot = a[i - deg + j];
            slot = (slot - lead * mod[j]) % p;
            if (slot < 0) slot += p;
        }
    }
    a.resize(deg);
    return a;
}

std::vector<int> poly_mul_mod(const std::vector<int>& a, const std::vector<int>& b,
                              const std::vector<int>& mod, int p) {
    std::vector<int> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(prod), mod, p);
}

int encode(const std::vector<int>& coeffs, int p) {
    int val = 0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) val = val * p + coeffs[i];
    return val;
}

std::vector<int> decode(int v, int p, int f) {
    std::vector<int> c(f, 0);
    for (int i = 0; i < f; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

/// Exhaustive irreducibility test for monic polynomials of degree <= 4:
/// no roots, and (degree 4 only) no monic irreducible quadratic divisor.
bool is_irreducible(const std::vector<int>& monic, int p) {
    const int deg = static_cast<int>(monic.size()) - 1;
    auto eval = [&](int x) {
        long long acc = 0;
        for (int i = deg; i >= 0; --i) acc = (acc * x + monic[i]) % p;
        return static_cast<int>(acc);
    };
    for (int x = 0; x < p; ++x)
        if (eval(x) == 0) return false;
    if (deg <= 3) return true;
    // deg == 4: trial-divide by every monic quadratic with no roots.
    for (int b = 0; b < p; ++b) {
        for (int c = 0; c < p; ++c) {
            std::vector<int> quad = {c, b, 1};
            bool quad_has_root = false;
            for (int x = 0; x < p && !quad_has_root; ++x)
                quad_has_root = ((x * x + b * x + c) % p == 0);
            if (quad_has_root) continue;
            // Polynomial long division remainder of monic by quad.
            std::vector<int> rem(monic);
            for (int i = deg; i >= 2; --i) {
                const int lead = rem[i];
                if (lead == 0) continue;
                for (int j = 0; j <= 2; ++j) {
                    int& slot = rem[i - 2 + j];
                    slot = (slot - lead * quad[j]) % p;
                    if (slot < 0) slot += p;
                }
            }
            if (rem[0] == 0 && rem[1] == 0) return false;
        }
    }
    return true;
}

}  // namespace

int FieldContext::inv(int a) const {
    check_element(a);
    if (a == 0) throw EntryOutOfRange("zero has no multiplicative inverse");
    return inv_[a];
}

FieldContext make_field(long long q) {
    long long p = 0;
    int f = 0;
    if (!split_prime_power(q, p, f))
        throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
    if (f > 1 && q > 16)
        throw UnsupportedOrder("prime-power fields supported only up to q = 16, got q = " +
                               std::to_string(q));
    if (q > (1 << 12))
        throw UnsupportedOrder("prime field too large for table-based arithmetic: q = " +
                               std::to_string(q));

    FieldContext ctx;
    ctx.q_ = static_cast<int>(q);
    ctx.p_ = static_cast<int>(p);
    ctx.f_ = f;

    const int Q = ctx.q_;
    ctx.add_.assign(static_cast<std::size_t>(Q) * Q, 0);
    ctx.mul_.assign(static_cast<std::size_t>(Q) * Q, 0);
    ctx.neg_.assign(Q, 0);
    ctx.inv_.assign(Q, 0);

    if (f == 1) {
        for (int a = 0; a < Q; ++a) {
            ctx.neg_[a] = (Q - a) % Q;
            for (int b = 0; b < Q; ++b) {
                ctx.add_[a * Q + b] = (a + b) % Q;
                ctx.mul_[a * Q + b] = static_cast<int>((static_cast<long long>(a) * b) % Q);
            }
        }
        for (int a = 1; a < Q; ++a)
            for (int b = 1; b < Q; ++b)
                if (ctx.mul_[a * Q + b] == 1) ctx.inv_[a] = b;
        return ctx;
    }

    // Smallest irreducible monic modulus by base-p value of (c_0..c_{f-1}).
    std::vector<int> modulus;
    const int tail_count = static_cast<int>(int_pow(p, static_cast<unsigned>(f)).convert_to<int>());
    for (int code = 0; code < tail_count; ++code) {
        std::vector<int> cand = decode(code, ctx.p_, f);
        cand.push_back(1);  // monic
        if (is_irreducible(cand, ctx.p_)) {
            modulus = std::move(cand);
            break;
        }
    }
    ctx.modulus_.assign(modulus.begin(), modulus.end() - 1);

    for (int a = 0; a < Q; ++a) {
        const auto pa = decode(a, ctx.p_, f);
        std::vector<int> na(f);
        for (int i = 0; i < f; ++i) na[i] = (ctx.p_ - pa[i]) % ctx.p_;
        ctx.neg_[a] = encode(na, ctx.p_);
        for (int b = 0; b < Q; ++b) {
            const auto pb = decode(b, ctx.p_, f);
            std::vector<int> sum(f);
            for (int i = 0; i < f; ++i) sum[i] = (pa[i] + pb[i]) % ctx.p_;
            ctx.add_[a * Q + b] = encode(sum, ctx.p_);
            ctx.mul_[a * Q + b] = encode(poly_mul_mod(pa, pb, modulus, ctx.p_), ctx.p_);
        }
    }
    for (int a = 1; a < Q; ++a)
        for (int b = 1; b < Q; ++b)
            if (ctx.mul_[a * Q + b] == 1) ctx.inv_[a] = b;
    return ctx;
}

int rank(const FieldContext& ctx, const FqMatrix& m) {
    for (auto v : m.entries) ctx.check_element(v);
    FqMatrix w = m;
    int r = 0;
    for (int col = 0; col < w.cols && r < w.rows; ++col) {
        int pivot = -1;
        for (int i = r; i < w.rows; ++i)
            if (w.at(i, col) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(pivot, j));
        const int scale = ctx.inv(w.at(r, col));
        for (int j = col; j < w.cols; ++j)
            w.at(r, j) = static_cast<std::uint8_t>(ctx.mul(w.at(r, j), scale));
        for (int i = 0; i < w.rows; ++i) {
            if (i == r || w.at(i, col) == 0) continue;
            const int factor = w.at(i, col);
            for (int j = col; j < w.cols; ++j)
                w.at(i, j) = static_cast<std::uint8_t>(
                    ctx.sub(w.at(i, j), ctx.mul(factor, w.at(r, j))));
        }
        ++r;
    }
    return r;
}

FqMatrix subtract(const FieldContext& ctx, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        out.entries[i] = static_cast<std::uint8_t>(ctx.sub(a.entries[i], b.entries[i]));
    return out;
}

FqMatrix add(const FieldContext& ctx, const FqMatrix& a, const FqMatrix& b) {
    FqMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i)
        out.entries[i] = static_cast<std::uint8_t>(ctx.add(a.entries[i], b.entries[i]));
    return out;
}

std::uint64_t matrix_space_size(const FieldContext& ctx, int e, int d, std::uint64_t cap) {
    if (e < 1 || d < 1) throw BadParameters("matrix dimensions must be positive");
    const Int total = int_pow(ctx.q(), static_cast<unsigned>(e * d));
    if (total > Int(cap))
        throw EnumerationCapExceeded("q^(e*d) = " + total.str() + " exceeds cap " +
                                     std::to_string(cap));
    return total.convert_to<std::uint64_t>();
}

FqMatrix matrix_from_index(const FieldContext& ctx, int e, int d, std::uint64_t index) {
    FqMatrix m(e, d);
    const auto q = static_cast<std::uint64_t>(ctx.q());
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < d; ++j) {
            m.at(i, j) = static_cast<std::uint8_t>(index % q);
            index /= q;
        }
    return m;
}

std::uint64_t matrix_to_index(const FieldContext& ctx, const FqMatrix& m) {
    const auto q = static_cast<std::uint64_t>(ctx.q());
    std::uint64_t index = 0;
    for (int i = m.rows - 1; i >= 0; --i)
        for (int j = m.cols - 1; j >= 0; --j) {
            ctx.check_element(m.at(i, j));
            index = index * q + m.at(i, j);
        }
    return index;
}

std::vector<FqMatrix> enumerate_matrices(const FieldContext& ctx, int e, int d,
                                         std::uint64_t cap) {
    const std::uint64_t total = matrix_space_size(ctx, e, d, cap);
    std::vector<FqMatrix> out;
    out.reserve(total);
    for (std::uint64_t v = 0; v < total; ++v) out.push_back(matrix_from_index(ctx, e, d, v));
    return out;
}

}  // namespace drgforge
