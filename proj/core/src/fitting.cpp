#include "chern/fitting.hpp"

#include <gmpxx.h>

#include <sstream>

#include "chern/errors.hpp"

namespace chern {

namespace {

// mpq_class has no long long constructor; this platform is LP64.
mpq_class to_mpq(long long v) {
    static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");
    return mpq_class(static_cast<long>(v));
}

} // namespace

long long FunctionTable::value_at(long long n) const {
    internal_check(covers(n), "function table argument out of range");
    return values[static_cast<std::size_t>(n - start)];
}

long long binomial(long long n, int k) {
    if (k < 0 || n < 0) return 0;
    if (n < k) return 0;
    if (k > n - k) k = static_cast<int>(n - k);
    long long result = 1;
    for (int i = 0; i < k; ++i) {
        // Stays integral at every step: result is C(n-k+i+1, i+1) afterwards.
        result = result * (n - k + i + 1) / (i + 1);
    }
    return result;
}

long long eval_binomial_polynomial(const std::vector<long long>& coeffs, long long n) {
    internal_check(!coeffs.empty(), "empty coefficient vector");
    const int s = static_cast<int>(coeffs.size()) - 1;
    long long acc = 0;
    for (int i = 0; i <= s; ++i) {
        const long long term = coeffs[static_cast<std::size_t>(i)] * binomial(n + s - i, s - i);
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

std::vector<long long> finite_differences(const std::vector<long long>& values, int k) {
    std::vector<long long> out = values;
    for (int round = 0; round < k; ++round) {
        if (out.empty()) return out;
        std::vector<long long> next;
        next.reserve(out.size() - 1);
        for (std::size_t i = 0; i + 1 < out.size(); ++i) next.push_back(out[i + 1] - out[i]);
        out = std::move(next);
    }
    return out;
}

HilbertData fit_binomial_polynomial(const FunctionTable& table, int degree) {
    if (degree < 0) throw argument_error("polynomial degree must be nonnegative");
    const int s = degree;
    const std::size_t need = static_cast<std::size_t>(2 * s + 3);
    if (table.values.size() < need) {
        throw not_stabilized("table of " + std::to_string(table.values.size()) +
                                 " values is too short to fit and validate degree " +
                                 std::to_string(s),
                             table.top());
    }

    const std::size_t fit_lo = table.values.size() - static_cast<std::size_t>(s + 1);
    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(s + 1));
    for (int row = 0; row <= s; ++row) {
        const long long n = table.start + static_cast<long long>(fit_lo) + row;
        auto& r = m[static_cast<std::size_t>(row)];
        r.resize(static_cast<std::size_t>(s + 2));
        for (int i = 0; i <= s; ++i) {
            const long long entry = binomial(n + s - i, s - i);
            r[static_cast<std::size_t>(i)] = to_mpq((i % 2 == 0) ? entry : -entry);
        }
        r[static_cast<std::size_t>(s + 1)] =
            to_mpq(table.values[fit_lo + static_cast<std::size_t>(row)]);
    }

    // Gaussian elimination with exact rational arithmetic.  The coefficient
    // matrix evaluates a basis of degree-<=s polynomials at s+1 distinct
    // points, so it is invertible.
    const int ncols = s + 1;
    for (int col = 0; col < ncols; ++col) {
        int pivot = -1;
        for (int row = col; row <= s; ++row) {
            if (m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        }
        internal_check(pivot >= 0, "singular evaluation matrix in polynomial fit");
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
        auto& prow = m[static_cast<std::size_t>(col)];
        const mpq_class inv = prow[static_cast<std::size_t>(col)];
        for (int c = col; c <= s + 1; ++c) prow[static_cast<std::size_t>(c)] /= inv;
        for (int row = 0; row <= s; ++row) {
            if (row == col) continue;
            auto& r = m[static_cast<std::size_t>(row)];
            const mpq_class factor = r[static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (int c = col; c <= s + 1; ++c) {
                r[static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
            }
        }
    }

    std::vector<long long> coeffs(static_cast<std::size_t>(s + 1));
    for (int i = 0; i <= s; ++i) {
        const mpq_class& x = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(s + 1)];
        if (x.get_den() != 1) {
            std::ostringstream msg;
            msg << "fitted coefficient c_" << i << " = " << x
                << " is not an integer; the tabulated window is not yet polynomial";
            throw not_stabilized(msg.str(), table.top());
        }
        internal_check(x.get_num().fits_slong_p() != 0, "fitted coefficient overflows");
        coeffs[static_cast<std::size_t>(i)] = static_cast<long long>(x.get_num().get_si());
    }

    // Validation window: the s+2 entries immediately before the fit block.
    const std::size_t val_lo = fit_lo - static_cast<std::size_t>(s + 2);
    for (std::size_t idx = val_lo; idx < fit_lo; ++idx) {
        const long long n = table.start + static_cast<long long>(idx);
        if (eval_binomial_polynomial(coeffs, n) != table.values[idx]) {
            std::ostringstream msg;
            msg << "validation window disagrees at n = " << n << " (table "
                << table.values[idx] << ", polynomial " << eval_binomial_polynomial(coeffs, n)
                << ")";
            throw not_stabilized(msg.str(), table.top());
        }
    }

    HilbertData data;
    data.kind = table.kind;
    data.degree = s;
    data.coefficients = coeffs;
    data.leading_zero = (s > 0 && coeffs[0] == 0);
    data.table = table;

    long long post = table.start;
    for (long long n = table.top(); n >= table.start; --n) {
        if (eval_binomial_polynomial(coeffs, n) != table.value_at(n)) {
            post = n + 1;
            break;
        }
    }
    data.postulation = post;
    return data;
}

} // namespace chern
