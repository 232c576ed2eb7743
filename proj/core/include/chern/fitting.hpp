#ifndef CHERN_FITTING_HPP
#define CHERN_FITTING_HPP

#include <string>
#include <vector>

namespace chern {

// Integer-valued function of n tabulated on consecutive arguments
// start, start+1, ..., start+values.size()-1.
struct FunctionTable {
    std::string kind;
    long long start = 0;
    std::vector<long long> values;

    long long top() const { return start + static_cast<long long>(values.size()) - 1; }
    long long value_at(long long n) const;
    bool covers(long long n) const {
        return n >= start && n <= top();
    }
};

// Coefficients of a numerical polynomial written in the binomial basis
//   P(n) = sum_{i=0}^{s} (-1)^i c_i * C(n + s - i, s - i),
// together with the least argument from which the table agrees with P.
struct HilbertData {
    std::string kind;
    int degree = 0;
    std::vector<long long> coefficients; // c_0 .. c_degree
    long long postulation = 0;
    bool leading_zero = false; // fitted leading coefficient c_0 is zero
    FunctionTable table;
};

long long binomial(long long n, int k);

long long eval_binomial_polynomial(const std::vector<long long>& coeffs, long long n);

// k-th forward difference sequence of the table values.
std::vector<long long> finite_differences(const std::vector<long long>& values, int k);

// Fit a degree-s numerical polynomial to the tail of the table: solve exactly
// on the last s+1 entries, then demand agreement on the s+2 entries before
// them.  Throws not_stabilized when the table is too short, the solution is
// not integral, or the validation window disagrees.
HilbertData fit_binomial_polynomial(const FunctionTable& table, int degree);

} // namespace chern

#endif
