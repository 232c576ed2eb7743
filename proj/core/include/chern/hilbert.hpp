#ifndef CHERN_HILBERT_HPP
#define CHERN_HILBERT_HPP

#include "chern/fitting.hpp"
#include "chern/ideal.hpp"

namespace chern {

struct HilbertOptions {
    // Largest table argument tried before giving up on stabilization.
    long long n_cap = 40;
};

// Krull dimension of R, as the degree of the maximal-adic growth function
// n -> ell(R/m^{n+1}); cached on the ring.
int krull_dimension(const RingPtr& ring, const HilbertOptions& opts = {});

// m-primary with exactly dim R generators.
bool is_parameter_ideal(const IdealHandle& q, const HilbertOptions& opts = {});

// H_I(n) = ell(R/I^{n+1}) for n = 0..n_max; requires I m-primary.
FunctionTable hilbert_samuel_table(const IdealHandle& I, long long n_max);

// N(I^n; R) for n = 1..n_max; requires I m-primary.
FunctionTable irreducible_table(const IdealHandle& I, long long n_max);

// Degree-d fit of the Hilbert-Samuel table, growing the table until the fit
// validates (coefficients e_0..e_d, e_1 the Chern coefficient).
HilbertData hilbert_samuel_data(const IdealHandle& I, const HilbertOptions& opts = {});

// Degree-(d-1) fit of the irreducible function table (coefficients f_0..f_{d-1}).
HilbertData irreducible_data(const IdealHandle& I, const HilbertOptions& opts = {});

long long multiplicity(const IdealHandle& I, const HilbertOptions& opts = {});       // e_0
long long chern_coefficient(const IdealHandle& I, const HilbertOptions& opts = {});  // e_1
long long irreducible_multiplicity(const IdealHandle& I,
                                   const HilbertOptions& opts = {});                 // f_0

} // namespace chern

#endif
