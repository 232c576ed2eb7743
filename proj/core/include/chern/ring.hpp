#ifndef CHERN_RING_HPP
#define CHERN_RING_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "chern/field.hpp"
#include "chern/groebner.hpp"
#include "chern/polynomial.hpp"

namespace chern {

// Presentation of a standard (possibly weighted) graded algebra R = A/b where
// A = k[x_1..x_n] and b is an ideal generated by weighted-homogeneous
// polynomials.  Elements of R are represented by ambient polynomials; ideals
// of R are represented by their full preimages in A.
class RingPresentation {
public:
    RingPresentation(FieldDescriptor field, std::vector<std::string> variables,
                     std::vector<Polynomial> defining = {},
                     std::vector<std::uint32_t> weights = {},
                     MonomialOrder order = MonomialOrder::grevlex());

    const FieldDescriptor& field() const { return field_; }
    std::size_t nvars() const { return variables_.size(); }
    const std::vector<std::string>& variable_names() const { return variables_; }
    const std::vector<std::uint32_t>& weights() const { return weights_; }
    const MonomialOrder& default_order() const { return order_; }

    // Generators of the defining ideal b (possibly empty).
    const std::vector<Polynomial>& defining_generators() const { return defining_; }
    // Reduced Groebner basis of b under the default order.
    const GroebnerBasis& defining_basis() const { return defining_gb_; }

    bool is_polynomial_ring() const { return defining_.empty(); }
    bool weighted() const;

    std::optional<std::size_t> variable_index(const std::string& name) const;
    Polynomial variable(std::size_t index) const;
    Polynomial constant(const Scalar& c) const;
    Polynomial zero() const;

    // Weighted-homogeneity of the residue class: degree if every term has the
    // same weighted degree, nullopt otherwise.
    std::optional<std::uint64_t> graded_degree(const Polynomial& f) const;

    // Cached Krull dimension (set by the dimension computation).
    std::optional<int> cached_dimension() const;
    void cache_dimension(int d) const;

    std::string describe() const;

private:
    FieldDescriptor field_;
    std::vector<std::string> variables_;
    std::vector<std::uint32_t> weights_;
    MonomialOrder order_;
    std::vector<Polynomial> defining_;
    GroebnerBasis defining_gb_;

    mutable std::mutex cache_mu_;
    mutable std::optional<int> dim_cache_;
};

using RingPtr = std::shared_ptr<const RingPresentation>;

// Rings are compatible when they present the same algebra the same way.
bool same_ring(const RingPresentation& a, const RingPresentation& b);

} // namespace chern

#endif
