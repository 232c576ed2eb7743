#include "chern/ring.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "chern/errors.hpp"

namespace chern {

namespace {

bool valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

} // namespace

RingPresentation::RingPresentation(FieldDescriptor field, std::vector<std::string> variables,
                                   std::vector<Polynomial> defining,
                                   std::vector<std::uint32_t> weights, MonomialOrder order)
    : field_(field),
      variables_(std::move(variables)),
      weights_(std::move(weights)),
      order_(order) {
    if (variables_.empty()) {
        throw argument_error("a ring needs at least one variable");
    }
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!valid_variable_name(v)) {
            throw argument_error("invalid variable name '" + v + "'");
        }
        if (!seen.insert(v).second) {
            throw argument_error("duplicate variable name '" + v + "'");
        }
    }
    if (weights_.empty()) {
        weights_.assign(variables_.size(), 1);
    }
    if (weights_.size() != variables_.size()) {
        throw argument_error("weight list size does not match the variable count");
    }
    for (auto w : weights_) {
        if (w == 0) throw argument_error("variable weights must be positive");
    }

    defining_.reserve(defining.size());
    for (auto& f : defining) {
        if (f.field() != field_ || f.nvars() != variables_.size()) {
            throw structural_error("defining polynomial does not live in the ambient ring");
        }
        if (f.is_zero()) continue;
        if (!f.homogeneous_degree(weights_).has_value()) {
            throw argument_error("defining polynomial '" + f.to_string(variables_) +
                                 "' is not homogeneous for the given weights");
        }
        defining_.push_back(f.with_order(order_));
    }
    defining_gb_ = groebner(defining_, order_);
    if (defining_gb_.is_unit()) {
        throw argument_error("the defining ideal is the unit ideal; the quotient ring is zero");
    }
}

bool RingPresentation::weighted() const {
    for (auto w : weights_) {
        if (w != 1) return true;
    }
    return false;
}

std::optional<std::size_t> RingPresentation::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) return i;
    }
    return std::nullopt;
}

Polynomial RingPresentation::variable(std::size_t index) const {
    internal_check(index < variables_.size(), "variable index out of range");
    return Polynomial::term(field_, order_, Monomial::variable(nvars(), index),
                            Scalar::one(field_));
}

Polynomial RingPresentation::constant(const Scalar& c) const {
    return Polynomial::constant(field_, nvars(), order_, c);
}

Polynomial RingPresentation::zero() const { return Polynomial::zero(field_, nvars(), order_); }

std::optional<std::uint64_t> RingPresentation::graded_degree(const Polynomial& f) const {
    return f.homogeneous_degree(weights_);
}

std::optional<int> RingPresentation::cached_dimension() const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    return dim_cache_;
}

void RingPresentation::cache_dimension(int d) const {
    std::lock_guard<std::mutex> lock(cache_mu_);
    if (!dim_cache_.has_value()) dim_cache_ = d;
}

std::string RingPresentation::describe() const {
    std::ostringstream out;
    out << field_.to_string() << "[";
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (i) out << ",";
        out << variables_[i];
    }
    out << "]";
    if (!defining_.empty()) {
        out << "/(";
        for (std::size_t i = 0; i < defining_.size(); ++i) {
            if (i) out << ", ";
            out << defining_[i].to_string(variables_);
        }
        out << ")";
    }
    if (weighted()) {
        out << " weights (";
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            if (i) out << ",";
            out << weights_[i];
        }
        out << ")";
    }
    return out.str();
}

bool same_ring(const RingPresentation& a, const RingPresentation& b) {
    if (&a == &b) return true;
    if (a.field() != b.field()) return false;
    if (a.variable_names() != b.variable_names()) return false;
    if (a.weights() != b.weights()) return false;
    if (!(a.default_order() == b.default_order())) return false;
    const auto& ga = a.defining_basis().elements;
    const auto& gb = b.defining_basis().elements;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i) {
        if (!(ga[i] == gb[i])) return false;
    }
    return true;
}

} // namespace chern
