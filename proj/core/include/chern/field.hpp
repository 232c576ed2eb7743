#ifndef CHERN_FIELD_HPP
#define CHERN_FIELD_HPP

#include <cstdint>
#include <string>

namespace chern {

enum class FieldKind { rationals, prime };

// Coefficient field: the rationals, or Z/p for a prime p < 2^31.
struct FieldDescriptor {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t p = 0;

    static FieldDescriptor rationals() { return {FieldKind::rationals, 0}; }
    static FieldDescriptor prime(std::uint64_t p);

    bool operator==(const FieldDescriptor&) const = default;

    bool is_prime_field() const { return kind == FieldKind::prime; }
    std::string to_string() const;
};

bool is_prime_number(std::uint64_t n);

} // namespace chern

#endif
