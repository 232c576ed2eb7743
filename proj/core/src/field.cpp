#include "chern/field.hpp"
#include "chern/errors.hpp"

namespace chern {

bool is_prime_number(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
    if (p >= (1ull << 31))
        throw argument_error("prime field modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime_number(p))
        throw argument_error("prime field modulus must be prime, got " + std::to_string(p));
    return {FieldKind::prime, p};
}

std::string FieldDescriptor::to_string() const {
    if (kind == FieldKind::rationals) return "QQ";
    return "Fp " + std::to_string(p);
}

} // namespace chern
