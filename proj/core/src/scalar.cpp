#include "chern/scalar.hpp"

#include "chern/errors.hpp"

namespace chern {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw argument_error("division by zero in F_" + std::to_string(p));
    return mod_pow(a, p - 2, p);
}

} // namespace

Scalar Scalar::zero(const FieldDescriptor& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldDescriptor& f) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals)
        s.rat_ = 1;
    else
        s.res_ = f.p > 1 ? 1 : 0;
    return s;
}

Scalar Scalar::from_integer(const FieldDescriptor& f, long long n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals) {
        s.rat_ = mpq_class(static_cast<long>(n));
    } else {
        long long r = n % static_cast<long long>(f.p);
        if (r < 0) r += static_cast<long long>(f.p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_mpz(const FieldDescriptor& f, const mpz_class& n) {
    Scalar s;
    s.field_ = f;
    if (f.kind == FieldKind::rationals) {
        s.rat_ = mpq_class(n);
    } else {
        mpz_class r = n % mpz_class(static_cast<unsigned long>(f.p));
        if (r < 0) r += static_cast<unsigned long>(f.p);
        s.res_ = r.get_ui();
    }
    return s;
}

Scalar Scalar::from_string(const FieldDescriptor& f, const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(text, 10) != 0)
            throw argument_error("malformed integer literal '" + text + "'");
        return from_mpz(f, n);
    }
    mpz_class num, den;
    if (num.set_str(text.substr(0, slash), 10) != 0 ||
        den.set_str(text.substr(slash + 1), 10) != 0)
        throw argument_error("malformed rational literal '" + text + "'");
    if (den == 0) throw argument_error("zero denominator in '" + text + "'");
    Scalar n = from_mpz(f, num);
    Scalar d = from_mpz(f, den);
    return n / d;
}

Scalar Scalar::rational(const mpq_class& v) {
    Scalar s;
    s.rat_ = v;
    s.rat_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return field_.kind == FieldKind::rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.kind == FieldKind::rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw structural_error("scalar field mismatch: " + field_.to_string() +
                               " vs " + rhs.field_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.kind == FieldKind::rationals)
        s.rat_ = -rat_;
    else if (res_ != 0)
        s.res_ = field_.p - res_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.kind == FieldKind::rationals) {
        rat_ += rhs.rat_;
    } else {
        res_ += rhs.res_;
        if (res_ >= field_.p) res_ -= field_.p;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.kind == FieldKind::rationals) {
        rat_ -= rhs.rat_;
    } else {
        res_ += field_.p - rhs.res_;
        if (res_ >= field_.p) res_ -= field_.p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.kind == FieldKind::rationals)
        rat_ *= rhs.rat_;
    else
        res_ = res_ * rhs.res_ % field_.p;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    check_same_field(rhs);
    if (field_.kind == FieldKind::rationals) {
        if (rhs.rat_ == 0) throw argument_error("division by zero scalar");
        rat_ /= rhs.rat_;
    } else {
        res_ = res_ * mod_inverse(rhs.res_, field_.p) % field_.p;
    }
    return *this;
}

Scalar Scalar::inverse() const {
    return one(field_) / *this;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.kind == FieldKind::rationals ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

const mpq_class& Scalar::rational_value() const {
    if (field_.kind != FieldKind::rationals)
        throw internal_error("rational_value() on prime-field scalar");
    return rat_;
}

std::uint64_t Scalar::residue() const {
    if (field_.kind != FieldKind::prime)
        throw internal_error("residue() on rational scalar");
    return res_;
}

bool Scalar::is_integral() const {
    if (field_.kind == FieldKind::prime) return true;
    return rat_.get_den() == 1;
}

std::string Scalar::to_string() const {
    if (field_.kind == FieldKind::prime) return std::to_string(res_);
    return rat_.get_str();
}

} // namespace chern
