#include "trinv/field.hpp"

#include <bit>
#include <vector>

namespace trinv {

namespace {

// remainder of bit-packed polynomial division over GF(2)
uint32_t mod2_rem(uint32_t a, uint32_t b) {
    const int db = std::bit_width(b) - 1;
    while (a != 0) {
        const int da = std::bit_width(a) - 1;
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

}  // namespace

FieldSpec::FieldSpec(unsigned degree, uint32_t modulus_bits)
    : m_(degree), modulus_(modulus_bits) {
    if (m_ < 1 || m_ > 16)
        fail(errc::bad_field_spec, "extension degree must be between 1 and 16");
    if ((modulus_ >> m_) != 1u)
        fail(errc::bad_field_spec, "modulus must be a degree-" + std::to_string(m_) +
                                       " polynomial (bit " + std::to_string(m_) + " set, none higher)");
    // Trial division by every polynomial of degree 1 .. m-1. For m = 1 the
    // range is empty: both t and t+1 give the degenerate GF(2) representation.
    for (uint32_t q = 2; q < (1u << m_); ++q) {
        if (mod2_rem(modulus_, q) == 0)
            fail(errc::bad_field_spec, "modulus is reducible over GF(2)");
    }
}

uint16_t FieldSpec::mul(uint16_t a, uint16_t b) const noexcept {
    uint32_t acc = 0;
    for (unsigned i = 0; i < m_; ++i) {
        if ((b >> i) & 1u) acc ^= static_cast<uint32_t>(a) << i;
    }
    for (unsigned d = 2 * m_ - 2; d + 1 > m_; --d) {
        if ((acc >> d) & 1u) acc ^= modulus_ << (d - m_);
    }
    return static_cast<uint16_t>(acc);
}

uint16_t FieldSpec::pow(uint16_t a, uint64_t e) const noexcept {
    uint16_t result = 1;
    uint16_t base = a;
    while (e != 0) {
        if (e & 1u) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

uint16_t FieldSpec::inverse(uint16_t a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of the zero field element");
    return pow(a, order() - 2);  // a^(2^m - 2); for m = 1 this is a^0 = 1
}

std::string FieldSpec::element_text(uint16_t bits) const {
    if (bits == 0) return "0";
    if (bits == 1) return "1";
    std::vector<std::string> parts;
    for (int i = static_cast<int>(m_) - 1; i >= 0; --i) {
        if (!((bits >> i) & 1)) continue;
        if (i == 0)
            parts.emplace_back("1");
        else if (i == 1)
            parts.emplace_back("g");
        else
            parts.emplace_back("g^" + std::to_string(i));
    }
    if (parts.size() == 1) return parts[0];
    std::string out = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " + ";
        out += parts[i];
    }
    out += ")";
    return out;
}

std::string FieldSpec::tag() const {
    if (m_ == 1) return "gf2";
    std::string bits;
    for (int i = static_cast<int>(m_); i >= 0; --i)
        bits += ((modulus_ >> i) & 1) ? '1' : '0';
    return "gf2^" + std::to_string(m_) + ":" + bits;
}

Field make_field(unsigned degree, uint32_t modulus_bits) {
    return std::make_shared<const FieldSpec>(degree, modulus_bits);
}

Field gf2() {
    static const Field f = make_field(1, 0b10);
    return f;
}

Field gf4() {
    static const Field f = make_field(2, 0b111);
    return f;
}

void require_same_field(const Field& a, const Field& b) {
    if (!same_field(a, b))
        fail(errc::mixed_fields, "operands belong to different fields (" + a->tag() + " vs " + b->tag() + ")");
}

FieldElement::FieldElement(Field field, uint16_t bits) : field_(std::move(field)), bits_(bits) {
    if (bits_ >= field_->order())
        fail(errc::bad_field_spec, "element bits exceed the field order");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return FieldElement(field_, field_->add(bits_, o.bits_));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(field_, o.field_);
    return FieldElement(field_, field_->mul(bits_, o.bits_));
}

FieldElement FieldElement::inverse() const {
    return FieldElement(field_, field_->inverse(bits_));
}

FieldElement FieldElement::pow(uint64_t e) const {
    return FieldElement(field_, field_->pow(bits_, e));
}

bool FieldElement::operator==(const FieldElement& o) const {
    return same_field(field_, o.field_) && bits_ == o.bits_;
}

}  // namespace trinv
