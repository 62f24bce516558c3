#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "trinv/errors.hpp"

namespace trinv {

// GF(2^m) for 1 <= m <= 16: residues of GF(2)[t] modulo an irreducible
// degree-m polynomial. An element is the bit pattern of its residue,
// bit i = coefficient of t^i. Addition is XOR; the characteristic is two
// everywhere in this library.
class FieldSpec {
public:
    // modulus_bits encodes the modulus polynomial; bit m must be set and no
    // higher bit may be. Throws BadFieldSpec unless the modulus is
    // irreducible over GF(2) (checked by trial division, cheap for m <= 16).
    FieldSpec(unsigned degree, uint32_t modulus_bits);

    unsigned degree() const noexcept { return m_; }
    uint32_t modulus_bits() const noexcept { return modulus_; }
    uint32_t order() const noexcept { return 1u << m_; }

    bool operator==(const FieldSpec& o) const noexcept {
        return m_ == o.m_ && modulus_ == o.modulus_;
    }

    // arithmetic on raw residue bits
    uint16_t add(uint16_t a, uint16_t b) const noexcept { return a ^ b; }
    uint16_t mul(uint16_t a, uint16_t b) const noexcept;
    uint16_t pow(uint16_t a, uint64_t e) const noexcept;
    uint16_t inverse(uint16_t a) const;  // DivisionByZero on 0

    // canonical literal: "0", "1", "g", "g^3", "(g^2 + g + 1)", ...
    std::string element_text(uint16_t bits) const;

    // "gf2" for m = 1, otherwise "gf2^m:bits" with the modulus in binary,
    // most significant bit first. parse_field_tag accepts this back.
    std::string tag() const;

private:
    unsigned m_;
    uint32_t modulus_;
};

using Field = std::shared_ptr<const FieldSpec>;

Field make_field(unsigned degree, uint32_t modulus_bits);
Field gf2();
Field gf4();  // GF(4) as GF(2)[t]/(t^2 + t + 1)

inline bool same_field(const Field& a, const Field& b) {
    return a == b || (a && b && *a == *b);
}
void require_same_field(const Field& a, const Field& b);

class FieldElement {
public:
    FieldElement(Field field, uint16_t bits);

    const Field& field() const noexcept { return field_; }
    uint16_t bits() const noexcept { return bits_; }
    bool is_zero() const noexcept { return bits_ == 0; }
    bool is_one() const noexcept { return bits_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(uint64_t e) const;
    bool operator==(const FieldElement& o) const;

    std::string str() const { return field_->element_text(bits_); }

private:
    Field field_;
    uint16_t bits_;
};

}  // namespace trinv
