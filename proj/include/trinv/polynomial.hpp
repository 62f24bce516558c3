#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trinv/field.hpp"

namespace trinv {

// The four variables of k[x, y, z, w] in ascending significance. Abstract
// slot polynomials (the eta and gamma parameters of the canonical forms)
// reuse the same positions: g1..g4 occupy x..w, the t slot occupies z.
enum class Var : int { x = 0, y = 1, z = 2, w = 3 };

inline constexpr int kVarCount = 4;

using VarNames = std::array<std::string, 4>;
const VarNames& xyzw_names();      // {"x", "y", "z", "w"}
const VarNames& slot_names();      // {"g1", "g2", "g3", "g4"}
const VarNames& eta_slot_names();  // {"x", "y", "t", "w"}

struct Monomial {
    std::array<uint32_t, 4> exp{0, 0, 0, 0};

    Monomial() = default;
    Monomial(uint32_t ex, uint32_t ey, uint32_t ez, uint32_t ew) : exp{ex, ey, ez, ew} {}

    uint32_t operator[](Var v) const { return exp[static_cast<int>(v)]; }
    uint32_t total_degree() const;
    bool is_unit() const { return exp == std::array<uint32_t, 4>{0, 0, 0, 0}; }

    Monomial times(const Monomial& o) const;  // ExponentOverflow on wraparound
    Monomial power(uint32_t k) const;

    bool operator==(const Monomial&) const = default;
};

// Canonical term order: lexicographic with w > z > y > x, largest term
// first, so map iteration order is printing order.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        for (int i = 3; i >= 0; --i) {
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
        }
        return false;
    }
};

// Sparse polynomial over GF(2^m) in up to four variables. Zero-coefficient
// terms are never stored, so equality is equality of term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, uint16_t, TermOrder>;

    explicit Polynomial(Field field) : field_(std::move(field)) {}

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial one(const Field& f) { return constant(f, 1); }
    static Polynomial constant(const Field& f, uint16_t bits);
    static Polynomial constant(const FieldElement& c) { return constant(c.field(), c.bits()); }
    static Polynomial variable(const Field& f, Var v, uint32_t e = 1);
    static Polynomial monomial(const Field& f, const Monomial& m, uint16_t coeff_bits = 1);
    static Polynomial from_terms(const Field& f,
                                 std::initializer_list<std::pair<Monomial, uint16_t>> terms);

    const Field& field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    size_t term_count() const noexcept { return terms_.size(); }
    bool is_constant() const noexcept;
    FieldElement constant_term() const;
    FieldElement coefficient(const Monomial& m) const;

    std::optional<uint32_t> degree(Var v) const;  // nullopt for the zero polynomial
    std::optional<uint32_t> total_degree() const;
    std::optional<Var> max_variable() const;  // highest variable that occurs
    bool lives_in(int var_count) const;       // only variables with index < var_count occur

    Polynomial& operator+=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial pow(uint32_t k) const;
    bool operator==(const Polynomial& o) const;

    std::string str() const { return str(xyzw_names()); }
    std::string str(const VarNames& names) const;

private:
    void add_term(const Monomial& m, uint16_t bits);

    Field field_;
    TermMap terms_;
};

Polynomial operator*(const FieldElement& c, const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Simultaneous substitution: the image of x_i is images[i]. A ring
// homomorphism, which the property tests rely on.
Polynomial substitute(const Polynomial& p, const std::array<Polynomial, 4>& images);

// Coefficient ladder of p along v: entry i is the coefficient of v^i, a
// polynomial free of v. Empty for the zero polynomial.
std::vector<Polynomial> coeffs_in(const Polynomial& p, Var v);
Polynomial coeff_of_power(const Polynomial& p, Var v, uint32_t k);

// Exact division: returns q with p = q * divisor, NotDivisible if no such
// polynomial exists. Recursive single-variable division along the highest
// variable present in the divisor.
Polynomial exact_div(const Polynomial& p, const Polynomial& divisor);

// gcd data for the third canonical form: d is the monic gcd, taken inside
// k[x], of alpha in k[x] and the content of beta in k[x,y] along y;
// alpha = d * a and beta = d * b.
struct GcdFormIII {
    Polynomial d, a, b;
};
GcdFormIII gcd_form_iii(const Polynomial& alpha, const Polynomial& beta);

}  // namespace trinv
