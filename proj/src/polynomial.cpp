#include "trinv/polynomial.hpp"

#include <ostream>

namespace trinv {

const VarNames& xyzw_names() {
    static const VarNames n{"x", "y", "z", "w"};
    return n;
}

const VarNames& slot_names() {
    static const VarNames n{"g1", "g2", "g3", "g4"};
    return n;
}

const VarNames& eta_slot_names() {
    static const VarNames n{"x", "y", "t", "w"};
    return n;
}

uint32_t Monomial::total_degree() const {
    uint64_t sum = 0;
    for (uint32_t e : exp) sum += e;
    if (sum > UINT32_MAX) fail(errc::exponent_overflow, "total degree exceeds the exponent range");
    return static_cast<uint32_t>(sum);
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) {
        const uint64_t sum = static_cast<uint64_t>(exp[i]) + o.exp[i];
        if (sum > UINT32_MAX)
            fail(errc::exponent_overflow, "exponent addition overflows");
        r.exp[i] = static_cast<uint32_t>(sum);
    }
    return r;
}

Monomial Monomial::power(uint32_t k) const {
    Monomial r;
    for (int i = 0; i < 4; ++i) {
        const uint64_t prod = static_cast<uint64_t>(exp[i]) * k;
        if (prod > UINT32_MAX)
            fail(errc::exponent_overflow, "exponent multiplication overflows");
        r.exp[i] = static_cast<uint32_t>(prod);
    }
    return r;
}

Polynomial Polynomial::constant(const Field& f, uint16_t bits) {
    Polynomial p(f);
    if (bits != 0) {
        if (bits >= f->order()) fail(errc::bad_field_spec, "coefficient bits exceed the field order");
        p.terms_.emplace(Monomial{}, bits);
    }
    return p;
}

Polynomial Polynomial::variable(const Field& f, Var v, uint32_t e) {
    Monomial m;
    m.exp[static_cast<int>(v)] = e;
    return monomial(f, m);
}

Polynomial Polynomial::monomial(const Field& f, const Monomial& m, uint16_t coeff_bits) {
    Polynomial p(f);
    if (coeff_bits != 0) {
        if (coeff_bits >= f->order()) fail(errc::bad_field_spec, "coefficient bits exceed the field order");
        p.terms_.emplace(m, coeff_bits);
    }
    return p;
}

Polynomial Polynomial::from_terms(const Field& f,
                                  std::initializer_list<std::pair<Monomial, uint16_t>> terms) {
    Polynomial p(f);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

FieldElement Polynomial::constant_term() const {
    return coefficient(Monomial{});
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return FieldElement(field_, it == terms_.end() ? 0 : it->second);
}

std::optional<uint32_t> Polynomial::degree(Var v) const {
    if (terms_.empty()) return std::nullopt;
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[v]);
    return d;
}

std::optional<uint32_t> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

std::optional<Var> Polynomial::max_variable() const {
    std::optional<Var> out;
    for (const auto& [m, c] : terms_) {
        for (int v = 3; v >= 0; --v) {
            if (m.exp[v] == 0) continue;
            if (!out || static_cast<int>(*out) < v) out = static_cast<Var>(v);
            break;
        }
    }
    return out;
}

bool Polynomial::lives_in(int var_count) const {
    for (const auto& [m, c] : terms_) {
        for (int v = var_count; v < 4; ++v) {
            if (m.exp[v] != 0) return false;
        }
    }
    return true;
}

void Polynomial::add_term(const Monomial& m, uint16_t bits) {
    if (bits == 0) return;
    auto [it, inserted] = terms_.emplace(m, bits);
    if (!inserted) {
        it->second ^= bits;  // characteristic two: coefficient addition is XOR
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_field(field_, o.field_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    require_same_field(field_, o.field_);
    Polynomial r(field_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            r.add_term(ma.times(mb), field_->mul(ca, cb));
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::pow(uint32_t k) const {
    Polynomial result = one(field_);
    Polynomial base = *this;
    while (k != 0) {
        if (k & 1u) result *= base;
        if (k >>= 1) base *= base;
    }
    return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return same_field(field_, o.field_) && terms_ == o.terms_;
}

std::string Polynomial::str(const VarNames& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string vars;
        for (int v = 0; v < 4; ++v) {
            if (m.exp[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (m.exp[v] > 1) vars += "^" + std::to_string(m.exp[v]);
        }
        if (vars.empty()) {
            out += field_->element_text(c);
        } else if (c == 1) {
            out += vars;
        } else {
            out += field_->element_text(c) + "*" + vars;
        }
    }
    return out;
}

Polynomial operator*(const FieldElement& c, const Polynomial& p) {
    return Polynomial::constant(c) * p;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

Polynomial substitute(const Polynomial& p, const std::array<Polynomial, 4>& images) {
    const Field& f = p.field();
    for (const auto& im : images) require_same_field(f, im.field());

    std::array<std::vector<Polynomial>, 4> powers;
    auto power_of = [&](int v, uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::one(f));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };

    Polynomial acc(f);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(f, c);
        for (int v = 0; v < 4; ++v) {
            if (m.exp[v] > 0) term *= power_of(v, m.exp[v]);
        }
        acc += term;
    }
    return acc;
}

std::vector<Polynomial> coeffs_in(const Polynomial& p, Var v) {
    if (p.is_zero()) return {};
    const int vi = static_cast<int>(v);
    std::vector<Polynomial> out(*p.degree(v) + 1, Polynomial::zero(p.field()));
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        const uint32_t i = rest.exp[vi];
        rest.exp[vi] = 0;
        out[i] += Polynomial::monomial(p.field(), rest, c);
    }
    return out;
}

Polynomial coeff_of_power(const Polynomial& p, Var v, uint32_t k) {
    const int vi = static_cast<int>(v);
    Polynomial out(p.field());
    for (const auto& [m, c] : p.terms()) {
        if (m.exp[vi] != k) continue;
        Monomial rest = m;
        rest.exp[vi] = 0;
        out += Polynomial::monomial(p.field(), rest, c);
    }
    return out;
}

Polynomial exact_div(const Polynomial& p, const Polynomial& divisor) {
    require_same_field(p.field(), divisor.field());
    if (divisor.is_zero()) fail(errc::division_by_zero, "exact division by the zero polynomial");
    const Field& f = p.field();
    if (p.is_zero()) return Polynomial::zero(f);

    const auto v = divisor.max_variable();
    if (!v) {
        // constant divisor: scale every coefficient
        return FieldElement(f, f->inverse(divisor.constant_term().bits())) * p;
    }

    const uint32_t dq = *divisor.degree(*v);
    const Polynomial lead_q = coeff_of_power(divisor, *v, dq);  // free of *v and of anything above
    Polynomial rem = p;
    Polynomial quot(f);
    while (!rem.is_zero()) {
        const uint32_t dr = *rem.degree(*v);
        if (dr < dq) fail(errc::not_divisible, "nonzero remainder in exact division");
        const Polynomial lead_r = coeff_of_power(rem, *v, dr);
        const Polynomial h = exact_div(lead_r, lead_q) * Polynomial::variable(f, *v, dr - dq);
        quot += h;
        rem += h * divisor;  // leading v-term cancels exactly, so the v-degree drops
    }
    return quot;
}

namespace {

// dense univariate helpers for the gcd in k[x]; index i holds the
// coefficient of x^i, trailing zeros trimmed
using Dense = std::vector<uint16_t>;

void dense_trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense to_dense_x(const Polynomial& p) {
    Dense out;
    if (p.is_zero()) return out;
    out.assign(*p.degree(Var::x) + 1, 0);
    for (const auto& [m, c] : p.terms()) out[m.exp[0]] = c;
    return out;
}

Polynomial from_dense_x(const Field& f, const Dense& a) {
    Polynomial p(f);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0) p += Polynomial::monomial(f, Monomial{static_cast<uint32_t>(i), 0, 0, 0}, a[i]);
    }
    return p;
}

Dense dense_mod(const FieldSpec& k, Dense a, const Dense& b) {
    const uint16_t lead_inv = k.inverse(b.back());
    while (a.size() >= b.size()) {
        const uint16_t q = k.mul(a.back(), lead_inv);
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] ^= k.mul(q, b[i]);
        dense_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Dense dense_gcd_monic(const FieldSpec& k, Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    while (!b.empty()) {
        Dense r = dense_mod(k, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    const uint16_t lead_inv = k.inverse(a.back());
    for (auto& c : a) c = k.mul(c, lead_inv);
    return a;
}

}  // namespace

GcdFormIII gcd_form_iii(const Polynomial& alpha, const Polynomial& beta) {
    require_same_field(alpha.field(), beta.field());
    if (alpha.is_zero() || beta.is_zero())
        fail(errc::zero_input, "gcd parameters must both be nonzero");
    if (!alpha.lives_in(1)) fail(errc::wrong_subring, "alpha must lie in k[x]");
    if (!beta.lives_in(2)) fail(errc::wrong_subring, "beta must lie in k[x,y]");

    const Field& f = alpha.field();
    const FieldSpec& k = *f;

    // content of beta along y: the gcd in k[x] of its y-coefficients
    Dense content;
    for (const Polynomial& lam : coeffs_in(beta, Var::y)) {
        if (lam.is_zero()) continue;
        Dense d = to_dense_x(lam);
        content = content.empty() ? d : dense_gcd_monic(k, std::move(content), std::move(d));
    }

    Dense d = dense_gcd_monic(k, to_dense_x(alpha), std::move(content));
    GcdFormIII out{from_dense_x(f, d), Polynomial(f), Polynomial(f)};
    out.a = exact_div(alpha, out.d);
    out.b = exact_div(beta, out.d);
    return out;
}

}  // namespace trinv
