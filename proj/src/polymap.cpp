#include "trinv/polymap.hpp"

namespace trinv {

PolyMap::PolyMap(Field field, std::array<Polynomial, 4> images)
    : field_(std::move(field)), images_(std::move(images)) {
    for (const auto& im : images_) require_same_field(field_, im.field());
}

PolyMap PolyMap::identity(const Field& f) {
    return PolyMap(f, {Polynomial::variable(f, Var::x), Polynomial::variable(f, Var::y),
                       Polynomial::variable(f, Var::z), Polynomial::variable(f, Var::w)});
}

bool PolyMap::operator==(const PolyMap& o) const {
    return same_field(field_, o.field_) && images_ == o.images_;
}

std::string PolyMap::str() const {
    std::string out;
    for (int v = 0; v < 4; ++v) {
        if (v) out += "; ";
        out += xyzw_names()[v] + " -> " + images_[v].str();
    }
    return out;
}

Polynomial apply(const PolyMap& s, const Polynomial& p) {
    require_same_field(s.field(), p.field());
    return substitute(p, s.images());
}

PolyMap compose(const PolyMap& s, const PolyMap& t) {
    require_same_field(s.field(), t.field());
    std::array<Polynomial, 4> images{apply(s, t.image(Var::x)), apply(s, t.image(Var::y)),
                                     apply(s, t.image(Var::z)), apply(s, t.image(Var::w))};
    return PolyMap(s.field(), std::move(images));
}

TriangularParts triangular_parts(const PolyMap& s) {
    const Field& f = s.field();
    std::array<uint16_t, 4> lambdas{0, 0, 0, 0};
    std::array<Polynomial, 4> phis{Polynomial(f), Polynomial(f), Polynomial(f), Polynomial(f)};

    for (int i = 0; i < 4; ++i) {
        Monomial unit;
        unit.exp[i] = 1;
        for (const auto& [m, c] : s.image(static_cast<Var>(i)).terms()) {
            if (m == unit) {
                lambdas[i] = c;
                continue;
            }
            for (int v = i; v < 4; ++v) {
                if (m.exp[v] != 0)
                    fail(errc::not_triangular,
                         "image of " + xyzw_names()[i] + " (variable " + std::to_string(i + 1) +
                             ") contains " + xyzw_names()[v] + " outside the linear term");
            }
            phis[i] += Polynomial::monomial(f, m, c);
        }
        if (lambdas[i] == 0)
            fail(errc::not_triangular, "image of " + xyzw_names()[i] + " (variable " +
                                           std::to_string(i + 1) + ") has no " + xyzw_names()[i] +
                                           " term");
    }

    return TriangularParts{{FieldElement(f, lambdas[0]), FieldElement(f, lambdas[1]),
                            FieldElement(f, lambdas[2]), FieldElement(f, lambdas[3])},
                           std::move(phis)};
}

bool is_triangular(const PolyMap& s) {
    try {
        triangular_parts(s);
        return true;
    } catch (const Error& e) {
        if (e.code() == errc::not_triangular) return false;
        throw;
    }
}

bool is_involution(const PolyMap& s) {
    return compose(s, s) == PolyMap::identity(s.field());
}

PolyMap invert_triangular(const PolyMap& s) {
    const TriangularParts parts = triangular_parts(s);
    const Field& f = s.field();

    // Back substitution: phi_i only involves variables below x_i, whose
    // inverse images are already final. Subtraction is addition here.
    std::array<Polynomial, 4> inv{Polynomial::variable(f, Var::x), Polynomial::variable(f, Var::y),
                                  Polynomial::variable(f, Var::z), Polynomial::variable(f, Var::w)};
    for (int i = 0; i < 4; ++i) {
        const Polynomial shifted = substitute(parts.phis[i], inv);
        inv[i] = parts.lambdas[i].inverse() * (Polynomial::variable(f, static_cast<Var>(i)) + shifted);
    }
    return PolyMap(f, std::move(inv));
}

PolyMap conjugate(const PolyMap& phi, const PolyMap& phi_inverse, const PolyMap& t) {
    require_same_field(phi.field(), t.field());
    const PolyMap id = PolyMap::identity(phi.field());
    if (!(compose(phi, phi_inverse) == id) || !(compose(phi_inverse, phi) == id))
        fail(errc::not_invertible, "supplied maps are not a mutually inverse pair");
    return compose(phi, compose(t, phi_inverse));
}

PolyMap conjugate(const PolyMap& phi, const PolyMap& t) {
    try {
        return compose(phi, compose(t, invert_triangular(phi)));
    } catch (const Error& e) {
        if (e.code() == errc::not_triangular)
            fail(errc::not_invertible,
                 "conjugating map is not triangular; supply an explicit inverse");
        throw;
    }
}

}  // namespace trinv
