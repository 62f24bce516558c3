#include "trinv/canon.hpp"

namespace trinv {

namespace {

struct FormIIIData {
    GcdFormIII gcd;
    std::array<Polynomial, 4> f;  // the invariant generators f1..f4
    Polynomial beta_at_f2;
};

FormIIIData form_iii_data(const Polynomial& alpha, const Polynomial& beta) {
    GcdFormIII gcd = gcd_form_iii(alpha, beta);  // validates subrings and nonzero inputs
    const Field& k = alpha.field();
    const Polynomial x = Polynomial::variable(k, Var::x);
    const Polynomial y = Polynomial::variable(k, Var::y);
    const Polynomial z = Polynomial::variable(k, Var::z);
    const Polynomial w = Polynomial::variable(k, Var::w);
    const Polynomial f2 = y.pow(2) + alpha * y;
    const std::array<Polynomial, 4> at_f2{x, f2, z, w};  // y position carries f2
    const Polynomial beta_at_f2 = substitute(beta, at_f2);
    const Polynomial f3 = z.pow(2) + beta_at_f2 * z;
    const Polynomial f4 = gcd.a * z + substitute(gcd.b, at_f2) * y;
    return FormIIIData{std::move(gcd), {x, f2, f3, f4}, beta_at_f2};
}

PolyMap swap_yz(const Field& k) {
    return PolyMap(k, {Polynomial::variable(k, Var::x), Polynomial::variable(k, Var::z),
                       Polynomial::variable(k, Var::y), Polynomial::variable(k, Var::w)});
}

TriangularParts parts_or_violation(const PolyMap& m, const char* what) {
    try {
        return triangular_parts(m);
    } catch (const Error& e) {
        throw InternalInvariantViolation(std::string(what) + ": " + e.what());
    }
}

}  // namespace

PolyMap make_form_i(const Polynomial& f) {
    if (!f.lives_in(3)) fail(errc::wrong_subring, "f must lie in k[x,y,z]");
    const Field& k = f.field();
    return PolyMap(k, {Polynomial::variable(k, Var::x), Polynomial::variable(k, Var::y),
                       Polynomial::variable(k, Var::z), Polynomial::variable(k, Var::w) + f});
}

PolyMap make_form_ii(const Polynomial& xi, const Polynomial& eta) {
    require_same_field(xi.field(), eta.field());
    if (xi.is_zero()) fail(errc::zero_input, "xi must be nonzero");
    if (!xi.lives_in(2)) fail(errc::wrong_subring, "xi must lie in k[x,y]");
    if (!eta.lives_in(3)) fail(errc::wrong_subring, "eta must use only the slots (x, y, t)");
    const Field& k = xi.field();
    const Polynomial z = Polynomial::variable(k, Var::z);
    const Polynomial quad = z.pow(2) + xi * z;
    const Polynomial w_shift = substitute(
        eta, {Polynomial::variable(k, Var::x), Polynomial::variable(k, Var::y), quad,
              Polynomial::variable(k, Var::w)});
    return PolyMap(k, {Polynomial::variable(k, Var::x), Polynomial::variable(k, Var::y), z + xi,
                       Polynomial::variable(k, Var::w) + w_shift});
}

std::pair<PolyMap, FormIII> make_form_iii(const Polynomial& alpha, const Polynomial& beta,
                                          const Polynomial& gamma) {
    require_same_field(alpha.field(), gamma.field());
    FormIIIData data = form_iii_data(alpha, beta);
    const Field& k = alpha.field();
    const Polynomial w_shift = substitute(gamma, data.f);
    PolyMap t(k, {Polynomial::variable(k, Var::x), Polynomial::variable(k, Var::y) + alpha,
                  Polynomial::variable(k, Var::z) + data.beta_at_f2,
                  Polynomial::variable(k, Var::w) + w_shift});
    FormIII form{alpha,      beta,       gamma, std::move(data.gcd.d),
                 std::move(data.gcd.a), std::move(data.gcd.b), std::move(data.f)};
    return {std::move(t), std::move(form)};
}

PolyMap build(const CanonicalForm& form) {
    return std::visit(
        [](const auto& v) -> PolyMap {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FormI>) {
                return make_form_i(v.f);
            } else if constexpr (std::is_same_v<T, FormII>) {
                return make_form_ii(v.xi, v.eta);
            } else {
                return make_form_iii(v.alpha, v.beta, v.gamma).first;
            }
        },
        form);
}

const char* form_tag(const CanonicalForm& form) {
    switch (form.index()) {
        case 0: return "i";
        case 1: return "ii";
        default: return "iii";
    }
}

Polynomial decompose_even(const Polynomial& f, Var t, const Polynomial& xi) {
    require_same_field(f.field(), xi.field());
    const int ti = static_cast<int>(t);
    if (xi.is_zero()) fail(errc::zero_input, "xi must be nonzero");
    if (!xi.lives_in(ti))
        fail(errc::wrong_subring, "xi must lie strictly below the decomposition variable");
    if (!f.lives_in(ti + 1))
        fail(errc::wrong_subring, "f must not involve variables above the decomposition variable");

    const Field& k = f.field();
    const Polynomial tv = Polynomial::variable(k, t);
    const Polynomial quad = tv.pow(2) + xi * tv;  // invariant under t -> t + xi

    Polynomial rest = f;
    Polynomial eta(k);
    while (!rest.is_zero()) {
        const uint32_t deg = *rest.degree(t);
        if (deg == 0) break;
        if (deg % 2 != 0)
            fail(errc::not_invariant, "not invariant under the shift of " + xyzw_names()[ti] +
                                          ": leading degree " + std::to_string(deg) + " is odd");
        const Polynomial lam = coeff_of_power(rest, t, deg);
        eta += lam * Polynomial::variable(k, t, deg / 2);
        rest += lam * quad.pow(deg / 2);  // cancels the leading term, degree drops
    }
    eta += rest;  // the t-free tail is slot-free
    return eta;
}

Polynomial decompose_fixed_iii(const Polynomial& f, const Polynomial& alpha,
                               const Polynomial& beta) {
    require_same_field(f.field(), alpha.field());
    if (!f.lives_in(3)) fail(errc::wrong_subring, "the decomposed polynomial must lie in k[x,y,z]");
    const FormIIIData data = form_iii_data(alpha, beta);
    const Field& k = f.field();

    // Rewrites a k[x,y] coefficient in the slots (g1, g2); a failure means f
    // is not fixed by the action.
    auto base_slots = [&](const Polynomial& lam) -> Polynomial {
        try {
            return decompose_even(lam, Var::y, alpha);
        } catch (const Error& e) {
            if (e.code() == errc::not_invariant)
                fail(errc::not_in_fixed_ring, std::string("not in the fixed ring: ") + e.what());
            throw;
        }
    };

    Polynomial rest = f;
    Polynomial gamma(k);
    while (!rest.is_zero()) {
        const uint32_t deg = *rest.degree(Var::z);
        if (deg == 0) break;
        const Polynomial lam = coeff_of_power(rest, Var::z, deg);
        if (deg % 2 == 1) {
            // odd leading degree 2l-1: the coefficient must be a multiple of
            // a, and the quotient contributes mu * g3^(l-1) * g4
            const uint32_t ell = (deg + 1) / 2;
            Polynomial mu(k);
            try {
                mu = exact_div(lam, data.gcd.a);
            } catch (const Error& e) {
                if (e.code() == errc::not_divisible)
                    fail(errc::not_in_fixed_ring,
                         "not in the fixed ring: the leading z-coefficient is not divisible by a");
                throw;
            }
            gamma += base_slots(mu) * Polynomial::variable(k, Var::z, ell - 1) *
                     Polynomial::variable(k, Var::w);
            rest += mu * data.f[2].pow(ell - 1) * data.f[3];
        } else {
            gamma += base_slots(lam) * Polynomial::variable(k, Var::z, deg / 2);
            rest += lam * data.f[2].pow(deg / 2);
        }
    }
    gamma += base_slots(rest);
    return gamma;
}

NormalizeResult normalize(const PolyMap& tau) {
    TriangularParts parts = triangular_parts(tau);
    if (!is_involution(tau)) fail(errc::not_involution, "the map is not an involution");
    for (const auto& l : parts.lambdas) {
        // squaring is injective in characteristic two, so an involution's
        // diagonal coefficients are all 1
        if (!l.is_one())
            throw InternalInvariantViolation("involution with a non-unit diagonal coefficient: " +
                                             tau.str());
    }

    const Field& k = tau.field();
    const PolyMap id = PolyMap::identity(k);
    ConjugatorPair conj{id, id};
    PolyMap cur = tau;

    if (!parts.phis[0].is_zero()) {
        // x moves: exchange the roles of x and y, after which the map fixes
        // x and sends y to y + 1
        const FieldElement c1 = parts.phis[0].constant_term();
        const Polynomial x = Polynomial::variable(k, Var::x);
        const Polynomial y = Polynomial::variable(k, Var::y);
        const Polynomial z = Polynomial::variable(k, Var::z);
        const Polynomial w = Polynomial::variable(k, Var::w);
        const Polynomial ratio = c1.inverse() * parts.phis[1];
        const PolyMap psi(k, {y + ratio * x, Polynomial::constant(c1.inverse()) * x, z, w});
        const Polynomial phi2_shift =
            substitute(parts.phis[1], {Polynomial::constant(c1) * y, y, z, w});
        const PolyMap psi_inv(k, {Polynomial::constant(c1) * y, x + phi2_shift * y, z, w});
        conj = ConjugatorPair{psi, psi_inv};
        cur = compose(psi_inv, compose(cur, psi));
    }

    TriangularParts cur_parts = parts_or_violation(cur, "conjugated map is not triangular");
    if (!cur_parts.phis[0].is_zero())
        throw InternalInvariantViolation("normalization left x moving");

    if (!cur_parts.phis[1].is_zero() && cur_parts.phis[2].is_zero()) {
        // y moves but z is fixed: swapping y and z moves the shift onto z
        const PolyMap s = swap_yz(k);
        conj = ConjugatorPair{compose(conj.map, s), compose(s, conj.inverse)};
        cur = compose(s, compose(cur, s));
        cur_parts = parts_or_violation(cur, "swapped map is not triangular");
    }

    if (!is_involution(cur)) throw InternalInvariantViolation("normalized map is not an involution");
    if (!(compose(conj.map, conj.inverse) == id) || !(compose(conj.inverse, conj.map) == id))
        throw InternalInvariantViolation("conjugator pair is not mutually inverse");

    const bool y_moves = !cur_parts.phis[1].is_zero();
    const bool z_moves = !cur_parts.phis[2].is_zero();
    int condition;
    if (!y_moves) {
        condition = z_moves ? 2 : 1;
    } else if (z_moves) {
        condition = 3;
    } else {
        throw InternalInvariantViolation("normalization left y moving with z fixed");
    }

    return NormalizeResult{std::move(conj), std::move(cur), condition};
}

Classification classify(const PolyMap& tau) {
    NormalizeResult nr = normalize(tau);
    const TriangularParts parts = parts_or_violation(nr.tau_prime, "normalized map is not triangular");
    const Field& k = tau.field();

    CanonicalForm form{FormI{Polynomial(k)}};
    PolyMap built = PolyMap::identity(k);
    switch (nr.condition) {
        case 1: {
            form = FormI{parts.phis[3]};
            built = make_form_i(parts.phis[3]);
            break;
        }
        case 2: {
            const Polynomial& xi = parts.phis[2];
            try {
                Polynomial eta = decompose_even(parts.phis[3], Var::z, xi);
                built = make_form_ii(xi, eta);
                form = FormII{xi, std::move(eta)};
            } catch (const InternalInvariantViolation&) {
                throw;
            } catch (const Error& e) {
                throw InternalInvariantViolation(
                    std::string("decomposition failed on a verified involution: ") + e.what());
            }
            break;
        }
        case 3: {
            const Polynomial& alpha = parts.phis[1];
            try {
                Polynomial beta = decompose_even(parts.phis[2], Var::y, alpha);
                Polynomial gamma = decompose_fixed_iii(parts.phis[3], alpha, beta);
                auto [t, f] = make_form_iii(alpha, beta, gamma);
                built = std::move(t);
                form = std::move(f);
            } catch (const InternalInvariantViolation&) {
                throw;
            } catch (const Error& e) {
                throw InternalInvariantViolation(
                    std::string("decomposition failed on a verified involution: ") + e.what());
            }
            break;
        }
        default:
            throw InternalInvariantViolation("normalize produced an unknown condition");
    }

    if (!(built == nr.tau_prime))
        throw InternalInvariantViolation("canonical form does not rebuild the normalized map");
    const PolyMap rebuilt = compose(nr.conjugator.map, compose(built, nr.conjugator.inverse));
    if (!(rebuilt == tau))
        throw InternalInvariantViolation("conjugation does not reconstruct the input map");

    return Classification{std::move(nr.conjugator), std::move(form), std::move(built),
                          nr.condition};
}

}  // namespace trinv
