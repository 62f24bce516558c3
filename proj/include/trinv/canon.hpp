#pragma once

#include <utility>
#include <variant>

#include "trinv/polymap.hpp"

namespace trinv {

// The three canonical shapes every triangular involution of k[x,y,z,w] in
// characteristic two is conjugate to. Parameters that feed substitution
// slots reuse variable positions: eta lives in (x, y, t) with t at the z
// position, gamma lives in (g1, g2, g3, g4) at positions x..w.
struct FormI {
    Polynomial f;  // in k[x,y,z]; the map is (x, y, z, w + f)
};
struct FormII {
    Polynomial xi;   // in k[x,y], nonzero
    Polynomial eta;  // slots (x, y, t); the map sends z to z + xi and w to w + eta(x, y, z^2 + xi*z)
};
struct FormIII {
    Polynomial alpha;  // in k[x], nonzero
    Polynomial beta;   // in k[x,y], nonzero
    Polynomial gamma;  // slots (g1, g2, g3, g4); the map sends w to w + gamma(f1, f2, f3, f4)
    Polynomial d, a, b;  // d = monic gcd of alpha and the y-content of beta; alpha = d*a, beta = d*b
    std::array<Polynomial, 4> generators;  // f1 = x, f2 = y^2 + alpha*y,
                                           // f3 = z^2 + beta(x,f2)*z, f4 = a*z + b(x,f2)*y
};
using CanonicalForm = std::variant<FormI, FormII, FormIII>;

PolyMap make_form_i(const Polynomial& f);
PolyMap make_form_ii(const Polynomial& xi, const Polynomial& eta);
std::pair<PolyMap, FormIII> make_form_iii(const Polynomial& alpha, const Polynomial& beta,
                                          const Polynomial& gamma);

// Rebuilds the map a canonical form describes.
PolyMap build(const CanonicalForm& form);
const char* form_tag(const CanonicalForm& form);  // "i" | "ii" | "iii"

struct ConjugatorPair {
    PolyMap map;
    PolyMap inverse;
};

// Conjugates a triangular involution tau into the normalized shape
// tau' = conjugator^{-1} . tau . conjugator with tau'(x) = x and condition
//   1: tau' fixes y and z    2: tau' fixes y, moves z    3: tau' moves y and z.
// If tau moves x, conjugation first exchanges the roles of x and y; if that
// leaves y moving but z fixed, a y/z swap lands in condition 2.
struct NormalizeResult {
    ConjugatorPair conjugator;
    PolyMap tau_prime;
    int condition;  // 1, 2 or 3
};
NormalizeResult normalize(const PolyMap& tau);

// Writes f, invariant under t -> t + xi, as eta with the last slot standing
// for t^2 + xi*t: substituting t^2 + xi*t at position t of eta gives back f.
// NotInvariant if f is not fixed by the substitution.
Polynomial decompose_even(const Polynomial& f, Var t, const Polynomial& xi);

// Writes f in k[x,y,z], fixed by the form-(iii) action of (alpha, beta) on
// k[x,y,z], as gamma in the slots g1..g4 of the invariant generators.
// NotInFixedRing if f is not fixed.
Polynomial decompose_fixed_iii(const Polynomial& f, const Polynomial& alpha,
                               const Polynomial& beta);

struct Classification {
    ConjugatorPair conjugator;  // tau = conjugator . canonical_map . conjugator^{-1}, machine checked
    CanonicalForm canonical;
    PolyMap canonical_map;
    int condition;
};
Classification classify(const PolyMap& tau);

}  // namespace trinv
