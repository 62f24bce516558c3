#pragma once

#include <array>

#include "trinv/polynomial.hpp"

namespace trinv {

// A polynomial endomorphism of k[x,y,z,w], stored by the images of the four
// variables. apply() substitutes the images; compose(s, t) is s after t.
class PolyMap {
public:
    PolyMap(Field field, std::array<Polynomial, 4> images);

    static PolyMap identity(const Field& f);

    const Field& field() const noexcept { return field_; }
    const std::array<Polynomial, 4>& images() const noexcept { return images_; }
    const Polynomial& image(Var v) const { return images_[static_cast<int>(v)]; }

    bool operator==(const PolyMap& o) const;

    // "x -> ...; y -> ...; z -> ...; w -> ...", parse_map reads this back
    std::string str() const;

private:
    Field field_;
    std::array<Polynomial, 4> images_;
};

Polynomial apply(const PolyMap& s, const Polynomial& p);

// (s . t)(p) = s(t(p)): the images of the composite are s applied to the
// images of t.
PolyMap compose(const PolyMap& s, const PolyMap& t);

// Decomposition of a triangular map: image of x_i is lambda_i * x_i + phi_i
// with lambda_i nonzero and phi_i in the variables strictly below x_i
// (phi_1 is a constant).
struct TriangularParts {
    std::array<FieldElement, 4> lambdas;
    std::array<Polynomial, 4> phis;
};
TriangularParts triangular_parts(const PolyMap& s);
bool is_triangular(const PolyMap& s);

bool is_involution(const PolyMap& s);

// Inverse of a triangular map by back substitution from x upward.
PolyMap invert_triangular(const PolyMap& s);

// phi . T . phi^{-1}. The two-map overload checks that the supplied pair is
// mutually inverse; the convenience overload inverts a triangular phi.
PolyMap conjugate(const PolyMap& phi, const PolyMap& phi_inverse, const PolyMap& t);
PolyMap conjugate(const PolyMap& phi, const PolyMap& t);

}  // namespace trinv
