"""End-to-end checks of the python bindings against known values."""

import trinv

# polynomial parsing and arithmetic
p = trinv.parse_poly("z^2 + x*z + y")
assert str(p) == "z^2 + x*z + y"
assert p.term_count() == 3
x = trinv.variable("x")
y = trinv.variable("y")
assert (x + y) ** 2 == trinv.parse_poly("x^2 + y^2")
assert trinv.parse_poly("g^2", field="gf2^2:111").text() == "(g + 1)"

# map parsing and verification
m = trinv.parse_map("x -> x + 1; y -> y; z -> z; w -> w")
assert trinv.is_triangular(m)
assert trinv.is_involution(m)
assert trinv.compose(m, m) == trinv.identity()
parts = trinv.triangular_parts(m)
assert parts["lambdas"] == ["1", "1", "1", "1"]

# classification with a machine-checked conjugation
c = trinv.classify(m)
assert c["form"] == "ii"
assert c["condition"] == 2
assert c["parameters"]["xi"] == "1"
assert c["parameters"]["eta"] == "0"
rebuilt = trinv.conjugate_with_inverse(
    c["conjugator"], c["conjugator_inverse"], c["canonical_map"]
)
assert rebuilt == m

# canonical construction and the generator decomposition
one = trinv.parse_poly("1")
t, params = trinv.make_form_iii(one, one, trinv.parse_poly("0", context="gamma"))
assert params["f4"] == "z + y"
assert trinv.is_involution(t)
g = trinv.decompose_fixed_iii(trinv.parse_poly("z^2 + y^2"), one, one)
assert g.text("gamma") == "g4 + g3 + g2"

# exhaustive window census
report = trinv.census("gf2", 1, None, None)
assert report["total_maps"] == 8
assert report["involutions"] == 6
assert report["per_condition"] == (1, 5, 0)
assert report["failures"] == []

# bounded-degree fixed space
basis = trinv.fixed_space_basis(t, 1)
assert [str(b) for b in basis] == ["1", "x", "z + y"]

# errors carry their code names
try:
    trinv.classify(trinv.parse_map("x -> x; y -> y + x; z -> z; w -> w + x*y"))
    raise AssertionError("expected a NotInvolution error")
except trinv.Error as e:
    assert "NotInvolution" in str(e)

# classification over an extension field round trips
m4 = trinv.parse_map("field: gf2^2:111\nx -> x + g; y -> y + x^2 + g*x + 1; z -> z; w -> w")
assert trinv.is_involution(m4)
c4 = trinv.classify(m4)
assert c4["form"] == "ii"
assert (
    trinv.conjugate_with_inverse(c4["conjugator"], c4["conjugator_inverse"], c4["canonical_map"])
    == m4
)

print("smoke test passed")
