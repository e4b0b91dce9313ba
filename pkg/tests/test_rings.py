import pytest
import sympy
from hypothesis import given, settings, strategies as st

from quillenkit.errors import GuardError, ValidationError
from quillenkit.fields import Field
from quillenkit.rings import (CommRingPres, hypersurface_cotangent,
                              kaehler_differentials, parse_polynomial, poly_to_str)

Q, F2, F3 = Field(0), Field(2), Field(3)
x = sympy.Symbol("x")


def omega_dim_oracle(coeffs, p):
    """dim_k k[x]/(f, f') = deg gcd(f, f'), computed with sympy."""
    f = sympy.Poly(list(reversed(coeffs)), x, modulus=p) if p else \
        sympy.Poly(list(reversed(coeffs)), x, domain="QQ")
    g = sympy.gcd(f, f.diff(x))
    return g.degree()


def _text(coeffs):
    return " + ".join(f"({c})*x^{i}" for i, c in enumerate(coeffs) if c) or "0"


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=2, max_size=6), st.sampled_from([0, 2, 3, 5]))
def test_kaehler_univariate_matches_gcd(coeffs, p):
    field = Field(p)
    reduced = [c % p for c in coeffs] if p else coeffs
    while reduced and reduced[-1] == 0:
        reduced = reduced[:-1]
    if len(reduced) < 2:
        return
    r = CommRingPres(field, ["x"], [_text(coeffs)])
    assert r.dim() == len(reduced) - 1
    assert kaehler_differentials(r).k_dimension() == omega_dim_oracle(reduced, p)


def test_kaehler_examples():
    assert kaehler_differentials(CommRingPres(Q, ["x"], ["x^3"])).k_dimension() == 2
    om = kaehler_differentials(CommRingPres(F3, ["x"], ["x^3"]))
    assert om.k_dimension() == 3 and om.is_free()
    two = CommRingPres(Q, ["x", "y"], ["x^2", "y^2"])
    assert kaehler_differentials(two).k_dimension() == 4
    assert kaehler_differentials(CommRingPres(Q, [], [])).k_dimension() == 0


def test_hypersurface():
    h = hypersurface_cotangent(CommRingPres(Q, ["x"], ["x^3"]))
    assert (h.d0_dim, h.d1_dim) == (2, 2)
    assert h.d0_canonical() == kaehler_differentials(CommRingPres(Q, ["x"], ["x^3"])).canonical()
    h = hypersurface_cotangent(CommRingPres(Q, ["x"], ["x"]))
    assert (h.d0_dim, h.d1_dim) == (0, 0)
    h = hypersurface_cotangent(CommRingPres(F2, ["x"], ["x^2"]))
    assert (h.d0_dim, h.d1_dim) == (2, 2)


def test_presentation_kinds():
    assert CommRingPres(Q, ["x"], ["x^2 - 1", "x^3 - x"]).kind == "univariate"
    # the ideal is generated by gcd = x^2 - 1
    assert CommRingPres(Q, ["x"], ["x^2 - 1", "x^3 - x"]).dim() == 2
    assert CommRingPres(Q, ["x", "y"], ["x*y", "x^2", "y^3"]).dim() == 4
    inf = CommRingPres(Q, ["x", "y"], ["x^2"])
    assert not inf.is_finite() and inf.dim() is None


def test_guard_rejects_general():
    r = CommRingPres(Q, ["x", "y"], ["x + y"])
    assert r.kind == "general"
    with pytest.raises(GuardError):
        r.to_algebra()


def test_parse_errors():
    with pytest.raises(ValidationError):
        parse_polynomial("x +* 2", ["x"], Q)
    with pytest.raises(ValidationError):
        parse_polynomial("xy", ["x", "y"], Q)
    with pytest.raises(ValidationError):
        parse_polynomial("x/0", ["x"], Q)
    with pytest.raises(ValidationError):
        parse_polynomial("1/0", [], Q)


def test_parse_roundtrip():
    p = parse_polynomial("3*x^2*y - 1/2*y + 4", ["x", "y"], Q)
    assert parse_polynomial(poly_to_str(p, ["x", "y"]), ["x", "y"], Q) == p
    assert parse_polynomial("x^2 + 3", ["x"], F3) == parse_polynomial("x^2", ["x"], F3)
