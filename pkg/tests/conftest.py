import os

import sympy
from hypothesis import settings

from rigidlie.linalg import Matrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

GOLDEN = os.path.join(os.path.dirname(__file__), "golden")


def to_sympy(M: Matrix) -> sympy.Matrix:
    """Independent copy of an exact matrix for oracle checks."""
    return sympy.Matrix([[sympy.Rational(x.re.numerator, x.re.denominator)
                          + sympy.I * sympy.Rational(x.im.numerator, x.im.denominator) for x in r]
                         for r in M.rows])


def poly_coeffs(p):
    """Polynomial -> list of sympy numbers, highest degree first."""
    return [sympy.Rational(c.re.numerator, c.re.denominator)
            + sympy.I * sympy.Rational(c.im.numerator, c.im.denominator) for c in reversed(p.coeffs)]
