"""Spacetime algebra Cl(1,3): basis blades, the geometric product, grades and involutions.

Blades are identified by a 4-bit mask over (e0, e1, e2, e3); bit mu set means
the blade contains e_mu, factors in ascending index order.  A Multivector holds
16 real coefficients indexed directly by mask.  The metric is diag(+1, -1, -1, -1).
"""
from __future__ import annotations

from typing import Callable, Iterable

import numpy as np

METRIC = (1, -1, -1, -1)

SCALAR = 0b0000
PSEUDOSCALAR = 0b1111

# display order: by grade, then lexicographic in the vector indices
BLADES = tuple(sorted(range(16), key=lambda m: (bin(m).count("1"), [i for i in range(4) if m >> i & 1])))


def grade_of(mask: int) -> int:
    return bin(mask).count("1")


def blade_name(mask: int) -> str:
    if mask == SCALAR:
        return "1"
    return "e" + "".join(str(i) for i in range(4) if mask >> i & 1)


def blade_mask(name: str) -> int:
    """Parse ``"1"``, ``"e0"``, ``"e12"``, ``"e0123"`` into a mask (canonical order only)."""
    if name == "1":
        return SCALAR
    if not name.startswith("e") or len(name) < 2:
        raise ValueError(f"bad blade name {name!r}")
    idx = [int(c) for c in name[1:]]
    if any(i > 3 for i in idx) or idx != sorted(set(idx)):
        raise ValueError(f"blade name {name!r} must list distinct indices 0..3 in ascending order")
    return sum(1 << i for i in idx)


def blade_mul(a: int, b: int) -> tuple[int, int]:
    """Product of two basis blades: returns ``(sign, a ^ b)``.

    The sign collects one factor -1 per transposition needed to bring the
    concatenated factors into ascending order, and g_mumu for every vector
    index present in both blades.
    """
    swaps = 0
    x = a >> 1
    while x:
        swaps += bin(x & b).count("1")
        x >>= 1
    sign = -1 if swaps & 1 else 1
    common = a & b
    for mu in range(4):
        if common >> mu & 1:
            sign *= METRIC[mu]
    return sign, a ^ b


def _product_tensor(mul: Callable[[int, int], tuple[int, int]]) -> np.ndarray:
    t = np.zeros((16, 16, 16))
    for a in range(16):
        for b in range(16):
            s, c = mul(a, b)
            t[a, b, c] = s
    return t


_PRODUCT = _product_tensor(blade_mul)
_GRADE = np.array([grade_of(m) for m in range(16)])
_REVERSE_SIGN = np.array([(-1) ** (r * (r - 1) // 2) for r in _GRADE], dtype=float)


class Multivector:
    """Immutable element of Cl(1,3).

    ``*`` is the geometric product, ``^`` the outer product and ``|`` the inner
    product (pure-grade operands only); ``~M`` is the reverse.
    """

    __slots__ = ("_c",)
    __array_priority__ = 1000

    def __init__(self, coeffs: Iterable[float] | np.ndarray | None = None):
        c = np.zeros(16) if coeffs is None else np.array(coeffs, dtype=float)
        if c.shape != (16,):
            raise ValueError(f"expected 16 coefficients, got shape {c.shape}")
        c.setflags(write=False)
        self._c = c

    @classmethod
    def scalar(cls, x: float) -> Multivector:
        c = np.zeros(16)
        c[SCALAR] = x
        return cls(c)

    @classmethod
    def blade(cls, which: int | str, coeff: float = 1.0) -> Multivector:
        mask = blade_mask(which) if isinstance(which, str) else int(which)
        if not 0 <= mask < 16:
            raise ValueError(f"blade mask {mask} out of range")
        c = np.zeros(16)
        c[mask] = coeff
        return cls(c)

    @classmethod
    def vector(cls, components: Iterable[float]) -> Multivector:
        """Vector with covariant-basis components: sum_mu v[mu] e_mu."""
        v = list(components)
        if len(v) != 4:
            raise ValueError("vector needs 4 components")
        c = np.zeros(16)
        for mu, x in enumerate(v):
            c[1 << mu] = x
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __getitem__(self, which: int | str) -> float:
        mask = blade_mask(which) if isinstance(which, str) else which
        return float(self._c[mask])

    # arithmetic -----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Multivector):
            return Multivector(self._c + other._c)
        if np.isscalar(other):
            return self + Multivector.scalar(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Multivector(-self._c)

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return Multivector(self._c - other._c)
        if np.isscalar(other):
            return self - Multivector.scalar(other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if np.isscalar(other):
            return Multivector(self._c * other)
        return NotImplemented

    def __rmul__(self, other):
        if np.isscalar(other):
            return Multivector(self._c * other)
        return NotImplemented

    def __truediv__(self, other):
        if np.isscalar(other):
            return Multivector(self._c / other)
        return NotImplemented

    def __xor__(self, other):
        return outer_product(self, other)

    def __or__(self, other):
        return inner_product(self, other)

    def __invert__(self):
        return reverse(self)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return bool(np.array_equal(self._c, other._c))
        if np.isscalar(other):
            return self == Multivector.scalar(other)
        return NotImplemented

    __hash__ = None

    def allclose(self, other: Multivector | float, atol: float = 1e-12) -> bool:
        if np.isscalar(other):
            other = Multivector.scalar(other)
        return bool(np.max(np.abs(self._c - other._c)) <= atol)

    # structure ------------------------------------------------------------

    def grade(self, r: int) -> Multivector:
        return grade_part(self, r)

    def grades(self) -> set[int]:
        return {int(g) for g in _GRADE[self._c != 0]}

    @property
    def scalar_value(self) -> float:
        return float(self._c[SCALAR])

    def is_even(self) -> bool:
        return not np.any(self._c[_GRADE % 2 == 1])

    def is_odd(self) -> bool:
        return not np.any(self._c[_GRADE % 2 == 0])

    def even_part(self) -> Multivector:
        return Multivector(np.where(_GRADE % 2 == 0, self._c, 0.0))

    def odd_part(self) -> Multivector:
        return Multivector(np.where(_GRADE % 2 == 1, self._c, 0.0))

    def __repr__(self):
        terms = [f"{self._c[m]:g}*{blade_name(m)}" for m in BLADES if self._c[m] != 0]
        return "Multivector(" + (" + ".join(terms) if terms else "0") + ")"


def geometric_product(m1: Multivector, m2: Multivector) -> Multivector:
    return Multivector(np.einsum("a,b,abc->c", m1.coeffs, m2.coeffs, _PRODUCT))


def grade_part(m: Multivector, r: int) -> Multivector:
    if r not in range(5):
        raise ValueError(f"grade must be in 0..4, got {r}")
    return Multivector(np.where(_GRADE == r, m.coeffs, 0.0))


def scalar_part(m: Multivector) -> float:
    return float(m.coeffs[SCALAR])


def pure_grade(m: Multivector) -> int:
    """Grade of a single-grade multivector; zero counts as grade 0."""
    gs = m.grades()
    if len(gs) > 1:
        raise ValueError(f"expected a pure-grade multivector, got grades {sorted(gs)}")
    return gs.pop() if gs else 0


def inner_product(a: Multivector, b: Multivector) -> Multivector:
    """Lowest-grade part <AB>_{|r-s|} for nonzero-grade blades A_r, B_s."""
    r, s = pure_grade(a), pure_grade(b)
    if r == 0 or s == 0:
        raise ValueError("inner product is defined for nonzero grades only")
    return grade_part(a * b, abs(r - s))


def outer_product(a: Multivector, b: Multivector) -> Multivector:
    r, s = pure_grade(a), pure_grade(b)
    if r + s > 4:
        return Multivector()
    return grade_part(a * b, r + s)


def reverse(m: Multivector) -> Multivector:
    return Multivector(m.coeffs * _REVERSE_SIGN)


E0 = Multivector.blade(0b0001)
E1 = Multivector.blade(0b0010)
E2 = Multivector.blade(0b0100)
E3 = Multivector.blade(0b1000)
E = (E0, E1, E2, E3)
I = Multivector.blade(PSEUDOSCALAR)
ONE = Multivector.scalar(1.0)


def hermitian_adjoint(m: Multivector) -> Multivector:
    return E0 * reverse(m) * E0


def dual(m: Multivector) -> Multivector:
    return I * m


def upper(mu: int) -> Multivector:
    """Contravariant basis vector e^mu = g^{mu mu} e_mu."""
    if mu not in range(4):
        raise ValueError(f"vector index must be 0..3, got {mu}")
    return METRIC[mu] * E[mu]
