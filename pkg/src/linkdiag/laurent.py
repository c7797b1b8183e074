"""Integer Laurent polynomials in one variable.

Exponents are stored as integers; ``step`` says how many stored units make
one power of the variable, so ``step=2`` allows half-integral powers.
"""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    __slots__ = ("coeffs", "var", "step")

    def __init__(self, coeffs=None, var: str = "t", step: int = 1):
        c = {}
        for e, v in (coeffs or {}).items():
            if v:
                c[int(e)] = c.get(int(e), 0) + int(v)
        self.coeffs = {e: v for e, v in c.items() if v}
        self.var = var
        self.step = step

    # -- constructors
    @classmethod
    def monomial(cls, exp: int, coeff: int = 1, var: str = "t", step: int = 1) -> "LaurentPoly":
        return cls({exp: coeff}, var, step)

    @classmethod
    def const(cls, c: int, var: str = "t", step: int = 1) -> "LaurentPoly":
        return cls({0: c}, var, step)

    # -- arithmetic
    def _check(self, other: "LaurentPoly") -> None:
        if self.var != other.var or self.step != other.step:
            raise ValueError("incompatible Laurent polynomials")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other, self.var, self.step)
        self._check(other)
        c = dict(self.coeffs)
        for e, v in other.coeffs.items():
            c[e] = c.get(e, 0) + v
        return LaurentPoly(c, self.var, self.step)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.coeffs.items()}, self.var, self.step)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self.coeffs.items()}, self.var, self.step)
        self._check(other)
        c: dict[int, int] = {}
        for e1, v1 in self.coeffs.items():
            for e2, v2 in other.coeffs.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(c, self.var, self.step)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, v), = self.coeffs.items()
            if v not in (1, -1):
                raise ValueError("monomial is not a unit")
            return LaurentPoly({-e * -n: v ** -n}, self.var, self.step)
        out = LaurentPoly.const(1, self.var, self.step)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.var == other.var and self.step == other.step and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.var, self.step, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    # -- structure
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def min_exp(self) -> int:
        return min(self.coeffs)

    @property
    def max_exp(self) -> int:
        return max(self.coeffs)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self.coeffs.items()}, self.var, self.step)

    def invert_variable(self) -> "LaurentPoly":
        return LaurentPoly({-e: v for e, v in self.coeffs.items()}, self.var, self.step)

    def rescale(self, factor: int, var: str | None = None, step: int | None = None) -> "LaurentPoly":
        """Multiply every stored exponent by ``factor``."""
        return LaurentPoly({e * factor: v for e, v in self.coeffs.items()},
                           var or self.var, step or self.step)

    def symmetrize(self) -> "LaurentPoly":
        """Shift by a power so the exponents are centred at 0 (step doubled if needed)."""
        if not self.coeffs:
            return self
        lo, hi = self.min_exp, self.max_exp
        p = self
        if (lo + hi) % 2:
            p = self.rescale(2, step=self.step * 2)
            lo, hi = 2 * lo, 2 * hi
        p = p.shift(-(lo + hi) // 2)
        if p.coeffs[p.max_exp] < 0:
            p = -p
        return p.normalize_step()

    def normalize_step(self) -> "LaurentPoly":
        s = self.step
        p = self
        while s > 1 and all(e % 2 == 0 for e in p.coeffs) and s % 2 == 0:
            p = LaurentPoly({e // 2: v for e, v in p.coeffs.items()}, p.var, s // 2)
            s //= 2
        return p

    def evaluate(self, x):
        """Value at x, where x stands for one stored unit (var ** (1/step))."""
        total = 0
        for e, v in self.coeffs.items():
            total += v * (x ** e if e >= 0 else Fraction(1) / (x ** -e) if isinstance(x, int) else x ** e)
        return total

    def at_minus_one(self) -> complex:
        """Value at var = -1, taking (-1)**(1/step) = exp(i*pi/step)."""
        import cmath
        w = cmath.exp(1j * cmath.pi / self.step)
        return sum(v * w ** e for e, v in self.coeffs.items())

    def to_dict(self) -> dict:
        return {"var": self.var, "step": self.step,
                "terms": [[e, v] for e, v in sorted(self.coeffs.items())]}

    def __repr__(self) -> str:
        return f"LaurentPoly({self!s})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            v = self.coeffs[e]
            sign = "-" if v < 0 else "+"
            a = abs(v)
            if e == 0:
                mono = str(a)
            else:
                q = Fraction(e, self.step)
                ex = str(q.numerator) if q.denominator == 1 else f"({q})"
                mono = self.var if ex == "1" else f"{self.var}^{ex}"
                if a != 1:
                    mono = f"{a}*{mono}"
            parts.append((sign, mono))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, mono in parts[1:]:
            out += f" {sign} {mono}"
        return out
