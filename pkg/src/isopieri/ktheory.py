"""Arithmetic in K(P^{N-1}) = Z[h]/(h^N) and triple intersection numbers."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import InvalidSpecial, ModulusMismatch
from .grassmannian import GrassmannianSpec, Symbol
from .projection import ZData, s_sets, z_data


@dataclass(frozen=True)
class HClass:
    """sum_i coeffs[i] h^i, truncated at h^N."""

    N: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs[: self.N])
        c = c + (0,) * (self.N - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, N: int) -> "HClass":
        return cls(N, ())

    @classmethod
    def one(cls, N: int) -> "HClass":
        return cls(N, (1,))

    @classmethod
    def h_power(cls, N: int, j: int) -> "HClass":
        if j >= N:
            return cls.zero(N)
        return cls(N, (0,) * j + (1,))

    def _check(self, other: "HClass") -> None:
        if self.N != other.N:
            raise ModulusMismatch(f"cannot combine classes mod h^{self.N} and h^{other.N}")

    def __add__(self, other: "HClass") -> "HClass":
        self._check(other)
        return HClass(self.N, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HClass") -> "HClass":
        return self + other.scale(-1)

    def __neg__(self) -> "HClass":
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out = [0] * self.N
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.N - i):
                    out[i + j] += a * other.coeffs[j]
        return HClass(self.N, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "HClass":
        result = HClass.one(self.N)
        for _ in range(e):
            result = result * self
        return result

    def scale(self, k: int) -> "HClass":
        return HClass(self.N, tuple(k * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def lowest_degree(self) -> int | None:
        return next((i for i, a in enumerate(self.coeffs) if a), None)

    def __str__(self) -> str:
        out = ""
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if i == 0 else ("h" if i == 1 else f"h^{i}")
            mag = abs(a)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            if not out:
                out = ("-" if a < 0 else "") + body
            else:
                out += (" - " if a < 0 else " + ") + body
        return out or "0"


def hclass_add(a: HClass, b: HClass) -> HClass:
    return a + b


def hclass_mul(a: HClass, b: HClass) -> HClass:
    return a * b


def hclass_scale(a: HClass, k: int) -> HClass:
    return a.scale(k)


def chi(a: HClass) -> int:
    """Euler characteristic on P^{N-1}: every h^j maps to 1."""
    return sum(a.coeffs)


def quadric_class(N: int) -> HClass:
    """2h - h^2, the class of a quadric hypersurface."""
    return HClass(N, (0, 2, -1))


def z_class(spec: GrassmannianSpec, zd: ZData) -> HClass:
    N = spec.N
    return HClass.h_power(N, zd.l) * quadric_class(N) ** zd.q


# -- special Schubert classes ------------------------------------------


@dataclass(frozen=True)
class SpecialSchubert:
    """Special class of codimension r; tilde selects the second type-D family at r = k."""

    r: int
    tilde: bool = False

    def quadric_codim(self, spec: GrassmannianSpec) -> int:
        return spec.m - 1 + self.r

    def label(self) -> str:
        return f"~X({self.r})" if self.tilde else f"X({self.r})"

    def to_json(self) -> dict:
        return {"r": self.r, "tilde": self.tilde}


def max_special_r(spec: GrassmannianSpec) -> int:
    return spec.n + spec.k


def validate_special(spec: GrassmannianSpec, special: SpecialSchubert) -> None:
    top = max_special_r(spec)
    if not 1 <= special.r <= top:
        raise InvalidSpecial(f"r must lie in [1,{top}] for {spec.name()}, got {special.r}")
    if special.tilde and (spec.lie_type != "D" or special.r != spec.k):
        raise InvalidSpecial(f"the tilde class exists only in type D with r = k = {spec.k}")


def special_classes(spec: GrassmannianSpec) -> list[SpecialSchubert]:
    """Every special class, plain ones by r, the tilde class right after r = k."""
    out = []
    for r in range(1, max_special_r(spec) + 1):
        out.append(SpecialSchubert(r))
        if spec.lie_type == "D" and r == spec.k:
            out.append(SpecialSchubert(r, tilde=True))
    return out


def special_type(spec: GrassmannianSpec, special: SpecialSchubert) -> int:
    """t(A) of the quadric-side class; exists only at the middle codimension n in type D."""
    validate_special(spec, special)
    if spec.lie_type != "D" or special.quadric_codim(spec) != spec.n:
        raise InvalidSpecial("t(A) is defined only for the middle-dimensional classes in type D")
    return 1 if special.tilde else 0


# -- triple intersection numbers ---------------------------------------


def _delta(spec: GrassmannianSpec, P: Symbol, T: Symbol, special: SpecialSchubert, zd: ZData) -> int:
    if spec.lie_type == "D" and special.r == spec.k and zd.q == 0 and zd.l == spec.n + 1:
        sets = s_sets(spec, P, T)
        return (special_type(spec, special) + len(sets.S) + len(sets.S_prime)) % 2
    return 1


def triple_intersection(spec: GrassmannianSpec, P: Symbol, T: Symbol, special: SpecialSchubert) -> int:
    """chi_X([O_{X_P}] [O_{X^T}] [O_{X_(r)}]), one branch per Lie type."""
    validate_special(spec, special)
    zd = z_data(spec, P, T)
    m, n, N, r = spec.m, spec.n, spec.N, special.r
    l, q = zd.l, zd.q
    if spec.lie_type == "C":
        top = 2 * n - m - r - l - q
        return sum(comb(q, j) * (-1) ** j * 2 ** (q - j) for j in range(0, min(top, q) + 1))
    h = HClass.h_power
    two_minus_h = HClass(N, (2, -1))
    if special.quadric_codim(spec) <= n - 1:
        return chi(h(N, m + r + l + q - 1) * two_minus_h ** q)
    if q > 0:
        return chi(h(N, m + r + l + q - 1) * two_minus_h ** (q - 1))
    return _delta(spec, P, T, special, zd) * chi(h(N, m + r + l - 1))


def _binomial_sum(N: int, l_prime: int, q_prime: int) -> int:
    return sum(
        comb(q_prime, j) * (-1) ** j * 2 ** (q_prime - j)
        for j in range(0, min(N - 1 - l_prime - q_prime, q_prime) + 1)
    )


def triple_intersection_unified(spec: GrassmannianSpec, P: Symbol, T: Symbol, special: SpecialSchubert) -> int:
    """Single closed formula for all types; the reduced branch keys on quadric codimension >= n."""
    validate_special(spec, special)
    zd = z_data(spec, P, T)
    m, r, l, q = spec.m, special.r, zd.l, zd.q
    if spec.orthogonal and q > 0 and m - 1 + r >= spec.n:
        q_prime, l_prime = q - 1, l + m + r
    else:
        q_prime, l_prime = q, l + m + r - 1
    return _delta(spec, P, T, special, zd) * _binomial_sum(spec.N, l_prime, q_prime)


def triple_intersection_printed(spec: GrassmannianSpec, P: Symbol, T: Symbol, special: SpecialSchubert) -> int:
    """The unified formula with its case predicates taken literally as printed.

    q' drops for every orthogonal q > 0, l' is keyed on r >= k and the parity
    factor ignores the l = n+1 condition.  Kept only to expose where this
    reading departs from the per-type formulas.
    """
    validate_special(spec, special)
    zd = z_data(spec, P, T)
    m, r, l, q, k = spec.m, special.r, zd.l, zd.q, spec.k
    q_prime = q - 1 if spec.orthogonal and q > 0 else q
    l_prime = l + m + r if spec.orthogonal and q > 0 and r >= k else l + m + r - 1
    if spec.lie_type == "D" and q == 0 and r == k:
        sets = s_sets(spec, P, T)
        eta = special_type(spec, special) + len(sets.S) + len(sets.S_prime)
    else:
        eta = 1
    return (eta % 2) * _binomial_sum(spec.N, l_prime, q_prime)
