"""Independent check for m = 1: Schubert classes on a smooth quadric.

Works only with facts about the quadric Q in P^{N-1} (pushforwards of its
Schubert classes and a few product rules), never with diagrams, posets or
Moebius functions, so the Pieri pipeline can be tested against it.

Basis elements are pairs (j, tilde): (j, False) is O_{Q(j)}, and in type D
(n, True) is the second middle class O_{~Q(n)}.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ktheory import HClass

Basis = tuple[int, bool]


@dataclass(frozen=True)
class QuadricClass:
    lie_type: str
    n: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {b: int(c) for b, c in self.coeffs.items() if c}
        for b in clean:
            _check_basis(self.lie_type, self.n, b)
        object.__setattr__(self, "coeffs", clean)

    @property
    def N(self) -> int:
        return ambient_N(self.lie_type, self.n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, QuadricClass)
            and (self.lie_type, self.n) == (other.lie_type, other.n)
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.lie_type, self.n, tuple(sorted(self.coeffs.items()))))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for (j, tilde), c in sorted(self.coeffs.items()):
            name = f"O~Q({j})" if tilde else f"OQ({j})"
            parts.append(f"{c}*{name}")
        return " + ".join(parts)


def ambient_N(lie_type: str, n: int) -> int:
    return 2 * n + 1 if lie_type == "B" else 2 * n + 2


def quadric_dim(lie_type: str, n: int) -> int:
    return ambient_N(lie_type, n) - 2


def _check_basis(lie_type: str, n: int, b: Basis) -> None:
    j, tilde = b
    if not 0 <= j <= quadric_dim(lie_type, n):
        raise ValueError(f"codimension {j} out of range for this quadric")
    if tilde and (lie_type != "D" or j != n):
        raise ValueError("the tilde class exists only in type D at codimension n")


def basis(lie_type: str, n: int) -> list[Basis]:
    out: list[Basis] = []
    for j in range(quadric_dim(lie_type, n) + 1):
        out.append((j, False))
        if lie_type == "D" and j == n:
            out.append((n, True))
    return out


def basis_element(lie_type: str, n: int, b: Basis) -> QuadricClass:
    return QuadricClass(lie_type, n, {b: 1})


def symbol_to_basis(lie_type: str, n: int, c: int) -> Basis:
    """The Schubert symbol {c} of OG(1,N) as a quadric basis element."""
    if lie_type == "B":
        if c >= n + 2:
            return (2 * n + 1 - c, False)
        return (2 * n - c, False)
    if c == n + 1:
        return (n, False)
    if c == n + 2:
        return (n, True)
    if c >= n + 3:
        return (2 * n + 2 - c, False)
    return (2 * n + 1 - c, False)


def basis_to_symbol(lie_type: str, n: int, b: Basis) -> int:
    j, tilde = b
    if lie_type == "B":
        return 2 * n + 1 - j if j <= n - 1 else 2 * n - j
    if j == n:
        return n + 2 if tilde else n + 1
    return 2 * n + 2 - j if j <= n - 1 else 2 * n + 1 - j


def _push_basis(lie_type: str, n: int, b: Basis) -> HClass:
    N = ambient_N(lie_type, n)
    j = b[0]
    if j <= n - 1:
        return HClass.h_power(N, j) * HClass(N, (0, 2, -1))
    return HClass.h_power(N, j + 1)


def pushforward(cls: QuadricClass) -> HClass:
    N = cls.N
    total = HClass.zero(N)
    for b, c in cls.coeffs.items():
        total = total + _push_basis(cls.lie_type, cls.n, b).scale(c)
    return total


def expand(lie_type: str, n: int, x: HClass) -> QuadricClass | HClass:
    """Write x as the pushforward of a quadric class.

    Triangular in the degree of the lowest term.  In type D the middle degree
    n+1 is hit by two basis elements; if that coefficient is nonzero the split
    is not determined and x itself is returned.
    """
    N = ambient_N(lie_type, n)
    if x.N != N:
        raise ValueError("modulus does not match this quadric")
    rest = list(x.coeffs)
    if rest[0]:
        raise ValueError("class has a nonzero constant term, not a pushforward")
    coeffs: dict[Basis, int] = {}
    for d in range(1, N):
        c = rest[d]
        if not c:
            continue
        if d <= n:
            if c % 2:
                raise ValueError(f"coefficient {c} of h^{d} is odd, not a pushforward")
            coeffs[(d - 1, False)] = c // 2
            rest[d] = 0
            if d + 1 < N:
                rest[d + 1] += c // 2
        else:
            if lie_type == "D" and d == n + 1:
                return x
            coeffs[(d - 1, False)] = c
            rest[d] = 0
    return QuadricClass(lie_type, n, coeffs)


def _mid_type(b: Basis) -> int:
    return 1 if b[1] else 0


def product(lie_type: str, n: int, a: Basis, b: Basis) -> QuadricClass | HClass:
    """O_a * O_b, as a quadric class, or only its pushforward where the split is unknown."""
    _check_basis(lie_type, n, a)
    _check_basis(lie_type, n, b)
    if a[0] > b[0]:
        a, b = b, a
    N = ambient_N(lie_type, n)
    if a[0] <= n - 1:
        # O_{Q(j)} is pulled back from h^j, so the projection formula applies.
        pushed = HClass.h_power(N, a[0]) * _push_basis(lie_type, n, b)
        return expand(lie_type, n, pushed)
    if lie_type == "B" or a[0] + b[0] > 2 * n:
        return QuadricClass(lie_type, n, {})
    coeff = (_mid_type(a) + _mid_type(b) + n + 1) % 2
    return QuadricClass(lie_type, n, {(2 * n, False): coeff})


def multiply(x: QuadricClass, b: Basis) -> QuadricClass | HClass:
    """Extend product linearly in the first factor."""
    parts = [product(x.lie_type, x.n, a, b) for a in x.coeffs]
    scalars = list(x.coeffs.values())
    if all(isinstance(p, QuadricClass) for p in parts):
        total: dict[Basis, int] = {}
        for p, s in zip(parts, scalars):
            for key, c in p.coeffs.items():
                total[key] = total.get(key, 0) + s * c
        return QuadricClass(x.lie_type, x.n, total)
    pushed = HClass.zero(x.N)
    for p, s in zip(parts, scalars):
        pushed = pushed + (p if isinstance(p, HClass) else pushforward(p)).scale(s)
    return pushed


def as_pushforward(value: QuadricClass | HClass) -> HClass:
    return value if isinstance(value, HClass) else pushforward(value)
