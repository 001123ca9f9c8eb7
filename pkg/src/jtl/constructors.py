"""Constructors for the rings used by the catalog and the tests.

Element encodings (all mixed radix, first coordinate least significant):

* ``ring_zmod(n)``: i is the residue i.
* ``ring_product(R, S)``: (a, b) is a + |R| * b.
* ``ring_matrix(R, k)``: entries in row-major order, entry (0, 0) least
  significant.
* ``ring_upper_triangular(R, k)``: the entries (i, j) with i <= j in
  row-major order.
* ``ring_gf(p, k, coeffs)``: c_0 + c_1 x + ... is sum c_i p^i.
* ``ring_quotient(R, I)``: cosets ordered by their least-index
  representative.
"""
from __future__ import annotations

from itertools import product

from .elements import ElementSet
from .errors import NotTwoSidedIdeal, ReduciblePolynomial
from .ring import FiniteRing, is_two_sided_ideal, validate_ring


def _ring(name, add, mul, one) -> FiniteRing:
    n = len(add)
    return validate_ring({"name": name, "size": n, "one": one, "add": add, "mul": mul})


def _encode(digits, radix):
    index, scale = 0, 1
    for d in digits:
        index += d * scale
        scale *= radix
    return index


def _decode(index, radix, length):
    digits = []
    for _ in range(length):
        index, d = divmod(index, radix)
        digits.append(d)
    return tuple(digits)


def ring_zmod(n: int) -> FiniteRing:
    if n < 1:
        raise ValueError("n must be positive")
    add = [[(i + j) % n for j in range(n)] for i in range(n)]
    mul = [[(i * j) % n for j in range(n)] for i in range(n)]
    return _ring(f"Z{n}", add, mul, 1 % n)


def ring_product(R: FiniteRing, S: FiniteRing, name: str | None = None) -> FiniteRing:
    r, s = R.size, S.size
    n = r * s
    pairs = [(x % r, x // r) for x in range(n)]
    add = [[R.add[a][c] + r * S.add[b][d] for (c, d) in pairs] for (a, b) in pairs]
    mul = [[R.mul[a][c] + r * S.mul[b][d] for (c, d) in pairs] for (a, b) in pairs]
    return _ring(name or f"{R.name}x{S.name}", add, mul, R.one + r * S.one)


def _matrix_ring(R: FiniteRing, k: int, positions, name: str) -> FiniteRing:
    q = R.size
    slot = {pos: i for i, pos in enumerate(positions)}
    n = q ** len(positions)
    mats = []
    for x in range(n):
        digits = _decode(x, q, len(positions))
        mats.append([[digits[slot[(i, j)]] if (i, j) in slot else 0
                      for j in range(k)] for i in range(k)])

    def index(m):
        return _encode([m[i][j] for (i, j) in positions], q)

    def madd(a, b):
        return [[R.add[a[i][j]][b[i][j]] for j in range(k)] for i in range(k)]

    def mmul(a, b):
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = 0
                for t in range(k):
                    acc = R.add[acc][R.mul[a[i][t]][b[t][j]]]
                row.append(acc)
            out.append(row)
        return out

    add = [[index(madd(a, b)) for b in mats] for a in mats]
    mul = [[index(mmul(a, b)) for b in mats] for a in mats]
    ident = [[R.one if i == j else 0 for j in range(k)] for i in range(k)]
    return _ring(name, add, mul, index(ident))


def ring_matrix(R: FiniteRing, k: int) -> FiniteRing:
    if k < 1:
        raise ValueError("k must be positive")
    positions = [(i, j) for i in range(k) for j in range(k)]
    return _matrix_ring(R, k, positions, f"M{k}({R.name})")


def ring_upper_triangular(R: FiniteRing, k: int) -> FiniteRing:
    if k < 1:
        raise ValueError("k must be positive")
    positions = [(i, j) for i in range(k) for j in range(k) if i <= j]
    return _matrix_ring(R, k, positions, f"T{k}({R.name})")


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p ** 0.5) + 1))


def _poly_mod(num, den, p):
    num = list(num)
    inv = pow(den[-1], p - 2, p)
    while len(num) >= len(den):
        coef = num[-1] * inv % p
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - coef * c) % p
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return num


def is_irreducible(p: int, coeffs) -> bool:
    """Trial division of a monic polynomial (coefficients low to high) over F_p."""
    k = len(coeffs) - 1
    for d in range(1, k // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _poly_mod(coeffs, list(low) + [1], p):
                return False
    return True


def ring_gf(p: int, k: int, coeffs) -> FiniteRing:
    """F_{p^k} as F_p[x]/(f), f monic of degree k given low-to-high.

    ``coeffs`` may omit the leading 1.
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    coeffs = [int(c) % p for c in coeffs]
    if len(coeffs) == k:
        coeffs = coeffs + [1]
    if len(coeffs) != k + 1 or coeffs[-1] != 1:
        raise ValueError("expected a monic polynomial of degree k")
    if not is_irreducible(p, coeffs):
        raise ReduciblePolynomial(f"{coeffs} is reducible over F_{p}")
    n = p ** k
    polys = [_decode(x, p, k) for x in range(n)]

    def pmul(a, b):
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
        rem = _poly_mod(prod, coeffs, p)
        return _encode(rem + [0] * (k - len(rem)), p)

    add = [[_encode([(x + y) % p for x, y in zip(a, b)], p) for b in polys] for a in polys]
    mul = [[pmul(a, b) for b in polys] for a in polys]
    return _ring(f"F{n}", add, mul, 1)


def coset_representatives(add, neg, I: ElementSet) -> list[int]:
    """Least-index representative of x + I for each element x."""
    members = I.members
    return [min(add[x][i] for i in members) for x in range(len(add))]


def ring_quotient(R: FiniteRing, I: ElementSet, name: str | None = None) -> FiniteRing:
    if not is_two_sided_ideal(R, I):
        raise NotTwoSidedIdeal(f"{I!r} is not a two-sided ideal of {R.name}")
    rep = coset_representatives(R.add, R.neg, I)
    reps = sorted(set(rep))
    index = {r: i for i, r in enumerate(reps)}
    add = [[index[rep[R.add[a][b]]] for b in reps] for a in reps]
    mul = [[index[rep[R.mul[a][b]]] for b in reps] for a in reps]
    label = name or f"{R.name}/{I!r}"
    return _ring(label, add, mul, index[rep[R.one]])


def quotient_projection(R: FiniteRing, I: ElementSet) -> tuple[int, ...]:
    """Element index of x + I in ``ring_quotient(R, I)`` for each x."""
    rep = coset_representatives(R.add, R.neg, I)
    index = {r: i for i, r in enumerate(sorted(set(rep)))}
    return tuple(index[r] for r in rep)
