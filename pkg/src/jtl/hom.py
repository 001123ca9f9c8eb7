"""Module homomorphisms: enumeration, duals, kernels, images, projectivity.

Maps are written on the side opposite the scalars, so ``compose(f, g)`` is
"f then g", usually written ``fg``.  A hom is stored as its image table.
"""
from __future__ import annotations

from itertools import product
from typing import Optional

from .elements import ElementSet, subgroup_sum
from .errors import BudgetExceeded, CompositionMismatch
from .limits import LIMITS
from .module import FiniteModule, cyclic_submodule, minimal_generators, regular_module
from .ring import FiniteRing


class ModuleHom:
    __slots__ = ("source", "target", "image")

    def __init__(self, source: FiniteModule, target: FiniteModule, image):
        self.source = source
        self.target = target
        self.image = tuple(image)

    def __call__(self, x: int) -> int:
        return self.image[x]

    def __eq__(self, other):
        return (isinstance(other, ModuleHom) and self.source is other.source
                and self.target is other.target and self.image == other.image)

    def __hash__(self):
        return hash((id(self.source), id(self.target), self.image))

    def __lt__(self, other):
        return self.image < other.image

    def __repr__(self):
        return f"ModuleHom({self.source.name} -> {self.target.name}, {list(self.image)})"

    def is_zero(self) -> bool:
        return not any(self.image)

    def is_injective(self) -> bool:
        return len(set(self.image)) == self.source.size

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.target.size

    def to_dict(self) -> dict:
        return {"source": self.source.name, "target": self.target.name,
                "image": list(self.image)}


def is_homomorphism(M: FiniteModule, N: FiniteModule, image) -> bool:
    """Direct check of additivity and R-linearity over all of M."""
    if len(image) != M.size or image[0] != 0:
        return False
    for x in range(M.size):
        fx, row = image[x], M.add[x]
        for y in range(M.size):
            if image[row[y]] != N.add[fx][image[y]]:
                return False
    for r in range(M.ring.size):
        for x in range(M.size):
            if image[M.act[r][x]] != N.act[r][image[x]]:
                return False
    return True


def _plan(M: FiniteModule, gens=None):
    """Breadth-first walk of M along x -> x + s.g_i.

    s runs over additive generators of R and g_i over the module generators
    (greedy ones by default).  The walk reaches every element; a candidate
    assignment g_i -> t_i defines a homomorphism iff it is consistent on
    every edge.
    """
    gens = minimal_generators(M) if gens is None else tuple(gens)
    plans = M.cache.setdefault("hom_plan", {})
    if gens not in plans:
        R = M.ring
        steps = [(i, s) for i in range(len(gens)) for s in R.additive_generators]
        shifts = [M.act[s][gens[i]] for i, s in steps]
        seen = [False] * M.size
        seen[0] = True
        order, ops = [0], []
        for x in order:
            for j, sg in enumerate(shifts):
                y = M.add[x][sg]
                ops.append((y, x, j, not seen[y]))
                if not seen[y]:
                    seen[y] = True
                    order.append(y)
        assert len(order) == M.size, "generators do not span the module"
        plans[gens] = (gens, steps, ops)
    return plans[gens]


def spanning_generators(M: FiniteModule) -> tuple[int, ...]:
    """Greedy by span size: each step adds the element that enlarges the
    generated submodule most (least index on ties).  Usually shorter than
    ``minimal_generators``; a cyclic module gets one generator."""
    if "spanning_generators" not in M.cache:
        cyclic = [cyclic_submodule(M, x).bits for x in range(M.size)]
        gens, span = [], 1
        while span != (1 << M.size) - 1:
            best = max(range(M.size), key=lambda x: (
                subgroup_sum(M.add, span, cyclic[x]).bit_count(), -x))
            gens.append(best)
            span = subgroup_sum(M.add, span, cyclic[best])
        M.cache["spanning_generators"] = tuple(gens)
    return M.cache["spanning_generators"]


def _generator_candidates(M: FiniteModule, N: FiniteModule, g: int) -> list[int]:
    R = M.ring
    ann = [r for r in range(R.size) if M.act[r][g] == 0]
    return [t for t in range(N.size) if all(N.act[r][t] == 0 for r in ann)]


def hom_set(M: FiniteModule, N: FiniteModule) -> list[ModuleHom]:
    """All homomorphisms M -> N, sorted by image table."""
    if M.ring is not N.ring:
        raise ValueError("modules over different rings")
    homs_cache = M.cache.setdefault("homs", {})
    hit = homs_cache.get(id(N))
    if hit is not None and hit[0] is N:
        return hit[1]

    gens, steps, ops = _plan(M)
    candidates = [_generator_candidates(M, N, g) for g in gens]
    count = 1
    for c in candidates:
        count *= len(c)
    if count > LIMITS.max_hom_candidates:
        raise BudgetExceeded(f"Hom({M.name}, {N.name}) candidates", count,
                             LIMITS.max_hom_candidates)
    Nadd, Nact = N.add, N.act
    homs = []
    f = [0] * M.size
    for targets in product(*candidates):
        st = [Nact[s][targets[i]] for i, s in steps]
        ok = True
        for y, x, j, fresh in ops:
            v = Nadd[f[x]][st[j]]
            if fresh:
                f[y] = v
            elif f[y] != v:
                ok = False
                break
        if ok:
            homs.append(ModuleHom(M, N, f))
    homs.sort()
    homs_cache[id(N)] = (N, homs)
    return homs


def dual(M: FiniteModule) -> list[ModuleHom]:
    """M* = Hom(M, R) with R the regular module."""
    return hom_set(M, regular_module(M.ring))


def kernel(f: ModuleHom) -> ElementSet:
    return ElementSet.of(f.source.size, (x for x, v in enumerate(f.image) if v == 0))


def image(f: ModuleHom) -> ElementSet:
    return ElementSet.of(f.target.size, f.image)


def preimage(f: ModuleHom, S: ElementSet) -> ElementSet:
    return ElementSet.of(f.source.size, (x for x, v in enumerate(f.image) if v in S))


def image_of(f: ModuleHom, S: ElementSet) -> ElementSet:
    return ElementSet.of(f.target.size, (f.image[x] for x in S))


def compose(f: ModuleHom, g: ModuleHom) -> ModuleHom:
    """f then g."""
    if f.target is not g.source:
        raise CompositionMismatch(f"{f.target.name} is not {g.source.name}")
    return ModuleHom(f.source, g.target, (g.image[v] for v in f.image))


def identity_hom(M: FiniteModule) -> ModuleHom:
    return ModuleHom(M, M, range(M.size))


def is_isomorphic(M: FiniteModule, N: FiniteModule) -> bool:
    if M.ring is not N.ring or M.size != N.size:
        return False
    return any(f.is_injective() for f in hom_set(M, N))


def is_projective(M: FiniteModule) -> tuple[bool, Optional[tuple[ModuleHom, ...]]]:
    """Does the surjection R^k -> M, e_i -> g_i, split?

    A section s sends each generator g_j into its fibre {(r_i) : sum r_i.g_i = g_j}
    (pruned by the annihilator of g_j) and must extend to a homomorphism.
    Its coordinates q_i = s.pi_i are a dual basis: sum (m q_i).g_i = m.
    The g_i are ``spanning_generators(M)``; the answer does not depend on
    the generating set.
    """
    R = M.ring
    gens, steps, ops = _plan(M, spanning_generators(M))
    k = len(gens)
    if R.size ** k > LIMITS.max_hom_candidates:
        raise BudgetExceeded(f"free cover of {M.name}", R.size ** k, LIMITS.max_hom_candidates)
    fibre = {}
    for coeffs in product(range(R.size), repeat=k):
        acc = 0
        for r, g in zip(coeffs, gens):
            acc = M.add[acc][M.act[r][g]]
        fibre.setdefault(acc, []).append(coeffs)
    candidates = []
    for g in gens:
        ann = [r for r in range(R.size) if M.act[r][g] == 0]
        candidates.append([c for c in fibre.get(g, [])
                           if all(R.mul[a][ci] == 0 for a in ann for ci in c)])
    count = 1
    for c in candidates:
        count *= len(c)
    if count > LIMITS.max_hom_candidates:
        raise BudgetExceeded(f"splitting search for {M.name}", count,
                             LIMITS.max_hom_candidates)
    add, mul = R.add, R.mul
    s = [None] * M.size
    s[0] = (0,) * k
    for targets in product(*candidates):
        st = [tuple(mul[r][c] for c in targets[i]) for i, r in steps]
        good = True
        for y, x, j, fresh in ops:
            v = tuple(add[a][b] for a, b in zip(s[x], st[j]))
            if fresh:
                s[y] = v
            elif s[y] != v:
                good = False
                break
        if good:
            regular = regular_module(R)
            witness = tuple(ModuleHom(M, regular, (s[m][i] for m in range(M.size)))
                            for i in range(k))
            for m in range(M.size):
                acc = 0
                for q, g in zip(witness, gens):
                    acc = M.add[acc][M.act[q.image[m]][g]]
                assert acc == m, "dual basis fails off the generators"
            return True, witness
    return False, None


def baer_extension_exists(R: FiniteRing, I: ElementSet, f: ModuleHom) -> Optional[int]:
    """Least c with f(x) = xc on the left ideal I, or None.

    ``f.source`` is I as a module (see ``submodule_as_module``): its j-th
    element is the j-th member of I.
    """
    members = I.members
    if f.source.size != len(members):
        raise ValueError("hom source does not match the ideal")
    for c in range(R.size):
        if all(R.mul[x][c] == f.image[j] for j, x in enumerate(members)):
            return c
    return None
