"""Builtin ring catalog and per-ring module families."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Callable, Optional

from ..constructors import (
    ring_gf,
    ring_matrix,
    ring_product,
    ring_upper_triangular,
    ring_zmod,
)
from ..limits import LIMITS
from ..module import (
    FiniteModule,
    direct_sum,
    minimal_generators,
    module_quotient,
    regular_module,
)
from ..ring import FiniteRing, left_ideals, maximal_left_ideals

MAX_CLASSES = 40
SUM_SAMPLES = 2


def _f2() -> FiniteRing:
    return ring_gf(2, 1, [0])


BUILTIN_RINGS: dict[str, Callable[[], FiniteRing]] = {}
for _n in range(2, 13):
    BUILTIN_RINGS[f"Z{_n}"] = (lambda n: lambda: ring_zmod(n))(_n)
BUILTIN_RINGS["F4"] = lambda: ring_gf(2, 2, [1, 1])
BUILTIN_RINGS["Z2xZ2"] = lambda: ring_product(ring_zmod(2), ring_zmod(2))
BUILTIN_RINGS["Z2xZ4"] = lambda: ring_product(ring_zmod(2), ring_zmod(4))
BUILTIN_RINGS["M2(F2)"] = lambda: ring_matrix(_f2(), 2)
BUILTIN_RINGS["T2(F2)"] = lambda: ring_upper_triangular(_f2(), 2)

# sizes known without construction, for cap filtering
_BUILTIN_SIZES = {name: int(name[1:]) for name in BUILTIN_RINGS if name[0] == "Z" and "x" not in name}
_BUILTIN_SIZES.update({"F4": 4, "Z2xZ2": 4, "Z2xZ4": 8, "M2(F2)": 16, "T2(F2)": 8})

_ring_cache: dict[str, FiniteRing] = {}


def builtin_ring(name: str) -> FiniteRing:
    """The builtin ring of that name; repeated calls return the same object."""
    if name not in BUILTIN_RINGS:
        raise KeyError(f"unknown builtin ring {name!r}")
    if name not in _ring_cache:
        _ring_cache[name] = BUILTIN_RINGS[name]()
    return _ring_cache[name]


@dataclass(frozen=True)
class Caps:
    max_ring_size: int = 16
    max_module_size: int = 64


@dataclass
class Catalog:
    rings: list
    module_families: dict          # ring name -> list of FiniteModule
    skipped: list = field(default_factory=list)
    source: tuple = ("builtin", Caps())
    _classes: dict = field(default_factory=dict, repr=False)
    _extra: dict = field(default_factory=dict, repr=False)

    def family(self, R: FiniteRing) -> list:
        return self.module_families.get(R.name, [])

    def ring(self, name: str) -> FiniteRing:
        for R in self.rings:
            if R.name == name:
                return R
        raise KeyError(name)

    def classes(self, R: FiniteRing) -> list:
        """All singletons, then all pairs, from the family; at most MAX_CLASSES."""
        if R.name not in self._classes:
            fam = self.family(R)
            picked = [(M,) for M in fam] + list(combinations(fam, 2))
            self._classes[R.name] = picked[:MAX_CLASSES]
        return self._classes[R.name]

    def memo(self, key, build):
        """Catalog-lifetime memo for derived modules (keeps hom caches warm)."""
        if key not in self._extra:
            self._extra[key] = build()
        return self._extra[key]


def short_name(M: FiniteModule) -> str:
    prefix = M.ring.name + ":"
    return M.name[len(prefix):] if M.name.startswith(prefix) else M.name


def _hom_feasible(M: FiniteModule) -> bool:
    k = len(minimal_generators(M))
    return k <= LIMITS.max_generators and M.size ** k <= LIMITS.max_hom_candidates


def build_family(R: FiniteRing, caps: Caps, skipped: list) -> list:
    RR = regular_module(R)
    family = [RR]

    def admit(label, size, build):
        if size > caps.max_module_size:
            skipped.append({"ring": R.name, "module": label,
                            "reason": f"size {size} > {caps.max_module_size}"})
            return
        M = build()
        if not _hom_feasible(M):
            skipped.append({"ring": R.name, "module": label, "reason": "hom budget"})
            return
        family.append(M)

    for I in left_ideals(R):
        if I.is_zero():
            continue
        admit(f"{R.name}:RR/{I!r}", R.size // len(I),
              lambda I=I: module_quotient(RR, I))
    for mu in maximal_left_ideals(R)[:SUM_SAMPLES]:
        label = f"{R.name}:RR+RR/{mu!r}"
        admit(label, R.size * (R.size // len(mu)),
              lambda mu=mu, label=label: direct_sum([RR, module_quotient(RR, mu)], label))
    label = f"{R.name}:RR^2"
    admit(label, R.size ** 2, lambda: direct_sum([RR, RR], label))
    return family


def catalog_builtin(caps: Optional[Caps] = None) -> Catalog:
    """Rings Z2..Z12, F4, Z2xZ2, Z2xZ4, M2(F2), T2(F2) with their families.

    Per ring: the regular module, R/I for every nonzero left ideal I (this
    covers the simple modules and the zero module), R + R/mu for up to two
    maximal left ideals mu, and R^2; anything over the caps is recorded in
    ``skipped``.
    """
    caps = caps or Caps()
    rings, families, skipped = [], {}, []
    for name in BUILTIN_RINGS:
        if _BUILTIN_SIZES[name] > caps.max_ring_size:
            skipped.append({"ring": name, "module": None,
                            "reason": f"ring size {_BUILTIN_SIZES[name]} > {caps.max_ring_size}"})
            continue
        R = builtin_ring(name)
        rings.append(R)
        families[R.name] = build_family(R, caps, skipped)
    return Catalog(rings, families, skipped, ("builtin", caps))


def catalog_from_dir(path, caps: Optional[Caps] = None) -> Catalog:
    """Rings and modules from JSON files in a directory.

    Each ring's family is its regular module followed by the module files
    naming it, in file-name order.
    """
    from ..io import load_document, module_from_doc, ring_from_doc

    caps = caps or Caps()
    docs = [(p, load_document(p)) for p in sorted(Path(path).glob("*.json"))]
    rings, families, skipped = [], {}, []
    for p, doc in docs:
        if doc.get("kind") == "ring":
            R = ring_from_doc(doc)
            if R.size > caps.max_ring_size:
                skipped.append({"ring": R.name, "module": None,
                                "reason": f"ring size {R.size} > {caps.max_ring_size}"})
                continue
            rings.append(R)
            families[R.name] = [regular_module(R)]
    by_name = {R.name: R for R in rings}
    for p, doc in docs:
        if doc.get("kind") == "module":
            R = by_name.get(doc.get("ring"))
            if R is None:
                skipped.append({"ring": doc.get("ring"), "module": doc.get("name"),
                                "reason": "ring not in catalog"})
                continue
            M = module_from_doc(R, doc)
            if M.size > caps.max_module_size:
                skipped.append({"ring": R.name, "module": M.name,
                                "reason": f"size {M.size} > {caps.max_module_size}"})
                continue
            families[R.name].append(M)
    return Catalog(rings, families, skipped, ("dir", str(path), caps))


def load_catalog(source: tuple) -> Catalog:
    if source[0] == "builtin":
        return catalog_builtin(source[1])
    return catalog_from_dir(source[1], source[2])

