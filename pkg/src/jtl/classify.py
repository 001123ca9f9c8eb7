"""Regular, anti-regular, W-regular and fully idempotent modules."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .elements import ElementSet
from .hom import dual, is_projective
from .module import FiniteModule, cyclic_submodule, is_direct_summand
from .reject import dual_images, torsion_profile
from .ring import additive_span, element_classes, is_left_ideal

MODULE_FLAGS = ("regular", "anti_regular", "w_regular", "fully_idempotent",
                "torsionless", "j_torsionless")


def is_regular_module(M: FiniteModule) -> tuple[bool, Optional[int]]:
    """Every m has some q in M* with (mq).m = m; returns the least failing m."""
    D = dual(M)
    for m in range(M.size):
        if not any(M.act[q.image[m]][m] == m for q in D):
            return False, m
    return True, None


def anti_regular_witness(M: FiniteModule, m: int):
    """A nonzero q in M* with q m q = q, as (q, e = mq), or None.

    q m q is the map x -> ((xq).m)q.  Since (a.m)q = a(mq), on the image
    of q it reduces to a(mq) = a; both forms are evaluated and must agree.
    """
    R = M.ring
    for q in dual(M):
        if q.is_zero():
            continue
        composite = all(q.image[M.act[q.image[x]][m]] == q.image[x] for x in range(M.size))
        e = q.image[m]
        reduced = all(R.mul[a][e] == a for a in set(q.image))
        assert composite == reduced
        if composite:
            return q, e
    return None


def is_anti_regular(M: FiniteModule) -> tuple[bool, Optional[int]]:
    for m in range(1, M.size):
        if anti_regular_witness(M, m) is None:
            return False, m
    return True, None


def is_w_regular(M: FiniteModule) -> tuple[bool, Optional[dict]]:
    """Projective with every cyclic submodule a direct summand."""
    projective, _ = is_projective(M)
    if not projective:
        return False, {"reason": "not projective"}
    seen = set()
    for m in range(M.size):
        Rm = cyclic_submodule(M, m)
        if Rm.bits in seen:
            continue
        seen.add(Rm.bits)
        split, _ = is_direct_summand(M, Rm)
        if not split:
            return False, {"m": m, "cyclic": list(Rm.members)}
    return True, None


def trace_ideal(M: FiniteModule, m: int) -> ElementSet:
    """R m M*: additive closure of {r(mq) : r in R, q in M*}."""
    R = M.ring
    seeds = {R.mul[r][q.image[m]] for r in range(R.size) for q in dual(M)}
    T = additive_span(R, seeds)
    assert is_left_ideal(R, T)
    return T


def is_fully_idempotent_module(M: FiniteModule) -> tuple[bool, Optional[int]]:
    """Rm = (R m M*) m for every m; returns the least failing m."""
    for m in range(M.size):
        T = trace_ideal(M, m)
        Tm = ElementSet.of(M.size, (M.act[t][m] for t in T))
        if Tm != cyclic_submodule(M, m):
            return False, m
    return True, None


def principal_right_ideal(R, e: int) -> ElementSet:
    return ElementSet.of(R.size, (R.mul[e][r] for r in range(R.size)))


def idempotent_generator(M: FiniteModule, m: int) -> Optional[int]:
    """Least idempotent e with mM* = eR, or None."""
    target = dual_images(M, m)
    R = M.ring
    for e in element_classes(R).idempotents:
        if principal_right_ideal(R, e) == target:
            return e
    return None


@dataclass
class RegularEquivalence:
    regular: bool
    j_torsionless_condition: bool
    torsionless_condition: bool
    idempotent_failure: Optional[int]

    @property
    def consistent(self) -> bool:
        return self.regular == self.j_torsionless_condition == self.torsionless_condition

    def to_dict(self) -> dict:
        return {"regular": self.regular,
                "j_torsionless_and_idempotent": self.j_torsionless_condition,
                "torsionless_and_idempotent": self.torsionless_condition,
                "idempotent_failure": self.idempotent_failure,
                "consistent": self.consistent}


def regular_equivalence_check(M: FiniteModule) -> RegularEquivalence:
    """Evaluate: regular; J-torsionless with each mM* = eR; torsionless with the same."""
    regular, _ = is_regular_module(M)
    tp = torsion_profile(M)
    failure = next((m for m in range(M.size) if idempotent_generator(M, m) is None), None)
    idem = failure is None
    return RegularEquivalence(regular, tp["j_torsionless"] and idem,
                              tp["torsionless"] and idem, failure)


@dataclass
class ModuleProfile:
    flags: dict
    witnesses: dict

    def __getattr__(self, name):
        flags = self.__dict__.get("flags", {})
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def chain_violation(self) -> Optional[str]:
        f = self.flags
        for lo, hi in (("regular", "anti_regular"), ("anti_regular", "j_torsionless"),
                       ("j_torsionless", "torsionless")):
            if f[lo] and not f[hi]:
                return f"{lo} without {hi}"
        return None

    def as_dict(self) -> dict:
        return {"flags": dict(self.flags), "witnesses": dict(self.witnesses)}


def module_profile(M: FiniteModule) -> ModuleProfile:
    if "profile" in M.cache:
        return M.cache["profile"]
    flags, wit = {}, {}
    for name, check in (("regular", is_regular_module), ("anti_regular", is_anti_regular),
                        ("w_regular", is_w_regular),
                        ("fully_idempotent", is_fully_idempotent_module)):
        ok, w = check(M)
        flags[name] = ok
        if not ok:
            wit[name] = w if isinstance(w, dict) else {"m": w}
    tp = torsion_profile(M)
    flags["torsionless"] = tp["torsionless"]
    flags["j_torsionless"] = tp["j_torsionless"]
    if not tp["torsionless"]:
        wit["torsionless"] = {"m": tp["rej_witness"]}
    if not tp["j_torsionless"]:
        wit["j_torsionless"] = {"m": tp["witness"]}
    profile = ModuleProfile(flags, wit)
    M.cache["profile"] = profile
    return profile
