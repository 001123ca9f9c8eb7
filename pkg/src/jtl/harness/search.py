"""Boolean flag expressions over catalog rings and modules.

Grammar (keywords case-insensitive)::

    expr  := term ("OR" term)*
    term  := factor ("AND" factor)*
    factor:= "NOT" factor | "(" expr ")" | FLAG

A FLAG is a module flag, a ring flag, or ``ring.<flag>`` which always
means the ring flag.  If every flag is a ring flag the search runs over
rings; otherwise over modules, and bare names shared by both vocabularies
(``semisimple``, ``fully_idempotent``) take the module meaning.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from ..classify import MODULE_FLAGS, module_profile
from ..errors import BudgetExceeded, UnknownFlag
from ..hom import is_projective
from ..module import classify_module_basic, is_faithful
from ..ring import RING_FLAGS, classify_ring
from .catalog import Catalog, short_name

EXTRA_MODULE_FLAGS = ("simple", "semisimple", "cyclic", "projective", "faithful")
ALL_MODULE_FLAGS = MODULE_FLAGS + EXTRA_MODULE_FLAGS

_TOKEN = re.compile(r"\s*(?:(\()|(\))|([A-Za-z_][\w.]*))")


def tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UnknownFlag(f"cannot parse {text[pos:]!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.tokens, self.i = tokens, 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def keyword(self, word):
        tok = self.peek()
        if tok is not None and tok.upper() == word:
            self.i += 1
            return True
        return False

    def expr(self):
        node = self.term()
        while self.keyword("OR"):
            node = ("or", node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.keyword("AND"):
            node = ("and", node, self.factor())
        return node

    def factor(self):
        if self.keyword("NOT"):
            return ("not", self.factor())
        tok = self.take()
        if tok == "(":
            node = self.expr()
            if self.take() != ")":
                raise UnknownFlag("missing ')'")
            return node
        if tok is None or tok == ")" or tok.upper() in ("AND", "OR", "NOT"):
            raise UnknownFlag(f"expected a flag, got {tok!r}")
        return ("flag", tok)


def parse(text: str):
    p = _Parser(tokenize(text))
    tree = p.expr()
    if p.peek() is not None:
        raise UnknownFlag(f"unexpected {p.peek()!r}")
    return tree


def _flags(tree, acc):
    if tree[0] == "flag":
        acc.append(tree[1])
    else:
        for sub in tree[1:]:
            _flags(sub, acc)
    return acc


def _resolve(name: str, over_modules: bool) -> tuple[str, str]:
    if name.startswith("ring."):
        flag = name[5:]
        if flag in RING_FLAGS:
            return "ring", flag
    elif over_modules and name in ALL_MODULE_FLAGS:
        return "module", name
    elif name in RING_FLAGS:
        return "ring", name
    elif name in ALL_MODULE_FLAGS:
        return "module", name
    raise UnknownFlag(f"unknown flag {name!r}; module flags: {', '.join(ALL_MODULE_FLAGS)}; "
                      f"ring flags: {', '.join(RING_FLAGS)}")


def module_flag(M, flag: str) -> bool:
    if flag in MODULE_FLAGS:
        return module_profile(M).flags[flag]
    if flag == "projective":
        return is_projective(M)[0]
    if flag == "faithful":
        return is_faithful(M)
    return classify_module_basic(M)[flag]


def _evaluate(tree, lookup) -> bool:
    op = tree[0]
    if op == "flag":
        return lookup(tree[1])
    if op == "not":
        return not _evaluate(tree[1], lookup)
    if op == "and":
        return _evaluate(tree[1], lookup) and _evaluate(tree[2], lookup)
    return _evaluate(tree[1], lookup) or _evaluate(tree[2], lookup)


@dataclass
class SearchResult:
    expression: str
    over: str                       # "rings" | "modules"
    matches: list = field(default_factory=list)
    skipped: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"expression": self.expression, "over": self.over,
                "matches": self.matches, "skipped": self.skipped}


def search(expression: str, catalog: Catalog) -> SearchResult:
    """Every catalog ring or module satisfying the expression, in catalog order.

    An empty match list is a legitimate answer.  Instances whose flags hit a
    budget are listed under ``skipped``.
    """
    tree = parse(expression)
    names = _flags(tree, [])
    over_modules = not all(_resolve(n, False)[0] == "ring" for n in names)
    resolved = {n: _resolve(n, over_modules) for n in names}
    result = SearchResult(expression, "modules" if over_modules else "rings")
    for R in catalog.rings:
        ring_flags = classify_ring(R).flags
        if not over_modules:
            if _evaluate(tree, lambda n: ring_flags[resolved[n][1]]):
                result.matches.append({"ring": R.name})
            continue
        for M in catalog.family(R):
            def lookup(n, M=M):
                scope, flag = resolved[n]
                return ring_flags[flag] if scope == "ring" else module_flag(M, flag)
            try:
                hit = _evaluate(tree, lookup)
            except BudgetExceeded as exc:
                result.skipped.append({"ring": R.name, "module": short_name(M),
                                       "reason": str(exc)})
                continue
            if hit:
                result.matches.append({"ring": R.name, "module": short_name(M)})
    return result
