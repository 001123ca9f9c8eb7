"""Brute-force reference implementations.

These work on raw tables only and share no code with the package beyond
reading ``.add``/``.mul``/``.act``; they are deliberately naive.
"""
from itertools import permutations


def ring_axioms_hold(n, add, mul, one):
    """Triple-loop check of every ring axiom."""
    E = range(n)
    if any(add[0][a] != a for a in E):
        return False
    for a in E:
        if not any(add[a][b] == 0 for b in E):
            return False
        if mul[one][a] != a or mul[a][one] != a:
            return False
        for b in E:
            if add[a][b] != add[b][a]:
                return False
            for c in E:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    return False
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    return False
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return False
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    return False
    return True


def module_axioms_hold(R, m, add, act):
    E, S = range(m), range(R.size)
    if any(add[0][x] != x for x in E):
        return False
    for x in E:
        if not any(add[x][y] == 0 for y in E):
            return False
        if act[R.one][x] != x:
            return False
        for y in E:
            if add[x][y] != add[y][x]:
                return False
            for z in E:
                if add[add[x][y]][z] != add[x][add[y][z]]:
                    return False
    for r in S:
        for x in E:
            for y in E:
                if act[r][add[x][y]] != add[act[r][x]][act[r][y]]:
                    return False
            for s in S:
                if act[R.add[r][s]][x] != add[act[r][x]][act[s][x]]:
                    return False
                if act[R.mul[r][s]][x] != act[r][act[s][x]]:
                    return False
    return True


def homs_by_set_maps(M, N):
    """Every set map M -> N that is additive and R-linear.

    Walks the |N|^|M| maps depth first, discarding a partial map as soon as
    a constraint among already-assigned points fails; this is the full
    filter, applied early.
    """
    m = M.size
    f = [None] * m
    out = []

    def consistent(x):
        for y in range(x + 1):
            s = M.add[x][y]
            if s <= x and f[s] != N.add[f[x]][f[y]]:
                return False
            s = M.add[y][x]
            if s <= x and f[s] != N.add[f[y]][f[x]]:
                return False
        for z in range(x + 1):
            for y in range(x + 1):
                if M.add[y][z] == x and f[x] != N.add[f[y]][f[z]]:
                    return False
        for r in range(M.ring.size):
            for y in range(x + 1):
                t = M.act[r][y]
                if t <= x and f[t] != N.act[r][f[y]]:
                    return False
        return True

    def walk(x):
        if x == m:
            out.append(tuple(f))
            return
        for v in range(N.size):
            f[x] = v
            if consistent(x):
                walk(x + 1)
        f[x] = None

    walk(0)
    return sorted(out)


def is_hom(M, N, image):
    return (all(image[M.add[x][y]] == N.add[image[x]][image[y]]
                for x in range(M.size) for y in range(M.size))
            and all(image[M.act[r][x]] == N.act[r][image[x]]
                    for r in range(M.ring.size) for x in range(M.size)))


def closed_subsets(size, closed):
    """All subsets of range(size) containing 0 that satisfy ``closed``."""
    out = []
    for mask in range(1 << size):
        if not mask & 1:
            continue
        S = frozenset(i for i in range(size) if mask >> i & 1)
        if closed(S):
            out.append(S)
    return out


def submodules(M):
    def closed(S):
        return (all(M.add[x][y] in S for x in S for y in S)
                and all(M.act[r][x] in S for r in range(M.ring.size) for x in S))
    return closed_subsets(M.size, closed)


def left_ideals(R):
    def closed(S):
        return (all(R.add[x][y] in S for x in S for y in S)
                and all(R.mul[r][x] in S for r in range(R.size) for x in S))
    return closed_subsets(R.size, closed)


def maximal(sets, whole):
    proper = [S for S in sets if S != whole]
    return [S for S in proper if not any(S < T for T in proper)]


def jacobson_by_maximal_ideals(R):
    whole = frozenset(range(R.size))
    out = set(whole)
    for mu in maximal(left_ideals(R), whole):
        out &= mu
    return frozenset(out)


def radical(M):
    whole = frozenset(range(M.size))
    out = set(whole)
    for N in maximal(submodules(M), whole):
        out &= N
    return frozenset(out)


def radical_via_simples(M):
    """Rad M as the common kernel of all maps into the simples R/mu.

    The simples come from the maximal left ideals found by subset search on
    the ring, so this scales with |R| rather than |M|.
    """
    R = M.ring
    whole = frozenset(range(R.size))
    keep = set(range(M.size))
    for mu in maximal(left_ideals(R), whole):
        S = _cosets_module(R, mu)
        for f in homs_by_set_maps(M, S):
            keep &= {x for x in range(M.size) if f[x] == 0}
    return frozenset(keep)


class _Table:
    def __init__(self, ring, size, add, act):
        self.ring, self.size, self.add, self.act = ring, size, add, act


def _cosets_module(R, I):
    """R/I from scratch: cosets labelled in order of their least element."""
    label = {}
    for a in range(R.size):
        if a not in label:
            coset = {R.add[a][i] for i in I}
            idx = len(set(label.values()))
            for c in coset:
                label[c] = idx
    reps = sorted({label[a]: a for a in range(R.size - 1, -1, -1)}.items())
    reps = [a for _, a in reps]
    n = len(reps)
    add = [[label[R.add[reps[x]][reps[y]]] for y in range(n)] for x in range(n)]
    act = [[label[R.mul[r][reps[x]]] for x in range(n)] for r in range(R.size)]
    return _Table(R, n, add, act)


def is_submodule(M, S):
    return (0 in S and all(M.add[x][y] in S for x in S for y in S)
            and all(M.act[r][x] in S for r in range(M.ring.size) for x in S))


def rej(M, U):
    keep = set(range(M.size))
    for V in U:
        for f in homs_by_set_maps(M, V):
            keep &= {x for x in range(M.size) if f[x] == 0}
    return frozenset(keep)


def jrej(M, U):
    keep = set(range(M.size))
    for V in U:
        rad = radical(V) if V.size <= 12 else radical_via_simples(V)
        for f in homs_by_set_maps(M, V):
            keep &= {x for x in range(M.size) if f[x] in rad}
    return frozenset(keep)


def rings_isomorphic(R, S):
    if R.size != S.size:
        return False
    for perm in permutations(range(R.size)):
        if perm[0] != 0 or perm[R.one] != S.one:
            continue
        if all(perm[R.add[a][b]] == S.add[perm[a]][perm[b]]
               and perm[R.mul[a][b]] == S.mul[perm[a]][perm[b]]
               for a in range(R.size) for b in range(R.size)):
            return True
    return False


def modules_isomorphic(M, N):
    return M.size == N.size and any(len(set(f)) == M.size for f in homs_by_set_maps(M, N))


def monomorphism_into_product(M, targets):
    """A list of homs into members of ``targets`` whose kernels meet in 0, or None."""
    chosen, common = [], set(range(M.size))
    for V in targets:
        for f in homs_by_set_maps(M, V):
            ker = {x for x in range(M.size) if f[x] == 0}
            if not common <= ker:
                common &= ker
                chosen.append((V, f))
    return chosen if common == {0} else None
