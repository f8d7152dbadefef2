"""Degree-truncated structure monoid M(X, r) and derived monoid A(X, r).

Words of length k are encoded base n with the first letter most significant,
so integer order is lexicographic order.  Each degree is closed separately
with a numpy union-find that always hooks the larger root under the smaller
one; every class root is therefore its least word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Sequence

import numpy as np

from . import maps
from .errors import InvariantError, PreconditionError, ResourceError
from .solution import Solution, lam_inverses, sigma_maps

DEFAULT_BUDGET = 20_000_000
FLAVORS = ("multiplicative", "additive")


# -- union-find -------------------------------------------------------------


def _flatten(parent: np.ndarray) -> np.ndarray:
    while True:
        nxt = parent[parent]
        if np.array_equal(nxt, parent):
            return parent
        parent = nxt


def min_root_closure(size: int, left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Component labels of the graph with the given edges; label = least member."""
    parent = np.arange(size, dtype=np.int64)
    if left.size == 0:
        return parent
    while True:
        parent = _flatten(parent)
        ra, rb = parent[left], parent[right]
        diff = ra != rb
        if not diff.any():
            return parent
        lo = np.minimum(ra[diff], rb[diff])
        hi = np.maximum(ra[diff], rb[diff])
        np.minimum.at(parent, hi, lo)


# -- relation tables --------------------------------------------------------


def _rewrite_tables(S: Solution, flavor: str) -> tuple[np.ndarray, np.ndarray]:
    """(U, V) with the rewrite (x, y) -> (U[x, y], V[x, y])."""
    n = S.n
    U = np.zeros((n, n), dtype=np.int64)
    V = np.zeros((n, n), dtype=np.int64)
    if flavor == "multiplicative":
        for x, y in product(range(n), repeat=2):
            U[x, y], V[x, y] = S(x, y)
    elif flavor == "additive":
        sig = sigma_maps(S)
        for x, y in product(range(n), repeat=2):
            U[x, y], V[x, y] = y, sig[y][x]
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return U, V


def _require_lnd(S: Solution) -> None:
    lam_inverses(S)


def _check_budget(n: int, d: int, budget: int) -> None:
    if n ** d > budget:
        raise ResourceError(f"degree {d} needs {n ** d} words, over the budget of {budget}")


def close_degree(n: int, k: int, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    size = n ** k
    words = np.arange(size, dtype=np.int64)
    if k < 2:
        return words
    lefts, rights = [], []
    for i in range(k - 1):
        pi, pj = n ** (k - 1 - i), n ** (k - 2 - i)
        x = (words // pi) % n
        y = (words // pj) % n
        image = words + (U[x, y] - x) * pi + (V[x, y] - y) * pj
        moved = image != words
        lefts.append(words[moved])
        rights.append(image[moved])
    return min_root_closure(size, np.concatenate(lefts), np.concatenate(rights))


@dataclass
class GradedClasses:
    n: int
    flavor: str
    maxdeg: int
    labels: list = field(default_factory=list)  # labels[k][w] = least word of the class
    dims: list = field(default_factory=list)

    def encode(self, word: Sequence[int]) -> int:
        v = 0
        for c in word:
            v = v * self.n + int(c)
        return v

    def decode(self, code: int, k: int) -> tuple[int, ...]:
        out = []
        for _ in range(k):
            code, c = divmod(code, self.n)
            out.append(c)
        return tuple(reversed(out))

    def class_of(self, word: Sequence[int]) -> tuple[int, int]:
        k = len(word)
        if k > self.maxdeg:
            raise ResourceError(f"word of length {k} beyond computed degree {self.maxdeg}")
        return k, int(self.labels[k][self.encode(word)])

    def representative(self, word: Sequence[int]) -> tuple[int, ...]:
        k, lab = self.class_of(word)
        return self.decode(lab, k)

    def members(self, k: int, label: int) -> np.ndarray:
        return np.flatnonzero(self.labels[k] == label)


def grow_classes(S: Solution, d: int, flavor: str = "multiplicative", budget: int = DEFAULT_BUDGET) -> GradedClasses:
    _require_lnd(S)
    _check_budget(S.n, d, budget)
    U, V = _rewrite_tables(S, flavor)
    gc = GradedClasses(S.n, flavor, d)
    for k in range(d + 1):
        lab = close_degree(S.n, k, U, V)
        gc.labels.append(lab)
        gc.dims.append(int(np.count_nonzero(lab == np.arange(lab.size))))
    return gc


# -- the bijection pi between the two monoids --------------------------------


def _digits(n: int, k: int) -> np.ndarray:
    words = np.arange(n ** k, dtype=np.int64)
    cols = [(words // n ** (k - 1 - i)) % n for i in range(k)]
    return np.stack(cols, axis=1) if cols else np.zeros((1, 0), dtype=np.int64)


def _undigits(n: int, D: np.ndarray) -> np.ndarray:
    out = np.zeros(D.shape[0], dtype=np.int64)
    for i in range(D.shape[1]):
        out = out * n + D[:, i]
    return out


def add_to_mul_codes(S: Solution, k: int) -> np.ndarray:
    """pi(x + rest) = x o pi(lam_x^{-1}(rest)), for all additive words of length k."""
    inv = np.array(lam_inverses(S), dtype=np.int64)
    D = _digits(S.n, k).copy()
    for j in range(k - 1):
        D[:, j + 1:] = inv[D[:, j][:, None], D[:, j + 1:]]
    return _undigits(S.n, D)


def add_to_mul(S: Solution, word: Sequence[int]) -> tuple[int, ...]:
    inv = lam_inverses(S)
    w = list(word)
    out = []
    while w:
        x = w.pop(0)
        out.append(x)
        w = [inv[x][c] for c in w]
    return tuple(out)


def mul_to_add(S: Solution, word: Sequence[int]) -> tuple[int, ...]:
    if not word:
        return ()
    x = word[0]
    return (x,) + tuple(S.lam[x][c] for c in mul_to_add(S, word[1:]))


@dataclass
class DimsReport:
    dimsM: list
    dimsA: list
    pi_agrees: bool


def graded_dims(S: Solution, d: int, budget: int = DEFAULT_BUDGET) -> DimsReport:
    M = grow_classes(S, d, "multiplicative", budget)
    A = grow_classes(S, d, "additive", budget)
    agrees = M.dims == A.dims
    for k in range(d + 1):
        image = add_to_mul_codes(S, k)
        pairs = np.unique(np.stack([A.labels[k], M.labels[k][image]]), axis=1)
        if pairs.shape[1] != A.dims[k] or pairs.shape[1] != M.dims[k]:
            agrees = False
    if not agrees:
        raise InvariantError("pi does not match the classes of the two monoids")
    return DimsReport(M.dims, A.dims, agrees)


# -- extended maps ----------------------------------------------------------


@dataclass(frozen=True)
class ExtendedMaps:
    lamX: maps.FinMap
    sigX: maps.FinMap


def extend_maps(S: Solution, word: Sequence[int], flavor: str = "additive") -> ExtendedMaps:
    """lam of the multiplicative word and sigma of the additive word, restricted to X.

    The word is read in the given flavor and converted through pi for the other map.
    """
    sig = sigma_maps(S)
    if flavor == "additive":
        aword, mword = tuple(word), add_to_mul(S, word)
    elif flavor == "multiplicative":
        aword, mword = mul_to_add(S, word), tuple(word)
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    lamX = maps.compose_all([S.lam[x] for x in mword], S.n)
    sigX = maps.compose_all([sig[x] for x in reversed(aword)], S.n)
    return ExtendedMaps(lamX, sigX)


def check_extension_invariance(S: Solution, gc: GradedClasses) -> bool:
    for k in range(gc.maxdeg + 1):
        seen: dict[int, ExtendedMaps] = {}
        for code in range(gc.n ** k):
            e = extend_maps(S, gc.decode(code, k), gc.flavor)
            lab = int(gc.labels[k][code])
            if seen.setdefault(lab, e) != e:
                raise InvariantError(f"extended maps differ inside the class of {gc.decode(lab, k)}")
    return True


def monoid_op(classes: GradedClasses, w1: Sequence[int], w2: Sequence[int]) -> tuple[int, int]:
    """Class (degree, label) of the concatenation w1 w2."""
    if len(w1) + len(w2) > classes.maxdeg:
        raise ResourceError(f"product has degree {len(w1) + len(w2)} > {classes.maxdeg}")
    return classes.class_of(tuple(w1) + tuple(w2))


# -- normal forms -----------------------------------------------------------


def _prefix_split(gc: GradedClasses, k: int, label: int, x: int):
    """Max j with some member starting with x^j, and the least remainder label."""
    members = gc.members(k, label)
    best_j, best_rest = 0, label
    for j in range(1, k + 1):
        block = sum(x * gc.n ** (k - 1 - i) for i in range(j))
        top = gc.n ** (k - j)
        hits = members[(members // top) == block // top]
        if hits.size == 0:
            break
        rests = gc.labels[k - j][hits % top]
        best_j, best_rest = j, int(rests.min())
    return best_j, best_rest


def greedy_normal_form(S: Solution, word: Sequence[int], gc: Optional[GradedClasses] = None) -> tuple[int, ...]:
    """Coefficients (m_1, ..., m_n) with word = m_1 x_1 + ... + m_n x_n additively."""
    if gc is None:
        gc = grow_classes(S, len(word), "additive")
    elif gc.flavor != "additive":
        raise PreconditionError("normal forms need additive classes")
    k, label = gc.class_of(word)
    coeff = []
    for x in range(gc.n):
        j, label = _prefix_split(gc, k, label, x)
        coeff.append(j)
        k -= j
    if k != 0:
        raise InvariantError(f"greedy extraction left a remainder of degree {k}")
    rebuilt = tuple(x for x in range(gc.n) for _ in range(coeff[x]))
    if gc.class_of(rebuilt) != gc.class_of(word):
        raise InvariantError("normal form does not reconstruct the word")
    return tuple(coeff)


def idempotent_exponent_of(sigs: Sequence[maps.FinMap]) -> int:
    v = 1
    while True:
        if all(maps.is_idempotent(maps.power(g, v)) for g in sigs):
            return v
        v += 1


@dataclass
class BVReport:
    v: int
    degrees: int
    classes: int
    greedy_hits: int
    search_hits: int
    uncovered: list

    @property
    def ok(self) -> bool:
        return not self.uncovered


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for i in range(total + 1):
        for rest in _compositions(total - i, parts - 1):
            yield (i,) + rest


def bv_decomposition(S: Solution, d: int, budget: int = DEFAULT_BUDGET) -> BVReport:
    """Check every class of degree <= d is b + f with b in B(v), f in F(v)."""
    n = S.n
    v = idempotent_exponent_of(sigma_maps(S))
    gc = grow_classes(S, d, "additive", budget)
    greedy = search = 0
    uncovered = []
    total = 0
    for k in range(d + 1):
        roots = set(np.flatnonzero(gc.labels[k] == np.arange(n ** k)).tolist())
        total += len(roots)
        covered = set()
        for r in sorted(roots):
            m = greedy_normal_form(S, gc.decode(r, k), gc)
            w = [x for x in range(n) for _ in range(v * (m[x] // v))] + [x for x in range(n) for _ in range(m[x] % v)]
            if gc.class_of(w)[1] == r:
                covered.add(r)
                greedy += 1
        if covered != roots:
            reach = set()
            for q in _compositions(k, n):
                for split in product(*[range(0, qi + 1) for qi in q]):
                    b, f = [s for s in split], [qi - s for qi, s in zip(q, split)]
                    if any(bi % v for bi in b) or any(fi >= v for fi in f):
                        continue
                    w = [x for x in range(n) for _ in range(b[x])] + [x for x in range(n) for _ in range(f[x])]
                    reach.add(gc.class_of(w)[1])
            for r in sorted(roots - covered):
                if r in reach:
                    search += 1
                else:
                    uncovered.append(gc.decode(r, k))
    return BVReport(v, d, total, greedy, search, uncovered)


# -- growth -----------------------------------------------------------------


def growth_degree_estimate(S: Solution, dmax: int, budget: int = DEFAULT_BUDGET) -> int:
    n = S.n
    if dmax < 2 * n:
        raise ResourceError(f"dmax = {dmax} is below 2|X| = {2 * n}")
    dims = grow_classes(S, dmax, "multiplicative", budget).dims
    return estimate_from_dims(dims, n)


def estimate_from_dims(dims: Sequence[int], bound: int) -> int:
    dmax = len(dims) - 1
    cum = np.cumsum(np.asarray(dims, dtype=np.int64))
    lo = dmax // 2
    k_est = None
    for k in range(0, dmax):
        diff = np.diff(cum[lo:], n=k + 1) if dmax - lo >= k + 1 else None
        if diff is not None and diff.size and not diff.any():
            k_est = k
            break
    if k_est is None:
        # bound test calibrated on the head, with a factor 2 of slack on the tail
        j = np.arange(1, dmax + 1, dtype=float)
        for k in range(0, dmax + 1):
            ratio = cum[1:] / j ** k
            c = ratio[: max(lo, 1)].max()
            if np.all(ratio[lo:] <= 2 * c):
                k_est = k
                break
        else:
            k_est = dmax
    if k_est > bound:
        raise InvariantError(f"growth estimate {k_est} exceeds |X| = {bound}")
    return int(k_est)
