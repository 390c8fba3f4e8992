"""Integral lattices with symmetric bilinear forms, and the exact operations on them.

All arithmetic is exact (ints / Fractions); floating point never enters this
module.  Grams may be rational for duals and overlattices; "period grade"
lattices are integral and nondegenerate.
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import DegenerateLatticeError, LatticeDomainError

OVERLATTICE_DISCRIMINANT_CAP = 10**6


def _as_exact(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else x
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    raise TypeError(f"gram entries must be exact (int/Fraction/str), got {type(x)!r}")


@dataclass
class Lattice:
    """Free module of finite rank with a symmetric bilinear form (gram matrix)."""

    gram: list
    label: str = ""

    def __post_init__(self):
        self.gram = [[_as_exact(x) for x in row] for row in self.gram]
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise LatticeDomainError("gram matrix must be square")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise LatticeDomainError("gram matrix must be symmetric")

    @property
    def rank(self):
        return len(self.gram)

    def is_integral(self):
        return all(isinstance(x, int) for row in self.gram for x in row)

    def det(self):
        return linalg.rational_det(self.gram)

    def is_nondegenerate(self):
        return self.det() != 0

    def pairing(self, v, w):
        """(v.w) in this lattice's basis; exact for exact inputs."""
        return sum(
            vi * sum(g * wj for g, wj in zip(row, w))
            for vi, row in zip(v, self.gram)
        )

    def to_json(self):
        return {
            "rank": self.rank,
            "gram": [[str(x) if isinstance(x, Fraction) else x for x in row] for row in self.gram],
            "label": self.label,
        }

    def to_json_str(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        gram = obj["gram"]
        if "rank" in obj and obj["rank"] != len(gram):
            raise LatticeDomainError("rank field disagrees with gram size")
        return cls(gram=gram, label=obj.get("label", ""))

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram


@dataclass
class Sublattice:
    """A sublattice given by basis row vectors in the coordinates of `ambient`."""

    ambient: Lattice
    basis: list = field(default_factory=list)

    def __post_init__(self):
        self.basis = [[int(x) for x in row] for row in self.basis]
        for row in self.basis:
            if len(row) != self.ambient.rank:
                raise LatticeDomainError("basis vector length must equal ambient rank")
        if self.basis and linalg.integer_row_rank(self.basis) != len(self.basis):
            raise LatticeDomainError("basis vectors must be linearly independent")

    @property
    def rank(self):
        return len(self.basis)

    def gram(self):
        G = self.ambient.gram
        return [[self.ambient.pairing(v, w) for w in self.basis] for v in self.basis]

    def as_lattice(self, label=""):
        return Lattice(self.gram(), label=label)

    def contains(self, v):
        """Exact membership test of an ambient-coordinate integer vector."""
        if not self.basis:
            return all(x == 0 for x in v)
        sol = linalg.rational_solve(linalg.transpose(self.basis), v)
        return sol is not None and all(x.denominator == 1 for x in sol)

    def to_json(self):
        return {"basis": self.basis, "ambient": self.ambient.to_json()}

    @classmethod
    def from_json(cls, obj, ambient=None):
        if isinstance(obj, str):
            obj = json.loads(obj)
        amb = ambient or Lattice.from_json(obj["ambient"])
        return cls(ambient=amb, basis=obj.get("basis", []))


@dataclass
class DiscriminantGroup:
    """Finite abelian group M*/M, recorded by its invariant factors d1 | d2 | ..."""

    invariant_factors: list

    @property
    def order(self):
        n = 1
        for d in self.invariant_factors:
            n *= d
        return n

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z/{d}" for d in self.invariant_factors)


# ---------------------------------------------------------------------------
# named constructors

_E8_GRAM = [
    [2, -1, 0, 0, 0, 0, 0, 0],
    [-1, 2, -1, 0, 0, 0, 0, 0],
    [0, -1, 2, -1, 0, 0, 0, 0],
    [0, 0, -1, 2, -1, 0, 0, 0],
    [0, 0, 0, -1, 2, -1, 0, -1],
    [0, 0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, 0, -1, 2, 0],
    [0, 0, 0, 0, -1, 0, 0, 2],
]


def hyperbolic_plane(sign=1, label=None):
    s = int(sign)
    return Lattice([[0, s], [s, 0]], label=label or ("U" if s == 1 else f"U({s})"))


def e8_lattice(sign=-1, label=None):
    s = int(sign)
    return Lattice(
        [[s * x for x in row] for row in _E8_GRAM],
        label=label or (f"E8({s})" if s != 1 else "E8"),
    )


def span_lattice(diag, label=None):
    """<k1> + <k2> + ... : diagonal gram."""
    diag = [_as_exact(k) for k in diag]
    n = len(diag)
    return Lattice(
        [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)],
        label=label or "<" + ",".join(map(str, diag)) + ">",
    )


def direct_sum(*lattices, label=None):
    n = sum(L.rank for L in lattices)
    gram = [[0] * n for _ in range(n)]
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                gram[off + i][off + j] = L.gram[i][j]
        off += L.rank
    return Lattice(gram, label=label or "+".join(L.label or "?" for L in lattices))


def k3_lattice():
    """U^3 + E8(-1)^2: the fixed coordinate model for rank-22 computations."""
    U = hyperbolic_plane()
    E = e8_lattice(-1)
    return direct_sum(U, U, U, E, E, label="U^3+E8(-1)^2")


_NAMED = {
    "U": hyperbolic_plane,
    "E8": lambda: e8_lattice(1),
    "E8(-1)": lambda: e8_lattice(-1),
    "K3": k3_lattice,
}


def named_lattice(name):
    """Parse names like "U", "K3", "<2,-2>", "U^3+E8(-1)^2" into lattices."""
    name = name.strip()
    if name in _NAMED:
        return _NAMED[name]()
    if name.startswith("<") and name.endswith(">"):
        return span_lattice([Fraction(tok) for tok in name[1:-1].split(",")])
    if "+" in name and not (name.startswith("<") or name.endswith(">")):
        parts = []
        depth = 0
        cur = ""
        for ch in name:
            if ch == "+" and depth == 0:
                parts.append(cur)
                cur = ""
            else:
                if ch in "(<":
                    depth += 1
                elif ch in ")>":
                    depth -= 1
                cur += ch
        parts.append(cur)
        if len(parts) > 1:
            return direct_sum(*[named_lattice(tok) for tok in parts], label=name)
    if "^" in name:
        base, _, power = name.rpartition("^")
        k = int(power)
        L = named_lattice(base)
        return direct_sum(*([L] * k), label=name)
    raise LatticeDomainError(f"unknown lattice name {name!r}")


# ---------------------------------------------------------------------------
# operations


def signature(L):
    """(p, q, z): positive/negative/zero counts by exact congruence diagonalization."""
    diag, _ = linalg.congruence_diagonalize(L.gram)
    p = sum(1 for d in diag if d > 0)
    q = sum(1 for d in diag if d < 0)
    z = len(diag) - p - q
    return p, q, z


def orthogonal_complement(L, S):
    """Full integer solution lattice of (S.x) = 0; primitive in L by construction."""
    if S.ambient is not L and S.ambient != L:
        raise LatticeDomainError("sublattice does not live in the given lattice")
    if not S.basis:
        return Sublattice(L, linalg.identity(L.rank))
    A = linalg.mat_mul(S.basis, L.gram)
    return Sublattice(L, linalg.integer_kernel(A))


def saturate(L, S):
    """Primitive closure P of S in L, and the index [P : S].

    Computed by a double integer kernel: x is in the rational row span of S
    exactly when x annihilates the right kernel of the basis matrix.
    """
    if not S.basis:
        return Sublattice(L, []), 1
    Krows = linalg.integer_kernel(S.basis)
    if Krows:
        P_basis = linalg.integer_kernel(Krows)
    else:
        P_basis = linalg.identity(L.rank)
    P = Sublattice(L, P_basis)
    # index: express S's basis in P's basis; |det| of the coefficient matrix
    coeffs = []
    PT = linalg.transpose(P.basis)
    for v in S.basis:
        sol = linalg.rational_solve(PT, v)
        coeffs.append(sol)
    idx = abs(linalg.rational_det(coeffs))
    if idx.denominator != 1:
        raise LatticeDomainError("internal: saturation index must be an integer")
    return P, int(idx)


def dual_and_discriminant(M):
    """Dual lattice (rational gram = inverse gram) and the discriminant group."""
    if not M.is_integral():
        raise LatticeDomainError("dual/discriminant expects an integral gram")
    inv = linalg.rational_matrix_inverse(M.gram)
    if inv is None:
        raise DegenerateLatticeError("degenerate lattice")
    Mstar = Lattice(inv, label=(M.label + "*") if M.label else "dual")
    factors = [d for d in linalg.snf_diagonal(M.gram) if d != 1]
    return Mstar, DiscriminantGroup(factors)


@dataclass
class Overlattice:
    """An intermediate lattice M <= L <= M*, with its basis in M-coordinates."""

    lattice: Lattice
    basis: list  # rows of Fractions: coordinates in the basis of M
    index: int

    def determinant(self):
        return self.lattice.det()


def _hnf_key(rows_scaled):
    return tuple(tuple(r) for r in linalg.hermite_normal_form(rows_scaled))


def intermediate_overlattices(M):
    """All lattices M <= L <= M* whose gram stays integer-valued.

    Walks the discriminant group by adding one coset generator at a time;
    integrality passes to sublattices, so the closure reaches every integral
    overlattice.  Output sorted by decreasing determinant (M first).
    """
    if not M.is_integral():
        raise LatticeDomainError("overlattice enumeration expects an integral gram")
    diag, _ = linalg.congruence_diagonalize(M.gram)
    if any(d == 0 for d in diag):
        raise DegenerateLatticeError("degenerate lattice")
    if any(d < 0 for d in diag):
        raise LatticeDomainError(
            "overlattice enumeration expects a positive definite lattice"
        )
    n = M.rank
    D, U, V = linalg.smith_normal_form(M.gram)
    dd = [D[i][i] for i in range(n)]
    order = 1
    for d in dd:
        order *= d
    if order > OVERLATTICE_DISCRIMINANT_CAP:
        raise LatticeDomainError(
            f"discriminant order {order} exceeds the enumeration cap {OVERLATTICE_DISCRIMINANT_CAP}"
        )
    # M*/M generators: columns v_j of V give M* = sum (1/d_j) v_j ZZ + ZZ^n
    cols = linalg.transpose(V)
    exponent = 1
    for d in dd:
        exponent = exponent * d // linalg.xgcd(exponent, d)[0]
    # all coset elements of M*/M as vectors with denominator dividing `exponent`,
    # stored as integer vectors scaled by `exponent`
    elements = []

    def _rec(j, acc):
        if j == n:
            if any(x % exponent for x in acc):
                elements.append(list(acc))
            return
        step = [c * (exponent // dd[j]) for c in cols[j]]
        cur = list(acc)
        for k in range(dd[j]):
            _rec(j + 1, cur)
            cur = [x + y for x, y in zip(cur, step)]

    _rec(0, [0] * n)

    G = M.gram

    def gram_of(rows_scaled):
        # rows are integer vectors representing rows/exponent in M-coordinates
        e2 = exponent * exponent
        out = []
        for v in rows_scaled:
            Gv = linalg.mat_vec(G, v)
            out.append([Fraction(sum(w[i] * Gv[i] for i in range(n)), e2) for w in rows_scaled])
        return out

    start = [[exponent if i == j else 0 for j in range(n)] for i in range(n)]
    start_key = _hnf_key(start)
    seen = {start_key: start}
    frontier = [start]
    while frontier:
        new_frontier = []
        for basis_scaled in frontier:
            for g in elements:
                cand = linalg.hermite_normal_form(basis_scaled + [g])
                key = tuple(tuple(r) for r in cand)
                if key in seen:
                    continue
                gm = gram_of(cand)
                if all(x.denominator == 1 for row in gm for x in row):
                    seen[key] = cand
                    new_frontier.append(cand)
        frontier = new_frontier

    out = []
    for key, rows_scaled in seen.items():
        gm = [[int(x) for x in row] for row in gram_of(rows_scaled)]
        basis = [[Fraction(x, exponent) for x in row] for row in rows_scaled]
        det_scaled = abs(linalg.rational_det(rows_scaled))
        idx = Fraction(exponent**n, 1) / det_scaled
        lab = (M.label or "M") + (f" overlattice idx {int(idx)}" if idx != 1 else "")
        out.append(Overlattice(Lattice(gm, label=lab), basis, int(idx)))
    out.sort(key=lambda o: (-o.determinant(), o.index))
    return out


def _totient(n):
    result, p, m = n, 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def nonsymplectic_picard_bound(order, b2):
    """Picard bound forced by a purely nonsymplectic automorphism of the given order.

    The transcendental rank must be a positive multiple of phi(order), so the
    Picard number is at most b2 - phi(order), clipped at b2 - 2 (the ambient
    bound for the algebraic part).
    """
    if order < 2:
        raise LatticeDomainError("automorphism order must be >= 2")
    if b2 < 3:
        raise LatticeDomainError("b2 must be >= 3")
    phi = _totient(order)
    allowed = [k for k in range(phi, b2, phi)]  # positive multiples <= b2 - 1
    if not allowed:
        raise LatticeDomainError("no admissible transcendental rank")
    max_rho = min(b2 - allowed[0], b2 - 2)
    return max_rho, allowed
