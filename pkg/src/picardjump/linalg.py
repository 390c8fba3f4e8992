"""Exact linear algebra over ZZ and QQ used by the lattice layer.

Everything here works on plain lists of Python ints / Fractions, so results
are exact at any size.  Matrices are lists of rows.
"""

from fractions import Fraction


def xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b and g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def mat_copy(A):
    return [row[:] for row in A]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    m, k = len(A), len(B)
    p = len(B[0]) if B else 0
    out = [[0] * p for _ in range(m)]
    for i in range(m):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                row = out[i]
                for j in range(p):
                    row[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)] if A else []


def hermite_normal_form(rows):
    """Row-style Hermite normal form of the lattice spanned by integer rows.

    Returns the list of nonzero HNF rows: pivots positive, entries above a
    pivot reduced into [0, pivot).  Canonical for the row lattice, so it
    doubles as a dictionary key for lattice identity tests.
    """
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c]:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        # clear below by gcd steps
        for i in range(r + 1, m):
            while A[i][c]:
                q = A[r][c] // A[i][c]
                A[r] = [x - q * y for x, y in zip(A[r], A[i])]
                A[r], A[i] = A[i], A[r]
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == m:
            break
    return [row for row in A[:r]]


def integer_row_rank(rows):
    return len(hermite_normal_form(rows)) if rows else 0


def smith_normal_form(A):
    """Smith normal form with transforms: returns (D, U, V) with U*A*V = D.

    U, V are unimodular integer matrices; D is diagonal (as a full matrix)
    with d1 | d2 | ... >= 0.
    """
    A = [list(map(int, r)) for r in A]
    m = len(A)
    n = len(A[0]) if m else 0
    U, V = identity(m), identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, q):
        # row_i += q * row_j
        A[i] = [x + q * y for x, y in zip(A[i], A[j])]
        U[i] = [x + q * y for x, y in zip(U[i], U[j])]

    def add_col(i, j, q):
        for row in A:
            row[i] += q * row[j]
        for row in V:
            row[i] += q * row[j]

    t = 0
    while t < min(m, n):
        # find a nonzero pivot at (t, t) or beyond
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j]:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # reduce column t then row t
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    if A[i][t] % A[t][t] == 0:
                        add_row(i, t, -(A[i][t] // A[t][t]))
                    else:
                        g, x, y = xgcd(A[t][t], A[i][t])
                        a, b = A[t][t] // g, A[i][t] // g
                        rt = [x * p + y * q for p, q in zip(A[t], A[i])]
                        ri = [-b * p + a * q for p, q in zip(A[t], A[i])]
                        ut = [x * p + y * q for p, q in zip(U[t], U[i])]
                        ui = [-b * p + a * q for p, q in zip(U[t], U[i])]
                        A[t], A[i], U[t], U[i] = rt, ri, ut, ui
                        dirty = True
            for j in range(t + 1, n):
                if A[t][j]:
                    if A[t][j] % A[t][t] == 0:
                        add_col(j, t, -(A[t][j] // A[t][t]))
                    else:
                        g, x, y = xgcd(A[t][t], A[t][j])
                        a, b = A[t][t] // g, A[t][j] // g
                        for row in (A, V):
                            for rr in row:
                                ct, cj = rr[t], rr[j]
                                rr[t] = x * ct + y * cj
                                rr[j] = -b * ct + a * cj
                        dirty = True
            if not any(A[i][t] for i in range(t + 1, m)) and not any(
                A[t][j] for j in range(t + 1, n)
            ):
                if not dirty:
                    break
        # divisibility fix-up: A[t][t] must divide everything below-right
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if A[i][j] % A[t][t]:
                    add_row(t, i, 1)
                    fixed = False
                    break
            if not fixed:
                break
        if fixed:
            if A[t][t] < 0:
                A[t] = [-x for x in A[t]]
                U[t] = [-x for x in U[t]]
            t += 1
    return A, U, V


def snf_diagonal(A):
    """Nonzero invariant factors d1 | d2 | ... of the integer matrix A."""
    D, _, _ = smith_normal_form(A)
    out = []
    for i in range(min(len(D), len(D[0]) if D else 0)):
        if D[i][i]:
            out.append(abs(D[i][i]))
    return out


def integer_kernel(A):
    """Basis rows of {x in ZZ^n : A x = 0}; automatically saturated."""
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return identity(n)
    D, _, V = smith_normal_form(A)
    r = sum(1 for i in range(min(m, n)) if D[i][i])
    # kernel = span of columns r..n-1 of V
    cols = transpose(V)
    return [cols[j] for j in range(r, n)]


def primitive_vector(v):
    """Divide an integer vector by the gcd of its entries (sign-normalized)."""
    g = 0
    for x in v:
        g = abs(xgcd(g, x)[0]) if g or x else 0
    if g == 0:
        return list(v)
    w = [x // g for x in v]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return w


def frac_matrix(A):
    return [[Fraction(x) for x in row] for row in A]


def rational_rref(A):
    """Reduced row echelon form over QQ. Returns (R, pivot_columns)."""
    R = frac_matrix(A)
    m = len(R)
    n = len(R[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if R[i][c]:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        f = R[r][c]
        R[r] = [x / f for x in R[r]]
        for i in range(m):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rational_solve(A, b):
    """One exact solution x of A x = b over QQ, or None if inconsistent.

    Free variables are set to zero.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    Ab = [list(row) + [bb] for row, bb in zip(A, b)]
    R, pivots = rational_rref(Ab)
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        if c == n:
            return None  # pivot in the constant column: inconsistent
        x[c] = R[i][n]
    return x


def rational_matrix_inverse(A):
    """Exact inverse of a square rational matrix; None if singular."""
    n = len(A)
    Aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    R, pivots = rational_rref(Aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R[:n]]


def rational_det(A):
    """Exact determinant of a square rational matrix (fraction Gaussian elimination)."""
    M = frac_matrix(A)
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = None
        for i in range(c, n):
            if M[i][c]:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return det


def congruence_diagonalize(G):
    """Exact symmetric congruence reduction: returns (diag, P) with P G P^T diagonal.

    Pivots on nonzero diagonal entries; a zero diagonal with a nonzero
    off-diagonal partner is repaired by adding the partner row (fine in
    characteristic zero, where 2 is invertible).
    """
    n = len(G)
    M = frac_matrix(G)
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_row_sym(i, j, f):
        M[i] = [x + f * y for x, y in zip(M[i], M[j])]
        for row in M:
            row[i] += f * row[j]
        P[i] = [x + f * y for x, y in zip(P[i], P[j])]

    def swap_sym(i, j):
        M[i], M[j] = M[j], M[i]
        for row in M:
            row[i], row[j] = row[j], row[i]
        P[i], P[j] = P[j], P[i]

    for t in range(n):
        if not M[t][t]:
            swapped = False
            for j in range(t + 1, n):
                if M[j][j]:
                    swap_sym(t, j)
                    swapped = True
                    break
            if not swapped:
                part = None
                for j in range(t + 1, n):
                    if M[t][j]:
                        part = j
                        break
                if part is None:
                    continue  # row/column already zero: nullity
                add_row_sym(t, part, Fraction(1))
        for i in range(t + 1, n):
            if M[i][t]:
                add_row_sym(i, t, -M[i][t] / M[t][t])
    return [M[i][i] for i in range(n)], P
