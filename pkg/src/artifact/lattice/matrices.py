"""Exact dense integer/rational matrix routines: SNF, HNF, determinants, kernels.

Everything here works on plain lists of lists holding Python ints or
fractions.Fraction. No floats anywhere.
"""

from fractions import Fraction


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m, n):
    return [[0] * n for _ in range(m)]


def copy_matrix(M):
    return [list(row) for row in M]


def transpose(M):
    if not M:
        return []
    return [list(col) for col in zip(*M)]


def mat_mul(A, B):
    if not A or not B:
        return []
    n = len(B)
    if any(len(row) != n for row in A):
        raise ValueError("dimension mismatch in mat_mul")
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scalar_mul(c, M):
    return [[c * x for x in row] for row in M]


def is_symmetric(M):
    n = len(M)
    if any(len(row) != n for row in M):
        return False
    return all(M[i][j] == M[j][i] for i in range(n) for j in range(i + 1, n))


def det_int(M):
    """Determinant of a square integer matrix by fraction-free Bareiss."""
    n = len(M)
    if n == 0:
        return 1
    A = copy_matrix(M)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank_int(M):
    """Rank over Q of an integer (or Fraction) matrix."""
    if not M or not M[0]:
        return 0
    A = [[Fraction(x) for x in row] for row in M]
    m, n = len(A), len(A[0])
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        pv = A[r][c]
        for i in range(r + 1, m):
            if A[i][c] != 0:
                f = A[i][c] / pv
                for j in range(c, n):
                    A[i][j] -= f * A[r][j]
        r += 1
        if r == m:
            break
    return r


def inverse_rational(M):
    """Exact inverse of a square matrix, returned with Fraction entries."""
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(M)]
    for c in range(n):
        piv = None
        for i in range(c, n):
            if A[i][c] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        A[c], A[piv] = A[piv], A[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def _swap_rows(A, U, i, j):
    A[i], A[j] = A[j], A[i]
    U[i], U[j] = U[j], U[i]


def _swap_cols(A, V, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]
    for row in V:
        row[i], row[j] = row[j], row[i]


def _add_row(A, U, src, dst, c):
    # row dst += c * row src
    A[dst] = [x + c * y for x, y in zip(A[dst], A[src])]
    U[dst] = [x + c * y for x, y in zip(U[dst], U[src])]


def _add_col(A, V, src, dst, c):
    for row in A:
        row[dst] += c * row[src]
    for row in V:
        row[dst] += c * row[src]


def _xgcd(a, b):
    """g, s, u with s*a + u*b = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def smith_normal_form(M):
    """Smith normal form with transforms: returns (U, D, V) with U*M*V = D.

    U and V are unimodular, D is diagonal (rectangular allowed) with
    non-negative entries satisfying d1 | d2 | ... .  Elimination uses
    2x2 Bezout blocks rather than repeated division; the naive variant
    swells intermediate entries badly on indefinite Gram matrices.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    A = copy_matrix(M)
    U = identity(m)
    V = identity(n)

    def pivot_search(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] != 0:
                    if best is None or abs(A[i][j]) < abs(A[best[0]][best[1]]):
                        best = (i, j)
        return best

    def kill_col(t):
        # zero out A[i][t] for i > t via row Bezout blocks
        for i in range(t + 1, m):
            if A[i][t] == 0:
                continue
            a, b = A[t][t], A[i][t]
            if b % a == 0:
                _add_row(A, U, t, i, -(b // a))
                continue
            g, s, u = _xgcd(a, b)
            p, q = a // g, b // g
            rt = [s * x + u * y for x, y in zip(A[t], A[i])]
            ri = [-q * x + p * y for x, y in zip(A[t], A[i])]
            A[t], A[i] = rt, ri
            ut = [s * x + u * y for x, y in zip(U[t], U[i])]
            ui = [-q * x + p * y for x, y in zip(U[t], U[i])]
            U[t], U[i] = ut, ui

    def kill_row(t):
        # zero out A[t][j] for j > t via column Bezout blocks
        for j in range(t + 1, n):
            if A[t][j] == 0:
                continue
            a, b = A[t][t], A[t][j]
            if b % a == 0:
                _add_col(A, V, t, j, -(b // a))
                continue
            g, s, u = _xgcd(a, b)
            p, q = a // g, b // g
            for row in A:
                x, y = row[t], row[j]
                row[t], row[j] = s * x + u * y, -q * x + p * y
            for row in V:
                x, y = row[t], row[j]
                row[t], row[j] = s * x + u * y, -q * x + p * y

    t = 0
    while t < min(m, n):
        pos = pivot_search(t)
        if pos is None:
            break
        _swap_rows(A, U, t, pos[0])
        _swap_cols(A, V, t, pos[1])
        while True:
            kill_col(t)
            kill_row(t)
            if any(A[i][t] for i in range(t + 1, m)):
                continue
            # pivot must divide every remaining entry
            offender = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if A[i][j] % A[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            _add_row(A, U, offender, t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    return U, A, V


def snf_diagonal(M):
    """Just the diagonal of the Smith form (no transforms)."""
    _, D, _ = smith_normal_form(M)
    return [D[i][i] for i in range(min(len(D), len(D[0]) if D else 0))]


def kernel_basis(M):
    """Basis of the saturated integer kernel {x : M x = 0}, as a list of columns.

    Uses the SNF column transform: zero diagonal entries of D mark kernel
    columns of V, which form a Z-basis of the kernel because V is unimodular.
    """
    m = len(M)
    n = len(M[0]) if m else 0
    if n == 0:
        return []
    _, D, V = smith_normal_form(M)
    ker = []
    for j in range(n):
        dj = D[j][j] if j < m else 0
        if dj == 0:
            ker.append([V[i][j] for i in range(n)])
    return ker


def hnf_rows(M):
    """Row Hermite form of an integer matrix (zero rows dropped).

    Same row span as the input; positive pivots, entries above each pivot
    reduced into [0, pivot). Keeps coordinates small before forming Gram
    matrices, which matters because naive Smith reduction swells otherwise.
    """
    A = [list(r) for r in M]
    m = len(A)
    n = len(A[0]) if m else 0
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            piv = None
            for i in range(r, m):
                if A[i][c] != 0 and (piv is None or abs(A[i][c]) < abs(A[piv][c])):
                    piv = i
            if piv is None:
                break
            A[r], A[piv] = A[piv], A[r]
            stable = True
            for i in range(r + 1, m):
                if A[i][c] != 0:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    if A[i][c] != 0:
                        stable = False
            if stable:
                break
        if piv is None:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        for i in range(r):
            if A[i][c] != 0:
                q = A[i][c] // A[r][c]
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
        r += 1
    return A[:r]


def hermite_column_basis(vec):
    """Complete a primitive integer vector to a unimodular matrix.

    Returns a square integer matrix whose first column is ``vec`` and whose
    determinant is +-1. Raises if the vector is not primitive.
    """
    n = len(vec)
    col = [[v] for v in vec]
    U, D, _ = smith_normal_form(col)
    if D[0][0] != 1:
        raise ValueError("vector is not primitive")
    # U * vec = e1, so U^{-1} has vec as first column
    Uinv = inverse_rational(U)
    B = [[int(x) for x in row] for row in Uinv]
    return B


def congruent_diagonal(M):
    """Diagonalize a symmetric rational matrix by congruence, exactly.

    Returns the list of diagonal entries (Fractions) of P M P^T for some
    invertible rational P. Used for signatures; no eigenvalues involved.
    """
    n = len(M)
    A = [[Fraction(x) for x in row] for row in M]
    diag = []
    for k in range(n):
        if A[k][k] == 0:
            # look for a later row to fix the pivot
            j = next((j for j in range(k + 1, n) if A[j][j] != 0), None)
            if j is not None:
                A[k], A[j] = A[j], A[k]
                for row in A:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if A[k][j] != 0), None)
                if j is None:
                    diag.append(Fraction(0))
                    continue
                # add row/col j into k; produces 2*A[k][j] on the diagonal
                A[k] = [x + y for x, y in zip(A[k], A[j])]
                for row in A:
                    row[k] += row[j]
        pv = A[k][k]
        if pv == 0:
            diag.append(Fraction(0))
            continue
        for i in range(k + 1, n):
            if A[i][k] != 0:
                f = A[i][k] / pv
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
                for row in A:
                    row[i] -= f * row[k]
        diag.append(pv)
    return diag


def signature_counts(M):
    """(n_plus, n_minus, n_zero) of a symmetric rational matrix."""
    diag = congruent_diagonal(M)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return pos, neg, len(diag) - pos - neg
