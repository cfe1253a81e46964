"""Compiled walk over the semigroup tree.

Semigroups are held as decomposition-count arrays: ``dec[x]`` is the number
of unordered pairs ``{a, b}`` of elements with ``a + b = x``.  So ``x`` is in
S iff ``dec[x] > 0`` and ``x`` is a minimal generator iff ``dec[x] == 1``.
Removing a generator ``g > F`` costs one pass over the array.
"""
import numpy as np
from numba import njit

# count rows
C_TOTAL = 0
C_CHECKED = 1
C_ALMOST_SYMMETRIC = 2
C_POSITIONED = 3
C_SYMMETRIC = 4
C_ORDINARY = 5
C_LECH_EXTREMAL = 6
C_WILF_GENERATOR = 7
C_DIMD_EQ = 8
C_LECH_EQ = 9
C_COR13_STRONG_EQ = 10
C_COR13_WEAK_EQ = 11
N_COUNTS = 12

# check rows, same order as inequalities.CHECK_IDS
N_CHECKS = 8

# inconsistency rows
I_BOOKKEEPING = 0
I_NEGATIVE = 1
I_DIMD_CLASS = 2
I_LECH_CLASS = 3
I_SPLIT = 4
N_INCONS = 5

FILTER_CODES = {"all": 0, "almost-symmetric": 1, "positioned": 2, "wilf-generator": 3}

STATUS_OK = 0
STATUS_BUDGET = 1
STATUS_EMIT_FULL = 2


def array_size(g_max):
    # minimal generators never exceed F + e <= 3 g
    return 3 * g_max + 4


def root_state(g_max):
    size = array_size(g_max)
    dec = np.empty(size, dtype=np.int16)
    for x in range(size):
        dec[x] = x // 2 + 1
    return dec


@njit(cache=True)
def _shift_ok(dec, gaps, ng, F, c, shift):
    for i in range(ng):
        y = F - gaps[i] + shift
        if y < c and dec[y] == 0:
            return False
    return True


@njit(cache=True)
def _record(rows, filled, k, cap, genus, lhs, rhs, gens, nu):
    j = filled[k]
    if j < cap:
        rows[k, j, 0] = genus
        rows[k, j, 1] = lhs
        rows[k, j, 2] = rhs
        rows[k, j, 3] = nu
        for i in range(nu):
            rows[k, j, 4 + i] = gens[i]
        filled[k] = j + 1


@njit(cache=True)
def walk(roots, root_F, root_e, root_genus, g_max, emit_genus, filter_code, check_mask,
         counts, viol, wit, wit_n, incons, inc_wit, inc_n, emit, emit_meta, node_budget):
    """Process every node of the subtrees below ``roots``.

    Children at genus ``emit_genus`` are written to ``emit`` instead of being
    visited.  Returns (status, nodes visited, nodes emitted).
    """
    size = roots.shape[1]
    cap = wit.shape[1]
    inc_cap = inc_wit.shape[1]
    max_stack = (g_max + 3) * (g_max + 3) + 8
    sdec = np.empty((max_stack, size), dtype=np.int16)
    sF = np.empty(max_stack, dtype=np.int64)
    se = np.empty(max_stack, dtype=np.int64)
    sg = np.empty(max_stack, dtype=np.int64)
    cur = np.empty(size, dtype=np.int16)
    gaps = np.empty(size, dtype=np.int64)
    gens = np.empty(size, dtype=np.int64)
    visited = 0
    emitted = 0

    for r in range(roots.shape[0]):
        top = 0
        sdec[0, :] = roots[r]
        sF[0] = root_F[r]
        se[0] = root_e[r]
        sg[0] = root_genus[r]
        while top >= 0:
            cur[:] = sdec[top]
            F = sF[top]
            e = se[top]
            genus = sg[top]
            top -= 1
            visited += 1
            if node_budget > 0 and visited > node_budget:
                return STATUS_BUDGET, visited, emitted

            c = F + 1
            n = c - genus
            ng = 0
            for x in range(1, c):
                if cur[x] == 0:
                    gaps[ng] = x
                    ng += 1
            gtop = F + e
            if gtop < e:
                gtop = e
            nu = 0
            for x in range(e, gtop + 1):
                if cur[x] == 1:
                    gens[nu] = x
                    nu += 1

            # classification
            positioned = _shift_ok(cur, gaps, ng, F, c, e)
            almost_symmetric = positioned
            wilf_generator = False
            for i in range(nu):
                if gens[i] == e:
                    continue
                ok = _shift_ok(cur, gaps, ng, F, c, gens[i])
                if ok:
                    wilf_generator = True
                elif almost_symmetric:
                    almost_symmetric = False
                if wilf_generator and not almost_symmetric:
                    break
            symmetric = True
            for x in range(c):
                if (cur[x] > 0) == (cur[F - x] > 0):
                    symmetric = False
                    break
            ordinary = n <= 1
            lech_extremal = c % e == 0
            if lech_extremal:
                for x in range(c):
                    if (cur[x] > 0) != (x % e == 0):
                        lech_extremal = False
                        break

            counts[C_TOTAL, genus] += 1
            if almost_symmetric:
                counts[C_ALMOST_SYMMETRIC, genus] += 1
            if positioned:
                counts[C_POSITIONED, genus] += 1
            if symmetric:
                counts[C_SYMMETRIC, genus] += 1
            if ordinary:
                counts[C_ORDINARY, genus] += 1
            if lech_extremal:
                counts[C_LECH_EXTREMAL, genus] += 1
            if wilf_generator:
                counts[C_WILF_GENERATOR, genus] += 1

            selected = (filter_code == 0
                        or (filter_code == 1 and almost_symmetric)
                        or (filter_code == 2 and positioned)
                        or (filter_code == 3 and wilf_generator))
            if selected:
                counts[C_CHECKED, genus] += 1
                # length bookkeeping by cardinality
                m_xc = 0
                for x in range(1, e + c):
                    if x >= c or cur[x] > 0:
                        m_xc += 1
                xr = 0
                for i in range(ng):
                    if gaps[i] >= e:
                        xr += 1
                ker = nu * n - m_xc
                if m_xc != e + n - 1 or xr != c - e - n + 1:
                    _record(inc_wit, inc_n, I_BOOKKEEPING, inc_cap, genus, m_xc, xr, gens, nu)
                    incons[I_BOOKKEEPING, genus] += 1
                if m_xc < 0 or xr < 0 or ker < 0:
                    _record(inc_wit, inc_n, I_NEGATIVE, inc_cap, genus, m_xc, ker, gens, nu)
                    incons[I_NEGATIVE, genus] += 1
                if c != xr + m_xc:
                    _record(inc_wit, inc_n, I_SPLIT, inc_cap, genus, c, xr + m_xc, gens, nu)
                    incons[I_SPLIT, genus] += 1

                q = (c + e - 1) // e
                lhs0 = nu
                rhs0 = e
                lhs1 = e
                rhs1 = (nu - 1) * n + 1
                rhs2 = (nu - 1) * n * n + n
                rhs3 = nu * n * n
                rhs4 = e * n
                rhs5 = nu * n
                for k in range(8):
                    if k == 0:
                        lhs, rhs = lhs0, rhs0
                    elif k == 1:
                        lhs, rhs = lhs1, rhs1
                    elif k == 2:
                        lhs, rhs = c, rhs2
                    elif k == 3:
                        lhs, rhs = c, rhs3
                    elif k == 4:
                        lhs, rhs = c, rhs4
                    elif k == 5:
                        lhs, rhs = c, rhs5
                    elif k == 6:
                        lhs, rhs = q, n
                    else:
                        lhs, rhs = xr, ker
                    if (check_mask >> k) & 1 and lhs > rhs:
                        viol[k, genus] += 1
                        _record(wit, wit_n, k, cap, genus, lhs, rhs, gens, nu)
                dimd_eq = lhs1 == rhs1
                lech_eq = c == rhs4
                if dimd_eq:
                    counts[C_DIMD_EQ, genus] += 1
                if lech_eq:
                    counts[C_LECH_EQ, genus] += 1
                if c == rhs2:
                    counts[C_COR13_STRONG_EQ, genus] += 1
                if c == rhs3:
                    counts[C_COR13_WEAK_EQ, genus] += 1
                if dimd_eq != (c == 0 or n == 1):
                    _record(inc_wit, inc_n, I_DIMD_CLASS, inc_cap, genus, lhs1, rhs1, gens, nu)
                    incons[I_DIMD_CLASS, genus] += 1
                if lech_eq != lech_extremal:
                    _record(inc_wit, inc_n, I_LECH_CLASS, inc_cap, genus, c, rhs4, gens, nu)
                    incons[I_LECH_CLASS, genus] += 1

            if genus >= g_max:
                continue
            # children: remove each minimal generator x > F
            for x in range(gtop, F, -1):
                if x < e or cur[x] != 1:
                    continue
                child_e = e + 1 if x == e else e
                if genus + 1 == emit_genus:
                    if emitted >= emit.shape[0]:
                        return STATUS_EMIT_FULL, visited, emitted
                    row = emit[emitted]
                    emit_meta[emitted, 0] = x
                    emit_meta[emitted, 1] = child_e
                    emit_meta[emitted, 2] = genus + 1
                    emitted += 1
                else:
                    top += 1
                    row = sdec[top]
                    sF[top] = x
                    se[top] = child_e
                    sg[top] = genus + 1
                row[:] = cur
                for i in range(x, size):
                    if cur[i - x] > 0:
                        row[i] -= 1
    return STATUS_OK, visited, emitted
