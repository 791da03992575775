"""Independent brute-force oracles used only by the tests.

These deliberately avoid the package's linear algebra: plain-python row
reduction, exhaustive span enumeration over tiny fields, and a naive
nested-loop ring enumerator.
"""

import itertools


def py_rref(mat, p):
    """Pure-python RREF. Returns (rows, pivot columns)."""
    a = [[x % p for x in row] for row in mat]
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    piv = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        sel = None
        for i in range(r, nrows):
            if a[i][c] % p:
                sel = i
                break
        if sel is None:
            continue
        a[r], a[sel] = a[sel], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [(x * inv) % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        piv.append(c)
        r += 1
    return a, piv


def py_rank(mat, p):
    return len(py_rref(mat, p)[1])


def exhaustive_span_dim(vectors, p):
    """Dimension of the span by enumerating every linear combination.

    Only usable for p ** len(vectors) small; that is the point.
    """
    seen = set()
    n = len(vectors[0]) if vectors else 0
    for coeffs in itertools.product(range(p), repeat=len(vectors)):
        v = tuple(
            sum(c * vec[i] for c, vec in zip(coeffs, vectors)) % p for i in range(n)
        )
        seen.add(v)
    count = len(seen)
    d = 0
    while p**d < count:
        d += 1
    assert p**d == count, "span enumeration produced a non-subspace"
    return d


def naive_artinian_staircases(max_vars, max_len):
    """All canonical staircase fingerprints with at most max_len standard
    monomials, by filtering every subset of the exponent box.

    Matches the explorer's canonicalization: for nvars >= 2 every variable
    must be alive, and the field appears once at nvars = 1.
    """
    out = set()
    for nvars in range(1, max_vars + 1):
        box = list(itertools.product(range(max_len), repeat=nvars))
        box = [e for e in box if sum(e) <= max_len - 1]
        nonunit = [e for e in box if any(e)]
        for k in range(0, max_len):
            for subset in itertools.combinations(nonunit, k):
                cells = set(subset) | {(0,) * nvars}
                if not _down_closed(cells):
                    continue
                if nvars >= 2 and not all(
                    tuple(1 if u == v else 0 for u in range(nvars)) in cells
                    for v in range(nvars)
                ):
                    continue
                out.add((nvars, _staircase_of(cells, nvars)))
    return out


def _down_closed(cells):
    for e in cells:
        for v in range(len(e)):
            if e[v] > 0:
                f = tuple(a - 1 if u == v else a for u, a in enumerate(e))
                if f not in cells:
                    return False
    return True


def _staircase_of(cells, nvars):
    """Minimal generators of the complement of a down-closed set."""
    outside = []
    bound = max(max(e) for e in cells) + 2
    for e in itertools.product(range(bound), repeat=nvars):
        if e not in cells:
            outside.append(e)
    minimal = []
    for e in outside:
        if not any(
            f != e and all(a <= b for a, b in zip(f, e)) for f in outside
        ):
            minimal.append(e)
    return tuple(sorted(minimal))
