"""Chain complexes graded by (1/n)Z over the rationals.

Degrees are stored as integers times n (a generator of degree k/n stores k),
so all grading arithmetic is integral.  The differential raises the degree
by exactly one, i.e. by n stored units, and squares to zero; an optional
integer filtration level per generator must never decrease along the
differential.

The Euler characteristic of such a complex lives in the ring of integers of
the cyclotomic field generated by e^(pi*i/n): a generator of degree alpha
contributes e^(pi*i*alpha).  It is invariant under homology, degree-zero
cones and acyclic summands, and a downward shift by 1/n multiplies it by
e^(-pi*i/n); those facts are what the verification suite exercises.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .cyclo import CycloNum, root

Matrix = tuple[tuple[Fraction, ...], ...]


class ComplexError(ValueError):
    """Invalid complex data; ``kind`` is one of degree / d2 / filtration / shape."""

    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _freeze_matrix(rows, nrows: int, ncols: int) -> Matrix:
    out = []
    if len(rows) != nrows:
        raise ComplexError("shape", f"expected {nrows} rows, got {len(rows)}")
    for row in rows:
        if len(row) != ncols:
            raise ComplexError("shape", f"expected {ncols} columns, got {len(row)}")
        out.append(tuple(Fraction(x) for x in row))
    return tuple(out)


@dataclass(frozen=True)
class FracComplex:
    n: int
    degrees: tuple[int, ...]          # degree*n per generator
    diff: Matrix                      # diff[i][j]: coefficient of gen i in d(gen j)
    names: tuple[str, ...]
    filtration: tuple[int, ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.degrees)

    def degree_dims(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for u in self.degrees:
            out[u] = out.get(u, 0) + 1
        return dict(sorted(out.items()))


def build(n: int, degrees, diff, filtration=None, names=None) -> FracComplex:
    """Validate and build; raises ComplexError with the failing invariant."""
    if n < 1:
        raise ComplexError("shape", "n must be >= 1")
    degrees = tuple(int(u) for u in degrees)
    m = len(degrees)
    diff = _freeze_matrix(diff, m, m)
    if names is None:
        names = tuple(f"x{i}" for i in range(m))
    else:
        names = tuple(names)
        if len(names) != m:
            raise ComplexError("shape", "name count does not match generators")
    support = [[i for i in range(m) if diff[i][j] != 0] for j in range(m)]
    for j in range(m):
        for i in support[j]:
            if degrees[i] != degrees[j] + n:
                raise ComplexError(
                    "degree",
                    f"d({names[j]}) hits {names[i]}: degree step "
                    f"{Fraction(degrees[i] - degrees[j], n)} instead of 1")
    # d^2 = 0, walking only the nonzero entries
    for j in range(m):
        acc: dict[int, Fraction] = {}
        for k in support[j]:
            ckj = diff[k][j]
            for i in support[k]:
                acc[i] = acc.get(i, Fraction(0)) + diff[i][k] * ckj
        for i, s in acc.items():
            if s != 0:
                raise ComplexError("d2", f"d^2({names[j]}) has {names[i]}-coefficient {s}")
    if filtration is not None:
        filtration = tuple(int(x) for x in filtration)
        if len(filtration) != m:
            raise ComplexError("shape", "filtration length does not match generators")
        for j in range(m):
            for i in support[j]:
                if filtration[i] < filtration[j]:
                    raise ComplexError(
                        "filtration",
                        f"d({names[j]}) drops filtration {filtration[j]} -> {filtration[i]}")
    return FracComplex(n, degrees, diff, names, filtration)


# -- exact linear algebra -------------------------------------------------------


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows if any(x != 0 for x in r)]
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    rows = [row for row in rows[:r]]
    return rows, pivots


def _rank(rows) -> int:
    return len(_rref(rows)[0])


def _kernel(matrix: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the null space of the matrix (rows = constraints)."""
    rref, pivots = _rref(matrix)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def _matvec(rows: Matrix, v: list[Fraction]) -> list[Fraction]:
    return [sum(r[j] * v[j] for j in range(len(v))) for r in rows]


# -- core operations -------------------------------------------------------------


def shift(c: FracComplex, units: int) -> FracComplex:
    """Shift degrees downward by units/n (the translation functor is units = n)."""
    return replace(c, degrees=tuple(u - units for u in c.degrees))


def euler_char(c: FracComplex) -> CycloNum:
    """Sum of e^(pi*i*deg) over generators, an element of Z[e^(pi*i/n)]."""
    total = CycloNum.from_rational(0, 2 * c.n)
    for u in c.degrees:
        total = total + root(c.n, u)
    return total


def chi_of_dims(n: int, dims: dict[int, int]) -> CycloNum:
    """Euler characteristic of a fractional dimension table (units -> dim)."""
    total = CycloNum.from_rational(0, 2 * n)
    for u, d in dims.items():
        total = total + d * root(n, u)
    return total


@dataclass(frozen=True)
class HomologyResult:
    dims: dict[int, int]
    representatives: dict[int, list[tuple[Fraction, ...]]]


def homology(c: FracComplex) -> HomologyResult:
    """Degree-indexed homology dimensions with representative cycles."""
    by_degree: dict[int, list[int]] = {}
    for i, u in enumerate(c.degrees):
        by_degree.setdefault(u, []).append(i)
    dims: dict[int, int] = {}
    reps: dict[int, list[tuple[Fraction, ...]]] = {}
    for u, cols in sorted(by_degree.items()):
        rows_out = by_degree.get(u + c.n, [])
        block_out = [[c.diff[i][j] for j in cols] for i in rows_out]
        kern = _kernel(block_out, len(cols)) if rows_out else \
            [[Fraction(i == k) for i in range(len(cols))] for k in range(len(cols))]
        cols_in = by_degree.get(u - c.n, [])
        image = []
        for j in cols_in:
            image.append([c.diff[i][j] for i in cols])
        img_rref, img_pivots = _rref(image)
        # quotient dimension and representatives: reduce kernel mod image
        quotient_basis = []
        work = [list(r) for r in img_rref]
        pivots = list(img_pivots)
        for v in kern:
            vv = list(v)
            for row, pc in zip(work, pivots):
                if vv[pc] != 0:
                    f = vv[pc]
                    vv = [x - f * y for x, y in zip(vv, row)]
            if any(x != 0 for x in vv):
                # add to working rref so later vectors reduce against it
                lead = next(i for i, x in enumerate(vv) if x != 0)
                inv = Fraction(1) / vv[lead]
                vv = [x * inv for x in vv]
                ins = next((k for k, pc in enumerate(pivots) if pc > lead), len(pivots))
                work.insert(ins, vv)
                pivots.insert(ins, lead)
                quotient_basis.append(v)
        if quotient_basis:
            dims[u] = len(quotient_basis)
            globalized = []
            for v in quotient_basis:
                g = [Fraction(0)] * c.dim
                for x, j in zip(v, cols):
                    g[j] = x
                globalized.append(tuple(g))
            reps[u] = globalized
    return HomologyResult(dims, reps)


def homology_complex(c: FracComplex) -> FracComplex:
    """Homology as a complex with zero differential (for chaining)."""
    h = homology(c)
    degs = []
    for u, k in sorted(h.dims.items()):
        degs.extend([u] * k)
    m = len(degs)
    zero_rows = [[Fraction(0)] * m for _ in range(m)]
    return build(c.n, degs, zero_rows)


def cone(f_matrix, x: FracComplex, y: FracComplex) -> FracComplex:
    """Mapping cone of a degree-zero chain map f: X -> Y.

    Generators are X shifted down by one followed by Y; the characteristic
    satisfies chi(cone) = chi(Y) - chi(X).
    """
    if x.n != y.n:
        raise ComplexError("shape", "root orders differ")
    f = _freeze_matrix(f_matrix, y.dim, x.dim)
    f_support = [[i for i in range(y.dim) if f[i][j] != 0] for j in range(x.dim)]
    for j in range(x.dim):
        for i in f_support[j]:
            if y.degrees[i] != x.degrees[j]:
                raise ComplexError("degree", "chain map is not degree preserving")
    # f d_X = d_Y f, walking nonzero entries only
    dx_support = [[k for k in range(x.dim) if x.diff[k][j] != 0] for j in range(x.dim)]
    dy_support = [[i for i in range(y.dim) if y.diff[i][k] != 0] for k in range(y.dim)]
    for j in range(x.dim):
        acc: dict[int, Fraction] = {}
        for k in dx_support[j]:
            for i in f_support[k]:
                acc[i] = acc.get(i, Fraction(0)) + f[i][k] * x.diff[k][j]
        for k in f_support[j]:
            for i in dy_support[k]:
                acc[i] = acc.get(i, Fraction(0)) - y.diff[i][k] * f[k][j]
        if any(v != 0 for v in acc.values()):
            raise ComplexError("d2", "not a chain map")
    m = x.dim + y.dim
    degrees = tuple(u - x.n for u in x.degrees) + y.degrees
    rows = [[Fraction(0)] * m for _ in range(m)]
    for i in range(x.dim):
        for j in range(x.dim):
            rows[i][j] = -x.diff[i][j]
    for i in range(y.dim):
        for j in range(x.dim):
            rows[x.dim + i][j] = f[i][j]
        for j in range(y.dim):
            rows[x.dim + i][x.dim + j] = y.diff[i][j]
    names = tuple(f"x:{s}" for s in x.names) + tuple(f"y:{s}" for s in y.names)
    return build(x.n, degrees, rows, names=names)


def unknot_hfkn(n: int) -> FracComplex:
    """n generators in degrees (1-n)/n, (3-n)/n, ..., (n-1)/n, zero differential."""
    if n < 1:
        raise ComplexError("shape", "n must be >= 1")
    degs = [(1 - n) + 2 * k for k in range(n)]
    zero_rows = [[Fraction(0)] * n for _ in range(n)]
    names = [f"U^{k}" for k in range(n)]
    return build(n, degs, zero_rows, names=names)


# -- graded modules and the Koszul cube ------------------------------------------


@dataclass(frozen=True)
class GradedModule:
    """Finite-dimensional graded module with commuting degree-(2/n) maps."""

    n: int
    degrees: tuple[int, ...]
    endos: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.degrees)


def build_module(n: int, degrees, endos) -> GradedModule:
    degrees = tuple(int(u) for u in degrees)
    m = len(degrees)
    mats = tuple(_freeze_matrix(e, m, m) for e in endos)
    for t, mat in enumerate(mats):
        for i in range(m):
            for j in range(m):
                if mat[i][j] != 0 and degrees[i] != degrees[j] + 2:
                    raise ComplexError("degree", f"U_{t} does not raise degree by 2/n")
    for s in range(len(mats)):
        for t in range(s + 1, len(mats)):
            for i in range(m):
                for j in range(m):
                    lhs = sum(mats[s][i][k] * mats[t][k][j] for k in range(m))
                    rhs = sum(mats[t][i][k] * mats[s][k][j] for k in range(m))
                    if lhs != rhs:
                        raise ComplexError("d2", f"U_{s} and U_{t} do not commute")
    return GradedModule(n, degrees, mats)


def koszul_tensor(mod: GradedModule) -> FracComplex:
    """Tensor with the Koszul cube that kills the module maps.

    Vertices are subsets S of the maps; the copy at S not containing i is
    shifted down by 1 - 2/n per missing map, and the edge in direction i
    applies U_i with the usual alternating sign.  The subset size is the
    filtration level, which the differential raises by one.
    """
    k = len(mod.endos)
    n, m = mod.n, mod.dim
    subsets = sorted(range(1 << k), key=lambda s: (bin(s).count("1"), s))
    index = {}
    degrees = []
    filt = []
    names = []
    for s in subsets:
        size = bin(s).count("1")
        for g in range(m):
            index[(s, g)] = len(degrees)
            degrees.append(mod.degrees[g] - (k - size) * (n - 2))
            filt.append(size)
            names.append(f"g{g}@{s:0{max(k, 1)}b}")
    total = len(degrees)
    rows = [[Fraction(0)] * total for _ in range(total)]
    for s in subsets:
        for i in range(k):
            if s & (1 << i):
                continue
            target = s | (1 << i)
            sign = (-1) ** bin(s & ((1 << i) - 1)).count("1")
            u = mod.endos[i]
            for g in range(m):
                col = index[(s, g)]
                for h in range(m):
                    if u[h][g] != 0:
                        rows[index[(target, h)]][col] += sign * u[h][g]
    return build(n, degrees, rows, filtration=filt, names=names)


# -- spectral sequence of a filtered complex --------------------------------------


@dataclass(frozen=True)
class SpectralSequence:
    n: int
    pages: tuple[dict[tuple[int, int], int], ...]  # (level, degree units) -> dim
    stabilization: int
    infinity: dict[tuple[int, int], int]

    def page_chi(self, r: int) -> CycloNum:
        total = CycloNum.from_rational(0, 2 * self.n)
        for (_, u), d in self.pages[r].items():
            total = total + d * root(self.n, u)
        return total

    def degreewise(self, r: int) -> dict[int, int]:
        out: dict[int, int] = {}
        for (_, u), d in self.pages[r].items():
            out[u] = out.get(u, 0) + d
        return dict(sorted(out.items()))


def _coordinate_subspace(indices, total) -> list[list[Fraction]]:
    return [[Fraction(i == j) for i in range(total)] for j in indices]


def spectral_sequence(c: FracComplex) -> SpectralSequence:
    """Pages of the filtration spectral sequence, by exact linear algebra.

    Page dimensions are computed from cycle spaces
    Z_r^p = {x in F_p : dx in F_(p+r)} via
    dim E_r^p = dim Z_r^p - dim(Z_(r-1)^(p+1) + d Z_(r-1)^(p-r+1)),
    degree by degree.  Finite filtrations stabilize after their width.
    """
    if c.filtration is None:
        c = replace(c, filtration=tuple(0 for _ in range(c.dim)))
    levels = sorted(set(c.filtration)) or [0]
    pmin, pmax = levels[0], levels[-1]
    width = pmax - pmin
    by_degree: dict[int, list[int]] = {}
    for i, u in enumerate(c.degrees):
        by_degree.setdefault(u, []).append(i)

    def z_space(r: int, p: int, u: int) -> list[list[Fraction]]:
        """Basis of Z_r^p in degree u, as vectors over the gens at degree u."""
        cols = [i for i in by_degree.get(u, []) if c.filtration[i] >= p]
        allcols = by_degree.get(u, [])
        if not cols:
            return []
        # constraint: d x must vanish on targets with filtration < p + r
        targets = [i for i in by_degree.get(u + c.n, []) if c.filtration[i] < p + r]
        mat = [[c.diff[i][j] for j in cols] for i in targets]
        kern = _kernel(mat, len(cols)) if targets else \
            [[Fraction(a == b) for a in range(len(cols))] for b in range(len(cols))]
        # express over all gens of degree u
        pos = {j: allcols.index(j) for j in cols}
        out = []
        for v in kern:
            g = [Fraction(0)] * len(allcols)
            for x, j in zip(v, cols):
                g[pos[j]] = x
            out.append(g)
        return out

    def d_image(space: list[list[Fraction]], u_src: int, u_dst: int) -> list[list[Fraction]]:
        """Push vectors at degree u_src through d, landing at degree u_dst."""
        src = by_degree.get(u_src, [])
        dst = by_degree.get(u_dst, [])
        out = []
        for v in space:
            g = [Fraction(0)] * c.dim
            for x, j in zip(v, src):
                g[j] = x
            w = _matvec(c.diff, g)
            out.append([w[i] for i in dst])
        return out

    degrees = sorted(by_degree)
    pages: list[dict[tuple[int, int], int]] = []
    # page 0: associated graded
    page0: dict[tuple[int, int], int] = {}
    for u in degrees:
        for i in by_degree[u]:
            key = (c.filtration[i], u)
            page0[key] = page0.get(key, 0) + 1
    pages.append(page0)
    last = width + 1
    for r in range(1, last + 1):
        page: dict[tuple[int, int], int] = {}
        for u in degrees:
            for p in levels:
                zr = z_space(r, p, u)
                if not zr:
                    continue
                den = z_space(r - 1, p + 1, u) + \
                    d_image(z_space(r - 1, p - r + 1, u - c.n), u - c.n, u)
                dim = len(_rref(zr)[0]) - _rank(den)
                if dim:
                    page[(p, u)] = dim
        pages.append(page)
    infinity = pages[last]
    stab = next(r for r in range(last + 1) if pages[r] == infinity)
    return SpectralSequence(c.n, tuple(pages), stab, infinity)


def graded_homology_dims(c: FracComplex) -> dict[tuple[int, int], int]:
    """Dimensions of the filtration's associated graded on homology."""
    if c.filtration is None:
        c = replace(c, filtration=tuple(0 for _ in range(c.dim)))
    by_degree: dict[int, list[int]] = {}
    for i, u in enumerate(c.degrees):
        by_degree.setdefault(u, []).append(i)
    levels = sorted(set(c.filtration))
    out: dict[tuple[int, int], int] = {}
    for u, cols in by_degree.items():
        rows_out = by_degree.get(u + c.n, [])
        cols_in = by_degree.get(u - c.n, [])
        image = [[c.diff[i][j] for i in cols] for j in cols_in]

        def filtered_part(p: int) -> int:
            sub = [j for j in cols if c.filtration[j] >= p]
            mat = [[c.diff[i][j] for j in sub] for i in rows_out]
            kern = _kernel(mat, len(sub)) if rows_out else \
                [[Fraction(a == b) for a in range(len(sub))] for b in range(len(sub))]
            vecs = []
            for v in kern:
                g = [Fraction(0)] * len(cols)
                for x, j in zip(v, sub):
                    g[cols.index(j)] = x
                vecs.append(g)
            return _rank(vecs + image) - _rank(image)

        for k, p in enumerate(levels):
            nxt = levels[k + 1] if k + 1 < len(levels) else p + 1
            d = filtered_part(p) - filtered_part(nxt)
            if d:
                out[(p, u)] = out.get((p, u), 0) + d
    return out


# -- JSON form ---------------------------------------------------------------------


def complex_to_json(c: FracComplex) -> str:
    gens = []
    for i in range(c.dim):
        g: dict = {"name": c.names[i], "deg_times_n": c.degrees[i]}
        if c.filtration is not None:
            g["filt"] = c.filtration[i]
        gens.append(g)
    rows = [[str(x) for x in row] for row in c.diff]
    return json.dumps({"n": c.n, "generators": gens, "differential": rows}, indent=1)


def complex_from_json(text: str) -> FracComplex:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ComplexError("shape", f"bad JSON: {e}")
    try:
        n = data["n"]
        gens = data["generators"]
        degrees = [g["deg_times_n"] for g in gens]
        names = [g.get("name", f"x{i}") for i, g in enumerate(gens)]
        filts = [g.get("filt") for g in gens]
        rows = [[Fraction(str(x)) for x in row] for row in data["differential"]]
    except (KeyError, TypeError, ValueError) as e:
        raise ComplexError("shape", f"bad complex JSON: {e}")
    filtration = None
    if any(f is not None for f in filts):
        filtration = [f if f is not None else 0 for f in filts]
    return build(n, degrees, rows, filtration=filtration, names=names)
