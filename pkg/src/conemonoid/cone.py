"""Exact polyhedral cone engine.

Rational pointed cones carry both a V-representation (primitive integer
extreme rays) and an H-representation (facet normals plus span equations),
cross-checked on construction.  Cones with quadratic-irrational generators
support only ray storage, rationality tests, realizability and membership.

All feasibility questions (membership in a conic hull, pointedness) are
decided by exact Fourier-Motzkin elimination after substituting out the
equality constraints, so no LP solver is involved.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    GeneratorsInsufficientError,
    NotInteriorError,
    NotPointedError,
    WindowTooSmallError,
)
from .exactarith import (
    QuadScalar,
    dot,
    field_rank,
    kernel_basis,
    mat_rank,
    primitive_vector,
    scalar_sign,
    solve_linear,
    vsub,
)


# ---------------------------------------------------------------------------
# exact Fourier-Motzkin feasibility
# ---------------------------------------------------------------------------


def _as_field(x):
    return Fraction(x) if isinstance(x, int) else x


def _normalize_row(row):
    """Scale an inequality row by a positive scalar into a canonical form."""
    if all(isinstance(x, (int, Fraction)) for x in row):
        fr = [Fraction(x) for x in row]
        if all(f == 0 for f in fr):
            return tuple(fr)
        denom = math.lcm(*(f.denominator for f in fr))
        ints = [int(f * denom) for f in fr]
        g = math.gcd(*(abs(v) for v in ints))
        return tuple(Fraction(v // g) for v in ints)
    lead = next((x for x in row if scalar_sign(x) != 0), None)
    if lead is None:
        return tuple(row)
    scale = (lead if scalar_sign(lead) > 0 else -lead).inverse()
    return tuple(scale * x for x in row)


def _fm_eliminate(rows, nvars):
    """Feasibility of {t : row[:nvars] . t + row[nvars] >= 0 for all rows}."""
    rows = {_normalize_row(r) for r in rows}
    for var in range(nvars):
        pos, neg, rest = [], [], []
        for row in rows:
            s = scalar_sign(row[var])
            (pos if s > 0 else neg if s < 0 else rest).append(row)
        new_rows = set(rest)
        for p in pos:
            for q in neg:
                combined = tuple(p[i] * (-q[var]) + q[i] * p[var] for i in range(nvars + 1))
                new_rows.add(_normalize_row(combined))
        rows = new_rows
    return all(scalar_sign(row[-1]) >= 0 for row in rows)


def _feasible_nonneg(columns, target) -> bool:
    """Does target = sum t_i * columns[i] admit a solution with all t_i >= 0?

    Equalities are substituted out by exact elimination first; the remaining
    sign constraints go through Fourier-Motzkin.
    """
    k = len(columns)
    if k == 0:
        return all(scalar_sign(x) == 0 for x in target)
    d = len(target)
    # augmented equality system over t: for each coordinate j,
    #   sum_i columns[i][j] * t_i = target[j]
    eq = [[_as_field(columns[i][j]) for i in range(k)] + [_as_field(target[j])] for j in range(d)]
    # forward elimination with full pivoting over the variable columns
    pivots = []  # (row, col)
    used_rows: set[int] = set()
    for col in range(k):
        piv = next(
            (r for r in range(d) if r not in used_rows and scalar_sign(eq[r][col]) != 0),
            None,
        )
        if piv is None:
            continue
        used_rows.add(piv)
        pivots.append((piv, col))
        head = eq[piv][col]
        for r in range(d):
            if r == piv or scalar_sign(eq[r][col]) == 0:
                continue
            factor = eq[r][col] / head
            eq[r] = [x - factor * y for x, y in zip(eq[r], eq[piv])]
    for r in range(d):
        if r not in used_rows and scalar_sign(eq[r][k]) != 0:
            return False  # 0 = nonzero: inconsistent
    # express each variable over the free variables: t = subst . (f, 1)
    free = [c for c in range(k) if c not in {c for _, c in pivots}]
    nfree = len(free)
    subst = {}
    for piv, col in pivots:
        head = eq[piv][col]
        row = [-(eq[piv][f] / head) for f in free] + [eq[piv][k] / head]
        subst[col] = row
    ineqs = []
    for i in range(k):
        if i in subst:
            ineqs.append(tuple(subst[i]))
        else:
            unit = [Fraction(0)] * (nfree + 1)
            unit[free.index(i)] = Fraction(1)
            ineqs.append(tuple(unit))
    return _fm_eliminate(ineqs, nfree)


def in_conic_hull(x, generators) -> bool:
    """Exact membership of x in cone(generators)."""
    return _feasible_nonneg(list(generators), list(x))


def _has_nonneg_dependency(generators) -> bool:
    """True iff 0 is a nontrivial nonnegative combination (hull contains a line)."""
    k = len(generators)
    if k == 0:
        return False
    zero = [0] * len(generators[0])
    cols = [list(g) + [1] for g in generators]  # extra row: sum t_i = 1
    return _feasible_nonneg(cols, zero + [1])


# ---------------------------------------------------------------------------
# ray normalization
# ---------------------------------------------------------------------------


def _is_quad_vector(vec) -> bool:
    return any(isinstance(x, QuadScalar) and x.b != 0 for x in vec)


def canonical_ray(vec):
    """Canonical representative of the ray through vec (positive scaling only).

    Rational input becomes a primitive integer tuple.  Irrational input is
    scaled so its first nonzero coordinate is 1, after which any remaining
    rational coordinates are stored as Fractions.
    """
    if not _is_quad_vector(vec):
        return primitive_vector([x.a if isinstance(x, QuadScalar) else x for x in vec])
    lead = next(x for x in vec if scalar_sign(x) != 0)
    lead = lead if isinstance(lead, QuadScalar) else QuadScalar(Fraction(lead), Fraction(0), 2)
    scale = lead.inverse() if lead.sign() > 0 else (-lead).inverse()
    scaled = [scale * (x if isinstance(x, QuadScalar) else Fraction(x)) for x in vec]
    out = tuple(x.a if isinstance(x, QuadScalar) and x.b == 0 else x for x in scaled)
    if all(isinstance(x, (int, Fraction)) for x in out):
        return primitive_vector(out)
    return out


def is_rational_ray(direction) -> bool:
    """True iff the ray through direction contains a nonzero rational vector."""
    if not _is_quad_vector(direction):
        return True
    return not _is_quad_vector(canonical_ray(direction))


# ---------------------------------------------------------------------------
# the cone itself
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """A face of a pointed cone, identified by the extreme rays lying on it.

    supporting_normal is an exposed-face witness: it vanishes on the face's
    rays and is strictly positive on all other rays (None for the top face).
    """

    ray_indices: tuple[int, ...]
    dim: int
    supporting_normal: tuple[int, ...] | None


class FaceLattice:
    """All faces of a pointed rational cone, ordered by inclusion."""

    def __init__(self, faces: list[Face], rays):
        self.faces = faces
        self.rays = rays
        self._by_rayset = {frozenset(f.ray_indices): i for i, f in enumerate(faces)}
        self.bottom = self._by_rayset[frozenset()]
        self.top = max(range(len(faces)), key=lambda i: len(faces[i].ray_indices))

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def index_of(self, ray_indices) -> int | None:
        return self._by_rayset.get(frozenset(ray_indices))

    def meet(self, i: int, j: int) -> int:
        """Greatest lower bound, realized as the intersection of ray sets."""
        common = frozenset(self.faces[i].ray_indices) & frozenset(self.faces[j].ray_indices)
        idx = self._by_rayset.get(common)
        assert idx is not None, "face lattice not meet-closed"
        return idx

    def leq(self, i: int, j: int) -> bool:
        return set(self.faces[i].ray_indices) <= set(self.faces[j].ray_indices)


class Cone:
    """A conic hull of finitely many vectors in Q^d (or one quadratic extension).

    Pointed rational cones carry extreme rays, facet normals (half-spaces
    <x, n> >= 0) and span equations (<x, w> = 0); the two representations are
    verified against each other on construction.
    """

    def __init__(self, *, dim_ambient, generators, rays, facets, equations, dim, pointed, rational):
        self.dim_ambient = dim_ambient
        self.generators = generators
        self.rays = rays
        self.facets = facets
        self.equations = equations
        self.dim = dim
        self.pointed = pointed
        self.rational = rational
        self._lattice = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_generators(cls, gens, *, require_pointed: bool = True) -> "Cone":
        gens = [tuple(g) for g in gens]
        if not gens:
            raise ValueError("generators must be nonempty")
        d = len(gens[0])
        if any(len(g) != d for g in gens):
            raise ValueError("generators must share one dimension")
        if any(all(scalar_sign(x) == 0 for x in g) for g in gens):
            raise ValueError("generators must be nonzero")
        canon = []
        for g in gens:
            ray = canonical_ray(g)
            if ray not in canon:
                canon.append(ray)
        if any(_is_quad_vector(g) for g in canon):
            return cls._build_quadratic(d, canon, require_pointed)
        return cls._build_rational(d, canon, require_pointed)

    @classmethod
    def hull(cls, gens) -> "Cone":
        """Like from_generators but tolerates hulls containing a line."""
        return cls.from_generators(gens, require_pointed=False)

    @classmethod
    def _build_quadratic(cls, d, canon, require_pointed) -> "Cone":
        pointed = not _has_nonneg_dependency(canon)
        if not pointed:
            if require_pointed:
                raise NotPointedError("conic hull contains a line")
            return cls(
                dim_ambient=d, generators=tuple(canon), rays=(), facets=None,
                equations=None, dim=field_rank(canon), pointed=False, rational=False,
            )
        rays = [g for i, g in enumerate(canon) if not in_conic_hull(g, canon[:i] + canon[i + 1 :])]
        return cls(
            dim_ambient=d, generators=tuple(canon), rays=tuple(rays), facets=None,
            equations=None, dim=field_rank(canon), pointed=True, rational=False,
        )

    @classmethod
    def _build_rational(cls, d, canon, require_pointed) -> "Cone":
        pointed = not _has_nonneg_dependency(canon)
        if not pointed:
            if require_pointed:
                raise NotPointedError("conic hull contains a line")
            return cls(
                dim_ambient=d, generators=tuple(canon), rays=(), facets=None,
                equations=None, dim=mat_rank(canon), pointed=False, rational=True,
            )
        rays = sorted(
            g for i, g in enumerate(canon) if not in_conic_hull(g, canon[:i] + canon[i + 1 :])
        )
        r = mat_rank(rays)
        basis = _independent_subset(rays, r)
        coords = [_span_coordinates(basis, ray) for ray in rays]
        coord_facets = _coordinate_facets(coords, r)
        _verify_h_equals_v(coords, coord_facets, r)
        facets = tuple(_lift_normal(basis, d, n) for n in coord_facets)
        equations = tuple(primitive_vector(w) for w in kernel_basis(basis))
        cone = cls(
            dim_ambient=d, generators=tuple(canon), rays=tuple(rays), facets=facets,
            equations=equations, dim=r, pointed=True, rational=True,
        )
        for ray in rays:
            assert all(dot(ray, n) >= 0 for n in facets)
            assert all(dot(ray, w) == 0 for w in equations)
        return cone

    # -- predicates ----------------------------------------------------------

    def contains(self, x) -> bool:
        x = tuple(x)
        if self.rational and self.facets is not None:
            if not all(isinstance(v, (int, Fraction)) for v in x):
                return self._contains_via_hull(x)
            return all(dot(x, w) == 0 for w in self.equations) and all(
                dot(x, n) >= 0 for n in self.facets
            )
        return self._contains_via_hull(x)

    def _contains_via_hull(self, x) -> bool:
        return in_conic_hull(x, self.generators)

    def strictly_contains(self, x) -> bool:
        """Interior membership; for full-dimensional cones this is strict facet slack."""
        x = tuple(x)
        if self.facets is None:
            raise ValueError("interior test needs facet data")
        return all(dot(x, w) == 0 for w in self.equations) and all(
            scalar_sign(dot(x, n)) > 0 for n in self.facets
        )

    def is_pointed(self) -> bool:
        return self.pointed

    def is_positive(self):
        """Whether all extreme rays are componentwise nonnegative.

        When they are not but the cone is pointed, a unimodular change of
        basis making every ray nonnegative is searched for within a small
        budget; returns (flag, witness-or-None).
        """
        rays = self.rays if self.rays else self.generators
        if all(all(scalar_sign(x) >= 0 for x in ray) for ray in rays):
            return True, None
        if not self.pointed or not self.rational or self.facets is None:
            return False, None
        return False, self._positivity_witness()

    def _positivity_witness(self):
        pool = list(self.facets)
        for w in self.equations:
            pool.append(w)
            pool.append(tuple(-v for v in w))
        for i, j in itertools.combinations(range(len(self.facets)), 2):
            pool.append(primitive_vector(tuple(a + b for a, b in zip(self.facets[i], self.facets[j]))))
        seen = []
        for v in pool:
            if v not in seen:
                seen.append(v)
        d = self.dim_ambient
        for combo in itertools.combinations(seen, d):
            if abs(int_determinant(list(combo))) == 1:
                if all(all(dot(ray, row) >= 0 for row in combo) for ray in self.rays):
                    return tuple(combo)
        return None

    def check_realizable(self) -> bool:
        """True iff every 1-dimensional face (extreme ray) is a rational ray."""
        if not self.pointed:
            raise NotPointedError("realizability is defined for pointed cones")
        positive, _ = self.is_positive()
        if not positive:
            raise ValueError("realizability test expects a positive cone")
        return all(is_rational_ray(ray) for ray in self.rays)

    # -- face lattice ----------------------------------------------------------

    def face_lattice(self) -> FaceLattice:
        if self._lattice is not None:
            return self._lattice
        if not (self.pointed and self.rational and self.facets is not None):
            raise NotPointedError("face lattice needs a pointed rational cone")
        facet_sets = [
            frozenset(i for i, ray in enumerate(self.rays) if dot(ray, n) == 0)
            for n in self.facets
        ]
        all_rays = frozenset(range(len(self.rays)))
        closed = {all_rays}
        frontier = {all_rays}
        while frontier:
            nxt = set()
            for s in frontier:
                for fs in facet_sets:
                    meet = s & fs
                    if meet not in closed:
                        closed.add(meet)
                        nxt.add(meet)
            frontier = nxt
        faces = []
        for rayset in sorted(closed, key=lambda s: (len(s), sorted(s))):
            members = sorted(rayset)
            fdim = mat_rank([self.rays[i] for i in members]) if members else 0
            if rayset == all_rays:
                normal = None
            else:
                total = [0] * self.dim_ambient
                for n, fs in zip(self.facets, facet_sets):
                    if rayset <= fs:
                        total = [a + b for a, b in zip(total, n)]
                normal = primitive_vector(total)
                for i, ray in enumerate(self.rays):
                    val = dot(ray, normal)
                    assert (val == 0) if i in rayset else (val > 0), "exposed-face witness failed"
            faces.append(Face(tuple(members), fdim, normal))
        order = sorted(range(len(faces)), key=lambda i: (faces[i].dim, faces[i].ray_indices))
        lattice = FaceLattice([faces[i] for i in order], self.rays)
        # meet closure sanity
        for i in range(len(lattice.faces)):
            for j in range(i, len(lattice.faces)):
                lattice.meet(i, j)
        self._lattice = lattice
        return lattice

    def face_subcone(self, face: Face) -> "Cone":
        """The face itself as a standalone cone (the zero face is not a cone here)."""
        members = [self.rays[i] for i in face.ray_indices]
        if not members:
            raise ValueError("the zero face has no generating rays")
        return Cone.from_generators(members)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (
            self.dim_ambient == other.dim_ambient
            and self.rays == other.rays
            and self.pointed == other.pointed
        )

    def __hash__(self):
        return hash((self.dim_ambient, self.rays))

    def __repr__(self):
        kind = "rational" if self.rational else "quadratic"
        return f"Cone(dim={self.dim}/{self.dim_ambient}, rays={len(self.rays)}, {kind})"


# ---------------------------------------------------------------------------
# construction internals (span coordinates)
# ---------------------------------------------------------------------------


def _independent_subset(vectors, r):
    basis = []
    for v in vectors:
        if mat_rank(basis + [v]) > len(basis):
            basis.append(v)
        if len(basis) == r:
            break
    assert len(basis) == r
    return basis


def _span_coordinates(basis, vec):
    """Coordinates of vec in the row space of basis (exact, unique)."""
    cols = [[Fraction(b[j]) for b in basis] for j in range(len(vec))]
    sol = solve_linear(cols, [Fraction(x) for x in vec])
    assert sol is not None, "vector outside span"
    return tuple(sol)


def _lift_normal(basis, d, coord_normal):
    """Ambient functional agreeing with coord_normal on the span, zero on its complement."""
    rows = [list(b) for b in basis]
    rhs = list(coord_normal)
    for w in kernel_basis(basis):
        rows.append(list(w))
        rhs.append(Fraction(0))
    u = solve_linear(rows, rhs)
    assert u is not None
    return primitive_vector(u)


def _coordinate_facets(coords, r):
    """Facet normals of a pointed full-dimensional cone given by coords in Q^r."""
    if r == 1:
        sign = scalar_sign(coords[0][0])
        assert all(scalar_sign(c[0]) == sign for c in coords)
        return [(sign,)]
    normals = set()
    for subset in itertools.combinations(range(len(coords)), r - 1):
        rows = [coords[i] for i in subset]
        if mat_rank(rows) != r - 1:
            continue
        kern = kernel_basis(rows)
        if len(kern) != 1:
            continue
        w = primitive_vector(kern[0])
        values = [dot(c, w) for c in coords]
        if all(v >= 0 for v in values):
            pass
        elif all(v <= 0 for v in values):
            w = tuple(-x for x in w)
        else:
            continue
        normals.add(w)
    assert mat_rank(sorted(normals)) == r, "facet system does not pin a pointed cone"
    return sorted(normals)


def _verify_h_equals_v(coords, facets, r):
    """Exact check that the half-space intersection equals the hull of coords."""
    ray_set = {primitive_vector(c) for c in coords}
    if r == 1:
        return
    for subset in itertools.combinations(range(len(facets)), r - 1):
        rows = [facets[i] for i in subset]
        kern = kernel_basis(rows)
        if len(kern) != 1:
            continue
        for cand in (kern[0], tuple(-x for x in kern[0])):
            if all(dot(cand, n) >= 0 for n in facets):
                w = primitive_vector(cand)
                assert w in ray_set or in_conic_hull(w, sorted(ray_set)), (
                    "H-representation admits a ray outside the hull"
                )


def int_determinant(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(rows)
    m = [[int(x) for x in row] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# realization
# ---------------------------------------------------------------------------


def realize(cone: Cone, window, *, finitary_shift: bool = False):
    """Nonzero lattice points of the cone inside the box [0, window]^d.

    The returned points regenerate the cone whenever every extreme ray has its
    primitive integer point inside the window; that condition is checked and a
    WindowTooSmallError is raised when it fails.  With finitary_shift=True the
    points of {0} u (v0 + M) are returned instead, where v0 is the graded-lex
    smallest nonzero lattice point (the shifted monoid still generates the
    same cone and is finitary by construction).
    """
    if not cone.rational or cone.facets is None:
        raise ValueError("realize needs a rational pointed cone")
    if not cone.check_realizable():
        raise ValueError("cone is not realizable")
    box = tuple(window)
    if len(box) != cone.dim_ambient:
        raise ValueError("window dimension mismatch")
    for ray in cone.rays:
        if any(abs(c) > b for c, b in zip(ray, box)):
            raise WindowTooSmallError(f"extreme ray {ray} has no lattice point inside window {box}")
    pts = [
        p
        for p in itertools.product(*(range(b + 1) for b in box))
        if any(p) and cone.contains(p)
    ]
    pts.sort(key=lambda p: (sum(p), p))
    if finitary_shift:
        v0 = pts[0]
        shifted = [p for p in pts if cone.contains(vsub(p, v0)) and all(a >= b for a, b in zip(p, v0))]
        return shifted
    regenerated = Cone.from_generators(pts)
    assert regenerated.rays == cone.rays and set(regenerated.facets) == set(cone.facets)
    return pts


def interior_simplex(cone: Cone, x) -> Cone:
    """A rational simplicial cone around an interior point, per the standard recipe.

    Returns a full-dimensional rational simplicial cone C_x with the ray of x
    strictly inside and C_x minus the origin contained in the interior of the
    input cone.  For 1-dimensional cones the cone itself is returned.
    """
    x = tuple(Fraction(v) for v in x)
    if cone.dim == 1:
        ray = cone.rays[0]
        sol = solve_linear([[Fraction(c)] for c in ray], list(x))
        if sol is None or sol[0] <= 0:
            raise NotInteriorError("x does not lie on the cone's ray")
        return cone
    if cone.facets is None or cone.dim != cone.dim_ambient:
        raise NotInteriorError("interior simplex needs a full-dimensional cone")
    positive, _ = cone.is_positive()
    if not positive:
        raise ValueError("interior simplex expects a positive cone")
    if not cone.strictly_contains(x):
        raise NotInteriorError("x is not interior to the cone")
    d = cone.dim_ambient
    # distance bound: sqrt(2)/N < <x,n>/|n| for every facet, via squared compare
    N = 1
    while True:
        ok = all(2 * dot(n, n) < N * N * dot(x, n) ** 2 for n in cone.facets)
        delta = Fraction(1, N * (d + 1))
        if ok and all(delta < xi for xi in x):
            break
        N *= 2
    q = [xi - Fraction(1, N * (d + 1)) for xi in x]
    rays = []
    for i in range(d):
        ray = list(q)
        ray[i] += Fraction(1, N)
        rays.append(tuple(ray))
    simplex = Cone.from_generators(rays)
    assert simplex.dim == d and len(simplex.rays) == d
    assert simplex.strictly_contains(x)
    for ray in simplex.rays:
        assert all(scalar_sign(dot(ray, n)) > 0 for n in cone.facets)
    return simplex


# ---------------------------------------------------------------------------
# placing triangulation on prescribed rays
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialCell:
    """Indices (into the prescribed generator list) of one simplicial cone."""

    ray_indices: tuple[int, ...]


@dataclass(frozen=True)
class Triangulation:
    generators: tuple
    cells: tuple[SimplicialCell, ...]


def _barycentric(cell_rays, x):
    cols = [[Fraction(r[j]) for r in cell_rays] for j in range(len(x))]
    sol = solve_linear(cols, [Fraction(v) for v in x])
    if sol is None:
        return None
    # solutions are unique only modulo the kernel; cells are independent, so
    # consistency of the full system must be rechecked
    for j in range(len(x)):
        if sum(Fraction(cell_rays[i][j]) * sol[i] for i in range(len(cell_rays))) != Fraction(x[j]):
            return None
    return sol


def _cell_contains(cell_rays, x):
    sol = _barycentric(cell_rays, x)
    return sol is not None and all(c >= 0 for c in sol)


def _facet_normal_in_span(span_basis, facet_rays, inside_ray):
    """Functional on the span vanishing on facet_rays, positive on inside_ray."""
    rows = [[dot(f, b) for b in span_basis] for f in facet_rays]
    if not rows:
        assert len(span_basis) == 1
        kern = [(Fraction(1),)]
    else:
        kern = kernel_basis(rows)
    assert len(kern) == 1, "facet does not span a hyperplane of the current support"
    coeff = kern[0]
    normal = tuple(
        sum(coeff[j] * Fraction(span_basis[j][t]) for j in range(len(span_basis)))
        for t in range(len(span_basis[0]))
    )
    val = dot(inside_ray, normal)
    assert val != 0
    return normal if val > 0 else tuple(-v for v in normal)


def triangulate(cone: Cone, prescribed) -> Triangulation:
    """Placing triangulation of the cone on the prescribed generators.

    Vectors are placed in input order (ties broken by index); a vector landing
    inside the current support stellarly subdivides the cells containing it,
    so every prescribed direction ends up as a ray of the triangulation.  The
    cover, pairwise-common-face and simpliciality invariants are verified
    exactly on the output.
    """
    if not (cone.pointed and cone.rational and cone.facets is not None):
        raise ValueError("triangulate needs a pointed rational cone")
    vecs = []
    for g in prescribed:
        ray = canonical_ray(g)
        if not cone.contains(ray):
            raise GeneratorsInsufficientError(f"prescribed vector {tuple(g)} lies outside the cone")
        if ray not in vecs:
            vecs.append(ray)
    covered = {ray for ray in cone.rays}
    if not covered <= set(vecs):
        raise GeneratorsInsufficientError("prescribed vectors do not generate every face")

    cells: list[tuple[int, ...]] = []
    placed: list[int] = []
    span_basis: list = []
    for idx, v in enumerate(vecs):
        if not cells:
            cells = [(idx,)]
            placed.append(idx)
            span_basis.append(v)
            continue
        if mat_rank(span_basis + [v]) > len(span_basis):
            cells = [cell + (idx,) for cell in cells]
            span_basis.append(v)
            placed.append(idx)
            continue
        inside = [c for c in cells if _cell_contains([vecs[i] for i in c], v)]
        if inside:
            new_cells = []
            for cell in cells:
                if cell not in inside:
                    new_cells.append(cell)
                    continue
                lam = _barycentric([vecs[i] for i in cell], v)
                support = [pos for pos, c in enumerate(lam) if c > 0]
                assert len(support) >= 2, "duplicate ray direction slipped through"
                for pos in support:
                    reduced = tuple(cell[t] for t in range(len(cell)) if t != pos)
                    new_cells.append(reduced + (idx,))
            cells = new_cells
        else:
            facet_count: dict[tuple[int, ...], list] = {}
            for cell in cells:
                for pos in range(len(cell)):
                    facet = tuple(cell[t] for t in range(len(cell)) if t != pos)
                    facet_count.setdefault(tuple(sorted(facet)), []).append((cell, cell[pos]))
            added = []
            for facet, owners in facet_count.items():
                if len(owners) != 1:
                    continue
                cell, missing = owners[0]
                normal = _facet_normal_in_span(span_basis, [vecs[i] for i in facet], vecs[missing])
                if dot(v, normal) < 0:
                    added.append(facet + (idx,))
            assert added, "vector outside support saw no boundary facet"
            cells = cells + added
        placed.append(idx)

    cells = sorted(tuple(sorted(c)) for c in cells)
    tri = Triangulation(tuple(vecs), tuple(SimplicialCell(c) for c in cells))
    _verify_triangulation(cone, tri)
    return tri


def _verify_triangulation(cone: Cone, tri: Triangulation):
    vecs = tri.generators
    r = cone.dim
    basis = _independent_subset(list(cone.rays), r)
    coords = {i: _span_coordinates(basis, v) for i, v in enumerate(vecs)}
    facet_coords = [tuple(dot(b, n) for b in basis) for n in cone.facets]

    used = set()
    for cell in tri.cells:
        rays = [vecs[i] for i in cell.ray_indices]
        assert len(cell.ray_indices) == r and mat_rank(rays) == r, "cell not simplicial of full dim"
        assert all(cone.contains(v) for v in rays)
        used.update(cell.ray_indices)
    assert used == set(range(len(vecs))), "some prescribed ray is missing from the triangulation"

    # pairwise intersections are the common faces
    cell_h = {}
    for cell in tri.cells:
        normals = []
        cc = [coords[i] for i in cell.ray_indices]
        for pos in range(r):
            others = [cc[t] for t in range(r) if t != pos]
            kern = kernel_basis(others) if others else [(Fraction(1),)]
            assert len(kern) == 1
            w = kern[0]
            if dot(cc[pos], w) < 0:
                w = tuple(-x for x in w)
            normals.append(primitive_vector(w))
        cell_h[cell.ray_indices] = normals
    for a, b in itertools.combinations(tri.cells, 2):
        shared = sorted(set(a.ray_indices) & set(b.ray_indices))
        constraints = cell_h[a.ray_indices] + cell_h[b.ray_indices]
        inter_rays = set()
        if r == 1:
            candidates = [coords[a.ray_indices[0]]]
        else:
            candidates = []
            for subset in itertools.combinations(range(len(constraints)), r - 1):
                kern = kernel_basis([constraints[i] for i in subset])
                if len(kern) == 1:
                    candidates.append(kern[0])
        for cand in candidates:
            for w in (cand, tuple(-x for x in cand)):
                if all(scalar_sign(v) == 0 for v in w):
                    continue
                if all(dot(w, n) >= 0 for n in constraints):
                    inter_rays.add(primitive_vector(w))
        shared_coords = sorted(primitive_vector(coords[i]) for i in shared)
        for w in inter_rays:
            assert w in shared_coords or (
                shared and in_conic_hull(w, shared_coords)
            ), "two cells overlap beyond their common face"

    # cover: every cell facet is either on the cone boundary (one owner) or shared (two)
    facet_owner: dict[tuple[int, ...], int] = {}
    for cell in tri.cells:
        for pos in range(r):
            facet = tuple(sorted(set(cell.ray_indices) - {cell.ray_indices[pos]}))
            owners = sum(1 for c in tri.cells if set(facet) <= set(c.ray_indices))
            facet_owner[facet] = owners
    for facet, owners in facet_owner.items():
        on_boundary = any(
            all(dot(coords[i], fc) == 0 for i in facet) for fc in facet_coords
        )
        if owners == 1:
            assert on_boundary, "interior gap: unshared facet off the boundary"
        else:
            assert owners == 2, "facet shared by more than two cells"
