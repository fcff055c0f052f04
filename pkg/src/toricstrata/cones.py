"""Pointed rational polyhedral cones and their face lattices.

A cone is stored by its extremal ray generators (primitive integer vectors,
input order preserved).  Validation rejects zero, non-primitive (unless
normalization is requested), duplicate and non-extremal rays, and cones that
contain a line.  Face machinery requires a full-dimensional cone; inputs
spanning a proper subspace go through :func:`split_degenerate` first, which
factors off the torus directions exactly.

The facet enumeration is deliberately brute force over ray subsets; the
intended envelope is at most ~12 rays in rank at most ~6.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import ConsistencyError, InputError
from .linalg import (
    IntMatrix,
    IntVec,
    integer_rank,
    linear_system,
    primitive_vector,
    rational_feasible,
    smith_normal_form,
    solve_integer_system,
)

__all__ = [
    "Cone",
    "Face",
    "SplitCone",
    "build_cone",
    "face_from_ray_indices",
    "face_lattice",
    "facet_normals",
    "is_smooth_face",
    "split_degenerate",
]


@dataclass(frozen=True)
class Cone:
    """A pointed cone: primitive, pairwise distinct, extremal generators."""

    ambient_rank: int
    rays: tuple[IntVec, ...]

    @property
    def nrays(self) -> int:
        return len(self.rays)

    def is_full_dimensional(self) -> bool:
        if self.ambient_rank == 0:
            return True
        mat = IntMatrix(self.nrays, self.ambient_rank, self.rays)
        return integer_rank(mat) == self.ambient_rank


@dataclass(frozen=True)
class Face:
    """A face of a cone, identified by the sorted indices of its rays."""

    ray_indices: tuple[int, ...]
    dim: int


@dataclass(frozen=True)
class SplitCone:
    """Degenerate-input factorization: X = (full-dimensional part) x torus.

    ``sublattice_basis`` rows are a basis of the saturated sublattice spanned
    by the input rays; the induced cone lives in that basis and embedding its
    rays back through the basis reproduces the input rays exactly.
    """

    sublattice_basis: IntMatrix
    cone: Cone
    torus_rank: int


def _validated_rays(
    ambient_rank: int, raw_rays: Sequence[Sequence[int]], normalize: bool
) -> list[IntVec]:
    rays: list[IntVec] = []
    for idx, raw in enumerate(raw_rays):
        vec = tuple(raw)
        if len(vec) != ambient_rank:
            raise InputError(
                f"ray #{idx} has {len(vec)} coordinates, expected {ambient_rank}"
            )
        for x in vec:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"ray #{idx} has a non-integer coordinate")
        if not any(vec):
            raise InputError(f"ray #{idx} is the zero vector")
        prim = primitive_vector(vec)
        if prim != vec:
            if not normalize:
                raise InputError(
                    f"ray #{idx} {list(vec)} is not primitive; "
                    f"did you mean {list(prim)}? (enable normalization to accept)"
                )
            vec = prim
        rays.append(vec)
    seen: dict[IntVec, int] = {}
    for idx, vec in enumerate(rays):
        if vec in seen:
            raise InputError(f"ray #{idx} duplicates ray #{seen[vec]} ({list(vec)})")
        seen[vec] = idx
    return rays


def build_cone(
    ambient_rank: int, raw_rays: Sequence[Sequence[int]], normalize: bool = False
) -> Cone:
    """Validate generators and build a pointed cone.

    Rejects zero, non-primitive (without ``normalize``), duplicate and
    non-extremal rays, and generator sets that span a line through the
    origin.  Ray order is preserved.
    """
    if ambient_rank < 1:
        raise InputError("ambient rank must be at least 1")
    if not raw_rays:
        raise InputError("at least one ray is required")
    rays = _validated_rays(ambient_rank, raw_rays, normalize)
    m = len(rays)

    # Pointedness: some nonzero nonnegative combination of rays vanishes
    # exactly when the cone contains a line.
    eqs = [(tuple(r[c] for r in rays), 0) for c in range(ambient_rank)]
    eqs.append((tuple(1 for _ in range(m)), 1))
    nonneg = [
        (tuple(1 if j == i else 0 for j in range(m)), 0, False) for i in range(m)
    ]
    if rational_feasible(linear_system(m, eqs, nonneg)) is not None:
        raise InputError("cone is not pointed (it contains a line)")

    # Extremality: no ray may be a nonnegative combination of the others.
    for i in range(m):
        others = [j for j in range(m) if j != i]
        eqs = [
            (tuple(rays[j][c] for j in others), rays[i][c])
            for c in range(ambient_rank)
        ]
        nonneg = [
            (tuple(1 if k == j else 0 for k in range(len(others))), 0, False)
            for j in range(len(others))
        ]
        witness = rational_feasible(linear_system(len(others), eqs, nonneg))
        if witness is not None:
            combo = ", ".join(
                f"{w} * ray#{others[j]}" for j, w in enumerate(witness) if w
            )
            raise InputError(
                f"ray #{i} {list(rays[i])} is not extremal: "
                f"it equals {combo if combo else '0'}"
            )
    return Cone(ambient_rank, tuple(rays))


def _require_full_dimensional(cone: Cone) -> None:
    if not cone.is_full_dimensional():
        raise InputError(
            "cone is not full-dimensional; run split_degenerate and work with "
            "the induced cone"
        )


@lru_cache(maxsize=None)
def facet_normals(cone: Cone) -> tuple[IntVec, ...]:
    """Primitive inner normals of the facets of a full-dimensional cone.

    Brute force: every (rank-1)-subset of rays spanning a hyperplane
    proposes a normal, which is kept when it supports the whole cone.
    """
    _require_full_dimensional(cone)
    n = cone.ambient_rank
    if n == 0:
        return ()
    normals: set[IntVec] = set()
    for subset in combinations(range(cone.nrays), n - 1):
        rows = [cone.rays[i] for i in subset]
        if rows and integer_rank(IntMatrix.from_rows(rows, n)) != n - 1:
            continue
        sol = solve_integer_system(
            linear_system(n, [(row, 0) for row in rows])
        )
        if sol is None or len(sol.kernel_basis) != 1:
            continue
        u = primitive_vector(sol.kernel_basis[0])
        pairings = [sum(a * b for a, b in zip(ray, u)) for ray in cone.rays]
        if all(p >= 0 for p in pairings):
            normals.add(u)
        elif all(p <= 0 for p in pairings):
            normals.add(tuple(-x for x in u))
    return tuple(sorted(normals))


@lru_cache(maxsize=None)
def face_lattice(cone: Cone) -> tuple[Face, ...]:
    """All faces of a full-dimensional pointed cone, sorted by (dim, rays).

    Faces are exactly the intersections of facets with the cone; each is
    identified by the set of rays it contains (the apex has none, the cone
    itself has all).
    """
    _require_full_dimensional(cone)
    normals = facet_normals(cone)
    pairings = [
        tuple(sum(a * b for a, b in zip(ray, u)) for u in normals)
        for ray in cone.rays
    ]
    everything = frozenset(range(cone.nrays))
    sets = {everything}
    queue = [everything]
    while queue:
        current = queue.pop()
        for k in range(len(normals)):
            cut = frozenset(i for i in current if pairings[i][k] == 0)
            if cut not in sets:
                sets.add(cut)
                queue.append(cut)
    faces = []
    for s in sets:
        indices = tuple(sorted(s))
        if indices:
            rows = [cone.rays[i] for i in indices]
            dim = integer_rank(IntMatrix.from_rows(rows, cone.ambient_rank))
        else:
            dim = 0
        faces.append(Face(indices, dim))
    faces.sort(key=lambda f: (f.dim, f.ray_indices))
    return tuple(faces)


def face_from_ray_indices(cone: Cone, ray_indices: Sequence[int]) -> Face:
    """Locate the face with exactly these rays; reject non-faces."""
    key = tuple(sorted(ray_indices))
    for face in face_lattice(cone):
        if face.ray_indices == key:
            return face
    raise InputError(f"ray index set {list(key)} is not a face of the cone")


def is_smooth_face(cone: Cone, face: Face) -> bool:
    """Whether the rays of the face extend to a lattice basis.

    Needs as many rays as dimensions (simplicial) and, by the Smith form
    of the ray submatrix, every invariant factor equal to 1.
    """
    if not face.ray_indices:
        return True
    if len(face.ray_indices) != face.dim:
        return False
    rows = [cone.rays[i] for i in face.ray_indices]
    _, s, _ = smith_normal_form(IntMatrix.from_rows(rows, cone.ambient_rank))
    for i in range(min(s.rows, s.cols)):
        d = s.entries[i][i]
        if d > 1:
            return False
    return True


def _kernel_rows(mat_rows: list[IntVec], dim: int) -> tuple[IntVec, ...]:
    """Basis of the integer kernel {x : row . x == 0 for all rows}."""
    sol = solve_integer_system(
        linear_system(dim, [(row, 0) for row in mat_rows])
    )
    if sol is None:
        raise ConsistencyError("homogeneous system reported unsolvable")
    return sol.kernel_basis


def split_degenerate(
    ambient_rank: int, raw_rays: Sequence[Sequence[int]], normalize: bool = False
) -> SplitCone:
    """Factor a possibly degenerate input into cone part and torus part.

    The rays span a saturated sublattice of some rank ``d``; they are
    re-expressed in a basis of it, producing a full-dimensional cone of rank
    ``d`` plus ``torus_rank = ambient_rank - d`` free directions.  An empty
    ray list is the pure torus case (zero-dimensional cone marker).
    """
    if ambient_rank < 0:
        raise InputError("ambient rank must be nonnegative")
    rays = _validated_rays(ambient_rank, raw_rays, normalize)
    if not rays:
        return SplitCone(IntMatrix(0, ambient_rank, ()), Cone(0, ()), ambient_rank)

    # Saturation = kernel of the kernel: integer kernels are saturated, and
    # the orthogonal complement of the complement of the ray span is exactly
    # the rational ray span intersected with the lattice.
    complement = _kernel_rows(rays, ambient_rank)
    sat_basis = _kernel_rows(list(complement), ambient_rank)
    d = len(sat_basis)
    basis = IntMatrix.from_rows(sat_basis, ambient_rank)

    induced: list[IntVec] = []
    for ray in rays:
        eqs = [
            (tuple(sat_basis[l][c] for l in range(d)), ray[c])
            for c in range(ambient_rank)
        ]
        sol = solve_integer_system(linear_system(d, eqs))
        if sol is None or sol.kernel_basis:
            raise ConsistencyError("ray does not embed uniquely in the sublattice")
        induced.append(sol.particular)
    cone = build_cone(d, induced)
    if not cone.is_full_dimensional():
        raise ConsistencyError("induced cone failed to be full-dimensional")
    return SplitCone(basis, cone, ambient_rank - d)
