"""Divisor class groups of affine toric varieties and per-orbit data.

For a full-dimensional pointed cone the rays index the prime invariant
divisors.  The class group is the cokernel of the ray-pairing map
``Z^rank -> Z^rays``, ``x -> (<ray_i, x>)_i``; the tuple of images of the
standard basis vectors gives the divisor classes in ray order.

Each face carries the subgroup of the class group generated by the divisors
*not* containing the corresponding orbit (the complement ray set, ``dset``),
and the local class group is the quotient by that subgroup.  The subgroup
coincides with the semigroup the same classes generate; that identity is
re-verified numerically by :func:`verify_semigroup_equals_group` and treated
as a hard invariant (a counterexample aborts the run).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import (
    FgAbGroup,
    GroupElement,
    SubgroupHandle,
    group_from_cokernel,
    is_full,
    quotient_group,
    semigroup_member,
    subgroup_canon,
)
from .cones import Cone, Face, face_lattice, is_smooth_face
from .errors import ConsistencyError, InputError
from .linalg import IntMatrix, first_lattice_point, linear_system

__all__ = [
    "FaceOrbitData",
    "SemigroupCheck",
    "ToricData",
    "build_toric",
    "face_orbit_data",
    "verify_semigroup_equals_group",
]


@dataclass(frozen=True)
class ToricData:
    """Cone with its class group, divisor classes (ray order) and faces."""

    cone: Cone
    class_group: FgAbGroup
    divisor_classes: tuple[GroupElement, ...]
    faces: tuple[Face, ...]


@dataclass(frozen=True)
class FaceOrbitData:
    """Orbit-level invariants attached to one face.

    ``dset`` holds the indices of the rays outside the face: the divisors
    whose classes generate ``subgroup``.  ``local_class_group`` is the class
    group of the variety near the orbit, the quotient by ``subgroup``.
    """

    face: Face
    dset: tuple[int, ...]
    subgroup: SubgroupHandle
    local_class_group: FgAbGroup
    orbit_dim: int
    smooth: bool


@dataclass(frozen=True)
class SemigroupCheck:
    """Outcome of the semigroup-equals-group verification for one face."""

    verified: bool
    details: tuple[str, ...]


def build_toric(cone: Cone) -> ToricData:
    """Compute class-group data for a full-dimensional pointed cone."""
    n = cone.ambient_rank
    if not cone.is_full_dimensional():
        raise InputError(
            "toric divisor data needs a full-dimensional cone; run "
            "split_degenerate first"
        )
    pairing = IntMatrix(cone.nrays, n, cone.rays)
    group, classes = group_from_cokernel(pairing)
    if group.free_rank != cone.nrays - n:
        raise ConsistencyError("class group free rank differs from rays - rank")
    if not is_full(subgroup_canon(group, classes)):
        raise ConsistencyError("divisor classes fail to generate the class group")
    return ToricData(cone, group, classes, face_lattice(cone))


def face_orbit_data(toric: ToricData, face: Face) -> FaceOrbitData:
    """Divisor subgroup, local class group and smoothness for one face."""
    if face not in toric.faces:
        raise InputError("face does not belong to the cone's face lattice")
    inside = set(face.ray_indices)
    dset = tuple(i for i in range(toric.cone.nrays) if i not in inside)
    subgroup = subgroup_canon(toric.class_group, [toric.divisor_classes[i] for i in dset])
    local = quotient_group(toric.class_group, subgroup)
    return FaceOrbitData(
        face=face,
        dset=dset,
        subgroup=subgroup,
        local_class_group=local,
        orbit_dim=toric.cone.ambient_rank - face.dim,
        smooth=is_smooth_face(toric.cone, face),
    )


def _functional_witness(toric: ToricData, face: Face, dset, i: int):
    """Nonnegative coefficients for the inverse of class ``i`` via a character.

    A character vanishing on the face's rays, pairing at least 1 with ray
    ``i`` and nonnegatively with the other outside rays has a trivial
    divisor class, and reading off its pairings expresses the inverse of
    class ``i`` inside the semigroup of the outside-ray classes.  Such a
    character always exists because the face is exactly the cone's
    intersection with the face's span.
    """
    cone = toric.cone
    eqs = [(cone.rays[j], 0) for j in face.ray_indices]
    ineqs = [
        (cone.rays[j], 1 if j == i else 0, False) for j in dset
    ]
    system = linear_system(cone.ambient_rank, eqs, ineqs)
    base = max((abs(x) for ray in cone.rays for x in ray), default=1)
    for box in (4 * base, 64 * base):
        u = first_lattice_point(system, box)
        if u is not None:
            coeffs = []
            for j in dset:
                pairing = sum(a * b for a, b in zip(cone.rays[j], u))
                coeffs.append(pairing - 1 if j == i else pairing)
            return tuple(coeffs)
    return None


def verify_semigroup_equals_group(
    toric: ToricData, face: Face, coeff_bound: int = 16
) -> SemigroupCheck:
    """Check that the dset classes generate a semigroup closed under inverses.

    The subgroup generated by the dset classes always contains their
    nonnegative-combination semigroup; equality holds exactly when every
    generator's inverse is reachable.  Inverses are confirmed by a direct
    bounded membership search, or failing that by the character-functional
    construction; a certified miss would contradict a hard invariant of the
    theory, so it aborts instead of degrading.
    """
    data = face_orbit_data(toric, face)
    gens = [toric.divisor_classes[i] for i in data.dset]
    details: list[str] = []
    for i in data.dset:
        target = -toric.divisor_classes[i]
        if toric.class_group.free_rank == 0:
            result = semigroup_member(toric.class_group, gens, target, coeff_bound)
            if result.status == "no":
                raise ConsistencyError(
                    f"inverse of divisor class #{i} is provably outside the "
                    f"semigroup of face {list(face.ray_indices)}; the "
                    "subgroup/semigroup identity failed"
                )
            if result.status == "yes":
                continue
        witness = _functional_witness(toric, face, data.dset, i)
        if witness is not None:
            total = toric.class_group.zero()
            for c, g in zip(witness, gens):
                if c < 0:
                    raise ConsistencyError("functional witness went negative")
                total = total + c * g
            if total != target:
                raise ConsistencyError(
                    f"functional witness for class #{i} sums to {total.coords}, "
                    f"not the inverse {target.coords}"
                )
            continue
        result = semigroup_member(toric.class_group, gens, target, coeff_bound)
        if result.status == "no":
            raise ConsistencyError(
                f"inverse of divisor class #{i} is provably outside the "
                f"semigroup of face {list(face.ray_indices)}; the "
                "subgroup/semigroup identity failed"
            )
        if result.status != "yes":
            details.append(
                f"inverse of divisor class #{i} not located within coefficient "
                f"bound {coeff_bound} for face {list(face.ray_indices)}"
            )
    return SemigroupCheck(verified=not details, details=tuple(details))
