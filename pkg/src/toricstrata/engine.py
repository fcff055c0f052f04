"""Orbit stratification of an affine toric variety, cross-validated.

The stratification is computed three independent ways and the results are
compared before a report is returned:

* route one groups faces of the cone by the subgroup of the divisor class
  group generated by the classes of rays outside the face;
* route two runs the Luna stratification of the characteristic quasitorus
  action on the total coordinate space and carries it over face by face;
* route three connects orbits by explicit one-parameter automorphism
  subgroups found through root searches.

Routes one and two must agree exactly; route three must never join faces
from different strata, and when every connection search is conclusive it
must reproduce the strata exactly.  Any disagreement raises
:class:`~toricstrata.errors.ConsistencyError` because it can only mean a
bug, never a property of the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .abelian import FgAbGroup, GroupElement, SubgroupHandle, subgroup_canon, subgroup_leq
from .abelian import subgroup_structure as _structure_of
from .cones import Cone, Face, split_degenerate
from .divisors import FaceOrbitData, build_toric, face_orbit_data, verify_semigroup_equals_group
from .errors import ConsistencyError, InputError
from .linalg import IntVec
from .luna import cox_weight_system, face_support_bridge, luna_strata
from .roots import ConnectionGraph, connection_graph, default_box_bound, graph_components

__all__ = [
    "CrossChecks",
    "StratificationReport",
    "StratifyOptions",
    "Stratum",
    "closure_edges",
    "stratify",
]


@dataclass(frozen=True)
class StratifyOptions:
    """Tuning knobs for the searches; exactness is never affected.

    ``box_bound`` limits witness searches for connections (default: ten
    times the largest ray coordinate); ``coeff_bound`` is the first-pass
    coefficient cap of the semigroup verification.
    """

    box_bound: int | None = None
    coeff_bound: int = 16
    verify_semigroup: bool = True
    normalize: bool = False


@dataclass(frozen=True)
class Stratum:
    """One orbit of the connected automorphism group.

    ``faces`` lists the cone faces whose torus orbits this stratum unites;
    dimensions include the torus factor of a degenerate input.
    """

    index: int
    subgroup: SubgroupHandle
    structure: FgAbGroup
    local_class_group: FgAbGroup
    faces: tuple[Face, ...]
    orbit_dims: tuple[int, ...]
    dim: int
    smooth: bool


@dataclass(frozen=True)
class CrossChecks:
    """Outcome of the independent-route comparisons.

    Boolean fields are hard guarantees (a report is only returned when
    they hold); ``connections_equal`` is ``None`` when inconclusive
    searches leave the component comparison undetermined.
    """

    subgroup_vs_luna: bool
    connections_refine: bool
    connections_equal: bool | None
    semigroup_verified: bool
    smooth_iff_trivial_local_class: bool


@dataclass(frozen=True)
class StratificationReport:
    ambient_rank: int
    input_rays: tuple[IntVec, ...]
    torus_rank: int
    cone: Cone
    class_group: FgAbGroup
    divisor_classes: tuple[GroupElement, ...]
    strata: tuple[Stratum, ...]
    closure: tuple[tuple[int, int], ...]
    connections: ConnectionGraph
    cross_checks: CrossChecks
    warnings: tuple[str, ...] = field(default=())
    box_bound: int = 0
    coeff_bound: int = 0


def closure_edges(strata: tuple[Stratum, ...]) -> tuple[tuple[int, int], ...]:
    """Covering pairs ``(lower, upper)`` of the stratum closure order.

    A stratum lies in the closure of another exactly when its subgroup is
    contained in the other's.
    """
    n = len(strata)
    below = [
        [
            i != j and subgroup_leq(strata[i].subgroup, strata[j].subgroup)
            for j in range(n)
        ]
        for i in range(n)
    ]
    edges = []
    for i in range(n):
        for j in range(n):
            if not below[i][j]:
                continue
            if any(below[i][k] and below[k][j] for k in range(n)):
                continue
            edges.append((i, j))
    return tuple(edges)


def _torus_report(
    ambient_rank: int, input_rays: tuple[IntVec, ...], torus_rank: int, options: StratifyOptions
) -> StratificationReport:
    group = FgAbGroup(0, ())
    sub = subgroup_canon(group, ())
    face = Face((), 0)
    stratum = Stratum(
        index=0,
        subgroup=sub,
        structure=group,
        local_class_group=group,
        faces=(face,),
        orbit_dims=(torus_rank,),
        dim=torus_rank,
        smooth=True,
    )
    checks = CrossChecks(True, True, True, True, True)
    graph = ConnectionGraph(Cone(0, ()), (face,), 0, ())
    return StratificationReport(
        ambient_rank=ambient_rank,
        input_rays=input_rays,
        torus_rank=torus_rank,
        cone=Cone(0, ()),
        class_group=group,
        divisor_classes=(),
        strata=(stratum,),
        closure=(),
        connections=graph,
        cross_checks=checks,
        warnings=(),
        box_bound=0,
        coeff_bound=options.coeff_bound,
    )


def stratify(
    ambient_rank: int, rays, options: StratifyOptions = StratifyOptions()
) -> StratificationReport:
    """Full orbit decomposition of the affine toric variety of a cone.

    Accepts any rational polyhedral cone given by extremal ray generators;
    a degenerate cone is split off as a torus factor first.  See the
    module docstring for the three routes and the checks between them.
    """
    split = split_degenerate(ambient_rank, rays, normalize=options.normalize)
    input_rays = tuple(tuple(int(x) for x in ray) for ray in rays)
    if split.cone.nrays == 0:
        return _torus_report(ambient_rank, input_rays, split.torus_rank, options)

    cone = split.cone
    n = cone.ambient_rank
    box_bound = options.box_bound if options.box_bound is not None else default_box_bound(cone)
    toric = build_toric(cone)
    warnings: list[str] = []

    # Route one: group faces by the subgroup attached to their orbit.
    orbit_data = {face: face_orbit_data(toric, face) for face in toric.faces}
    by_subgroup: dict[tuple, list[Face]] = {}
    handle_for: dict[tuple, SubgroupHandle] = {}
    for face in toric.faces:
        data = orbit_data[face]
        by_subgroup.setdefault(data.subgroup.basis, []).append(face)
        handle_for[data.subgroup.basis] = data.subgroup

    # Route two: Luna strata of the characteristic quasitorus action.
    bridge = face_support_bridge(toric)
    luna = luna_strata(cox_weight_system(toric))
    luna_by_basis = {stratum.subgroup.basis: stratum for stratum in luna}
    if set(luna_by_basis) != set(by_subgroup):
        raise ConsistencyError("face subgroups and Luna stabilizers disagree")
    support_of = {face: bridge[face] for face in toric.faces}
    for basis, faces in by_subgroup.items():
        expected = sorted(support_of[face] for face in faces)
        got = sorted(luna_by_basis[basis].supports)
        if expected != got:
            raise ConsistencyError(
                f"Luna stratum of subgroup basis {basis} covers supports {got}, "
                f"faces predict {expected}"
            )

    strata: list[Stratum] = []
    for basis in sorted(by_subgroup, key=lambda b: (-luna_by_basis[b].dim, b)):
        faces = tuple(sorted(by_subgroup[basis], key=lambda f: (f.dim, f.ray_indices)))
        dims = tuple(orbit_data[f].orbit_dim + split.torus_rank for f in faces)
        stratum_dim = max(dims)
        if luna_by_basis[basis].dim + split.torus_rank != stratum_dim:
            raise ConsistencyError(
                f"stratum of subgroup basis {basis}: Luna dimension "
                f"{luna_by_basis[basis].dim} does not match orbit dimensions {dims}"
            )
        local = orbit_data[faces[0]].local_class_group
        smooth_flags = {orbit_data[f].smooth for f in faces}
        trivial_flags = {orbit_data[f].local_class_group.is_trivial() for f in faces}
        if smooth_flags != trivial_flags or len(smooth_flags) != 1:
            raise ConsistencyError(
                f"stratum of subgroup basis {basis}: smoothness and local class "
                f"group triviality disagree across faces {[f.ray_indices for f in faces]}"
            )
        strata.append(
            Stratum(
                index=len(strata),
                subgroup=handle_for[basis],
                structure=luna_by_basis[basis].structure,
                local_class_group=local,
                faces=faces,
                orbit_dims=dims,
                dim=stratum_dim,
                smooth=smooth_flags.pop(),
            )
        )

    # Route three: explicit one-parameter connections.
    graph = connection_graph(cone, box_bound)
    stratum_of_face = {}
    for stratum in strata:
        for face in stratum.faces:
            stratum_of_face[face] = stratum.index
    face_index_stratum = [stratum_of_face[face] for face in graph.faces]
    inconclusive = 0
    for i1, i2, verdict in graph.verdicts:
        if verdict.status == "inconclusive":
            inconclusive += 1
        if verdict.is_yes() and face_index_stratum[i1] != face_index_stratum[i2]:
            raise ConsistencyError(
                f"one-parameter connection joins faces "
                f"{graph.faces[i1].ray_indices} and {graph.faces[i2].ray_indices} "
                f"from different strata"
            )
    component_partition = sorted(graph_components(graph))
    stratum_partition = sorted(
        tuple(sorted(i for i, s in enumerate(face_index_stratum) if s == stratum.index))
        for stratum in strata
    )
    if component_partition == stratum_partition:
        connections_equal: bool | None = True
    elif inconclusive:
        connections_equal = None
        warnings.append(
            f"connection components are finer than the strata; {inconclusive} "
            f"searches were inconclusive at box bound {box_bound} — raise the bound "
            f"to resolve"
        )
    else:
        raise ConsistencyError(
            "all connection searches were conclusive but the components do not "
            "match the strata"
        )

    semigroup_verified = True
    if options.verify_semigroup:
        for face in toric.faces:
            check = verify_semigroup_equals_group(toric, face, options.coeff_bound)
            if not check.verified:
                semigroup_verified = False
                warnings.extend(check.details)

    checks = CrossChecks(
        subgroup_vs_luna=True,
        connections_refine=True,
        connections_equal=connections_equal,
        semigroup_verified=semigroup_verified,
        smooth_iff_trivial_local_class=True,
    )
    return StratificationReport(
        ambient_rank=ambient_rank,
        input_rays=input_rays,
        torus_rank=split.torus_rank,
        cone=cone,
        class_group=toric.class_group,
        divisor_classes=toric.divisor_classes,
        strata=tuple(strata),
        closure=closure_edges(tuple(strata)),
        connections=graph,
        cross_checks=checks,
        warnings=tuple(warnings),
        box_bound=box_bound,
        coeff_bound=options.coeff_bound,
    )
