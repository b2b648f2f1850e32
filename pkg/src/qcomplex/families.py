"""Generators for the named complex families and random test complexes.

Label conventions are fixed so that generated complexes are deterministic:
the apex of a tented complex is always vertex 0, and the shared edge of
the tent-plus-common-edge family is always {1, 2}.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from . import homology
from .complex_core import Face, SimplicialComplex, face, from_facets
from .errors import (
    BadParams,
    BettiMismatch,
    BudgetExhausted,
    DuplicateFace,
    FaceContainsApex,
)

FAMILIES = ("simplex_skeleton", "tented", "tent_plus_common_edge",
            "tent_plus_faces", "delta_sphere", "rhombic", "random_pure2")

#: Rejection sampling stays at or below this vertex count.
RANDOM_MAX_N = 12


def simplex_skeleton(n: int, r: int) -> SimplicialComplex:
    """Pure r-complex on n vertices with every (r+1)-subset as a facet."""
    if r < 0 or n < r + 1:
        raise BadParams(f"need 0 <= r <= n-1, got n={n}, r={r}")
    return from_facets(n, list(combinations(range(n), r + 1)), require_pure=True)


def tented(n: int, r: int = 2) -> SimplicialComplex:
    """All (r+1)-subsets of [n] through the apex vertex 0."""
    if r < 1 or n < r + 1:
        raise BadParams(f"need r >= 1 and n >= r+1, got n={n}, r={r}")
    facets = [(0,) + rest for rest in combinations(range(1, n), r)]
    return from_facets(n, facets, require_pure=True)


def delta_sphere(r: int) -> SimplicialComplex:
    """Boundary of the (r+1)-simplex: the minimal r-sphere."""
    if r < 1:
        raise BadParams(f"need r >= 1, got {r}")
    return simplex_skeleton(r + 2, r)


def rhombic(r: int) -> SimplicialComplex:
    """Two apexes over the r-subsets of an (r+1)-set: the rhombic r-sphere.

    Vertices 0..r span the base; r+1 and r+2 are the apexes; the 2(r+1)
    facets are each apex joined with an r-subset of the base.
    """
    if r < 1:
        raise BadParams(f"need r >= 1, got {r}")
    facets = [
        tuple(sorted(base + (apex,)))
        for apex in (r + 1, r + 2)
        for base in combinations(range(r + 1), r)
    ]
    return from_facets(r + 3, facets, require_pure=True)


def tent_plus_common_edge(n: int, t: int) -> SimplicialComplex:
    """The 2-dimensional tent plus t facets through the common edge {1, 2}."""
    if not 1 <= t <= n - 3:
        raise BadParams(f"need 1 <= t <= n-3, got n={n}, t={t}")
    facets = [(0,) + rest for rest in combinations(range(1, n), 2)]
    facets += [(1, 2, x) for x in range(3, 3 + t)]
    return from_facets(n, facets, require_pure=True)


def tent_plus_faces(n: int, added) -> SimplicialComplex:
    """The 2-dimensional tent plus an explicit list of apex-avoiding faces.

    The top Betti number of the result must equal the number of added
    faces; that is recomputed and enforced, so a mismatch means a bug.
    """
    if n < 4:
        raise BadParams(f"need n >= 4, got {n}")
    added_faces = [face(f) for f in added]
    seen: set[Face] = set()
    for f in added_faces:
        if len(f) != 3:
            raise BadParams(f"added face {f} is not a 2-face")
        if 0 in f:
            raise FaceContainsApex(f"added face {f} contains the apex 0")
        if f in seen:
            raise DuplicateFace(f"added face {f} repeated")
        seen.add(f)
    facets = [(0,) + rest for rest in combinations(range(1, n), 2)]
    K = from_facets(n, facets + added_faces, require_pure=True)
    b2 = homology.betti_profile(K).betti[2]
    if b2 != len(added_faces):
        raise BettiMismatch(
            f"expected top Betti {len(added_faces)}, computed {b2}")
    return K


def random_pure2(n: int, target_t: int | None = None, seed: int = 0,
                 max_attempts: int = 500) -> SimplicialComplex:
    """Uniformly random nonempty triangle subset on n labeled vertices.

    With ``target_t`` set, rejection-samples until the top Betti number
    matches or the attempt budget runs out.
    """
    if n < 3 or n > RANDOM_MAX_N:
        raise BadParams(f"need 3 <= n <= {RANDOM_MAX_N}, got {n}")
    rng = np.random.default_rng(seed)
    triangles = list(combinations(range(n), 3))
    for _ in range(max_attempts):
        mask = rng.random(len(triangles)) < 0.5
        if not mask.any():
            continue
        K = from_facets(n, [t for t, m in zip(triangles, mask) if m],
                        require_pure=True)
        if target_t is None:
            return K
        if homology.betti_profile(K).betti[2] == target_t:
            return K
    raise BudgetExhausted(
        f"no sample with top Betti {target_t} in {max_attempts} attempts")


def make(family: str, n: int | None = None, r: int | None = None,
         t: int | None = None, seed: int = 0,
         added=None) -> SimplicialComplex:
    """Dispatch a family name plus parameters to its generator (CLI entry)."""
    if family not in FAMILIES:
        raise BadParams(f"unknown family {family!r}; choose from {FAMILIES}")
    if family == "simplex_skeleton":
        _need(n=n, r=r)
        return simplex_skeleton(n, r)
    if family == "tented":
        _need(n=n)
        return tented(n, 2 if r is None else r)
    if family == "tent_plus_common_edge":
        _need(n=n, t=t)
        return tent_plus_common_edge(n, t)
    if family == "tent_plus_faces":
        _need(n=n)
        if not added:
            raise BadParams("tent_plus_faces needs an explicit added-face list")
        return tent_plus_faces(n, added)
    if family == "delta_sphere":
        _need(r=r)
        return delta_sphere(r)
    if family == "rhombic":
        _need(r=r)
        return rhombic(r)
    _need(n=n)
    return random_pure2(n, target_t=t, seed=seed)


def _need(**kwargs) -> None:
    missing = [k for k, v in kwargs.items() if v is None]
    if missing:
        raise BadParams(f"missing required parameter(s): {', '.join(missing)}")
