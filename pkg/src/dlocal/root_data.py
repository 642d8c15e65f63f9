"""Root data for the even orthogonal Lie algebras, fork-first node labeling.

The Dynkin diagram of D_r is labeled with the fork first: node 1 is the
upper prong, node 2 the lower prong, node 3 the elbow where the prongs
meet, and nodes 4..r continue leftward along the chain.  This is not the
Bourbaki order (which starts at the far end of the chain); use
``bourbaki_permutation`` to translate when comparing against standard
tables.

Roots are stored as integer coefficient vectors over the simple roots in
this labeling, so the simple roots are the r unit vectors and the height
d(alpha) of a root is the sum of its coefficients.  For r = 2 the diagram
degenerates to two disconnected nodes (A1 x A1).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RootSystemD:
    """Positive roots of D_r, each a coefficient vector over the simple roots.

    ``positive_roots`` is sorted by (height, lexicographic), which fixes the
    order of every downstream product and listing.
    """

    rank: int
    positive_roots: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]

    def height(self, root: tuple[int, ...]) -> int:
        return sum(root)


@dataclass(frozen=True)
class HighestWeight:
    """A strictly dominant weight, stored through its coefficients m_k >= 1.

    The twist vector l with l_i = m_i - 1 determines and is determined by m.
    """

    m: tuple[int, ...]

    def __post_init__(self):
        if len(self.m) == 0:
            raise ValueError("empty highest weight")
        if any(int(mk) != mk or mk < 1 for mk in self.m):
            raise ValueError(f"all m_k must be integers >= 1, got {self.m}")
        object.__setattr__(self, "m", tuple(int(mk) for mk in self.m))

    @classmethod
    def from_twist(cls, twist) -> "HighestWeight":
        twist = tuple(int(l) for l in twist)
        if any(l < 0 for l in twist):
            raise ValueError(f"twist entries must be >= 0, got {twist}")
        return cls(tuple(l + 1 for l in twist))

    @property
    def rank(self) -> int:
        return len(self.m)

    @property
    def twist(self) -> tuple[int, ...]:
        return tuple(mk - 1 for mk in self.m)


def _adjacency(r: int) -> set[frozenset[int]]:
    # Nodes 1 and 2 attach only to the elbow node 3; the chain is 3-4-...-r.
    edges: set[frozenset[int]] = set()
    if r >= 3:
        edges.add(frozenset((1, 3)))
        edges.add(frozenset((2, 3)))
        for j in range(3, r):
            edges.add(frozenset((j, j + 1)))
    return edges


def build_root_system(r: int) -> RootSystemD:
    """Construct the positive roots of D_r by reflection closure.

    Starting from the simple roots, apply all simple reflections until the
    orbit is closed, then keep the vectors with nonnegative coefficients.
    """
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    edges = _adjacency(r)
    cartan = tuple(
        tuple(
            2 if i == j else (-1 if frozenset((i + 1, j + 1)) in edges else 0)
            for j in range(r)
        )
        for i in range(r)
    )

    simples = [tuple(1 if k == i else 0 for k in range(r)) for i in range(r)]
    roots: set[tuple[int, ...]] = set(simples)
    frontier = list(simples)
    while frontier:
        root = frontier.pop()
        for i in range(r):
            pairing = sum(cartan[i][j] * root[j] for j in range(r))
            new = list(root)
            new[i] -= pairing
            refl = tuple(new)
            if refl not in roots:
                roots.add(refl)
                frontier.append(refl)

    positive = sorted(
        (root for root in roots if all(k >= 0 for k in root)),
        key=lambda root: (sum(root), root),
    )
    assert len(positive) == r * (r - 1), "positive root count must be r(r-1)"
    return RootSystemD(rank=r, positive_roots=tuple(positive), cartan=cartan)


def bourbaki_permutation(r: int) -> tuple[int, ...]:
    """Map each fork-first node label to its Bourbaki label.

    Entry i-1 is the Bourbaki label of node i.  Bourbaki puts the chain
    first (1 at the far end) and the prongs last (r-1, r); our node 1 maps
    to r-1, node 2 to r, and node j >= 3 to r+1-j.  For r = 2 both
    labelings are the two-node pair, returned unchanged.
    """
    if r < 2:
        raise ValueError(f"rank must be >= 2, got {r}")
    if r == 2:
        return (1, 2)
    return (r - 1, r) + tuple(r + 1 - j for j in range(3, r + 1))


def weyl_dimension(rs: RootSystemD, hw: HighestWeight) -> int:
    """Dimension of the irreducible module with highest weight hw.

    Product over positive roots of <theta+rho, alpha_check>/<rho, alpha_check>,
    evaluated with exact integers; the division is asserted exact.
    """
    if hw.rank != rs.rank:
        raise ValueError(f"rank mismatch: root system {rs.rank}, weight {hw.rank}")
    num = 1
    den = 1
    for root in rs.positive_roots:
        num *= sum((mk + 1) * k for mk, k in zip(hw.m, root))
        den *= sum(root)
    assert num % den == 0, "Weyl dimension must be an integer"
    return num // den


def tokuyama_product(rs: RootSystemD):
    """Expand prod over positive roots of (1 - p^(d(alpha)-1) x^alpha).

    Returns the untwisted n = 1 generating function as a LocalPart whose
    coefficients are plain Laurent polynomials in p.
    """
    from .coeff_ring import RingElem
    from .local_part import LocalPart

    r = rs.rank
    coeffs: dict[tuple[int, ...], RingElem] = {(0,) * r: RingElem.one(1)}
    for root in rs.positive_roots:
        factor = -RingElem.p_power(sum(root) - 1, 1)
        updated = dict(coeffs)
        for lam, value in coeffs.items():
            shifted = tuple(a + b for a, b in zip(lam, root))
            add = value * factor
            if shifted in updated:
                add = updated[shifted] + add
            if add.is_zero:
                updated.pop(shifted, None)
            else:
                updated[shifted] = add
        coeffs = updated
    return LocalPart(rank=r, n=1, twist=(0,) * r, coefficients=coeffs)
