"""Witness trees: the constructive content of the strong Nullstellensatz.

Given a noncommuting zero p of a left ideal, the point splits into blocks of
coordinates sharing a slice, scanned right to left.  Conjugating the
commuting suffix of each level by a sign-indexed pair of conjugators produces
a binary tree of points: every node lies with both its children on an
embedded sphere, and the leaves are pairwise-commuting points.  If a
polynomial f vanishes on the commuting zero set, it vanishes at the leaves,
and the two-point principle propagates the vanishing sphere by sphere back to
the root, proving f(p) = 0.  The whole object serializes into a certificate
that an independent checker can re-verify by arithmetic alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ExactnessError, InvariantViolation
from .ideals import LeftIdeal, Verdict, in_V, in_Vc
from .poly import CentralPoly
from .quaternion import (
    PureDirection,
    Quaternion,
    commutes,
    conjugate_point,
    conjugator_pair,
    pairwise_commuting,
)
from .spheres import EmbeddedSphere, affine_coeffs, contains, sphere_of


def _in_slice(q: Quaternion, d: PureDirection) -> bool:
    """q lies in the slice subfield of direction d (sign-free)."""
    if q.is_real():
        return True
    return PureDirection.of(q).cross_is_zero(d)


def _points_equal(p, q) -> bool:
    return len(p) == len(q) and all(a == b for a, b in zip(p, q))


@dataclass(frozen=True)
class BlockDecomposition:
    """Cuts n = n_0 > n_1 > ... > n_k = 0 with blocks w_i = p[n_i+1 .. n_i-1].

    blocks[i-1] is w_i and directions[i-1] its slice direction; w_1 is the
    maximal commuting suffix and consecutive directions are never (anti)
    parallel.  A pairwise-commuting point has the trivial k = 1 decomposition
    (direction None when the point is entirely real).
    """

    cuts: tuple
    blocks: tuple
    directions: tuple

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def arity(self) -> int:
        return self.cuts[0]


def decompose(point) -> BlockDecomposition:
    point = tuple(point)
    n = len(point)
    if n == 0:
        raise ValueError("empty point")
    # maximal commuting suffix: grow from the right while pairwise commuting
    start = n  # 1-based position where the suffix begins
    while start > 1 and all(
        commutes(point[start - 2], point[t]) for t in range(start - 1, n)
    ):
        start -= 1
    n1 = start - 1
    if n1 == 0:
        ref = next((q for q in point if not q.is_real()), None)
        direction = PureDirection.of(ref) if ref is not None else None
        return BlockDecomposition((n, 0), (point,), (direction,))
    cuts = [n, n1]
    blocks = [point[n1:]]
    first_nonreal = next(q for q in blocks[0] if not q.is_real())
    directions = [PureDirection.of(first_nonreal)]
    cur = n1
    while cur > 0:
        pivot = point[cur - 1]
        if pivot.is_real():  # the suffix scan absorbs reals, so never real here
            raise InvariantViolation("block boundary at a real coordinate")
        d = PureDirection.of(pivot)
        pos = cur - 1
        while pos >= 1 and _in_slice(point[pos - 1], d):
            pos -= 1
        cuts.append(pos)
        blocks.append(point[pos:cur])
        directions.append(d)
        cur = pos
    return BlockDecomposition(tuple(cuts), tuple(blocks), tuple(directions))


@dataclass(frozen=True)
class WitnessNode:
    level: int
    signs: tuple  # +1/-1 per branching taken, length level-1
    point: tuple
    sphere: EmbeddedSphere = None  # None on leaves
    children: tuple = None  # (plus child, minus child); None on leaves

    @property
    def is_leaf(self) -> bool:
        return self.children is None


@dataclass(frozen=True)
class WitnessTree:
    root: WitnessNode
    decomposition: BlockDecomposition
    conjugators: tuple  # (alpha_i^+, alpha_i^-) for i = 1..k-1

    def nodes(self):
        """Breadth-first, plus-branch first: deterministic certificate order."""
        out = []
        layer = [self.root]
        while layer:
            out.extend(layer)
            layer = [c for nd in layer if nd.children for c in nd.children]
        return out

    def leaves(self):
        return [nd for nd in self.nodes() if nd.is_leaf]

    def internal_nodes(self):
        return [nd for nd in self.nodes() if not nd.is_leaf]


def build_tree(point) -> WitnessTree:
    """Materialize the witness tree of a noncommuting point.

    All structural invariants are checked during construction: conjugators
    map directions correctly (checked inside conjugator_pair), every node and
    both its children lie on the node's sphere, children are distinct, node
    suffixes stay inside their level's slice, and leaves commute pairwise.
    Exact inputs raise ExactnessError subclasses when an irrational
    conjugator or sphere radius appears; callers retry in float mode.
    """
    point = tuple(point)
    dec = decompose(point)
    if dec.k == 1:
        raise ValueError("point is pairwise commuting; no witness tree is needed")
    conjugators = tuple(
        conjugator_pair(dec.directions[i], dec.directions[i + 1])
        for i in range(dec.k - 1)
    )

    def make(level: int, signs: tuple, pt: tuple) -> WitnessNode:
        if level == dec.k:
            if not pairwise_commuting(pt):
                raise InvariantViolation("leaf point does not commute pairwise")
            return WitnessNode(level, signs, pt)
        ncut = dec.cuts[level]
        prefix, suffix = pt[:ncut], pt[ncut:]
        if not all(_in_slice(q, dec.directions[level - 1]) for q in suffix):
            raise InvariantViolation("node suffix escapes its level slice")
        sphere = sphere_of(prefix, suffix)
        if not contains(sphere, pt):
            raise InvariantViolation("node point left its own sphere")
        alpha_plus, alpha_minus = conjugators[level - 1]
        plus_pt = prefix + conjugate_point(alpha_plus, suffix)
        minus_pt = prefix + conjugate_point(alpha_minus, suffix)
        if _points_equal(plus_pt, minus_pt):
            raise InvariantViolation("children coincide")
        for child in (plus_pt, minus_pt):
            if not contains(sphere, child):
                raise InvariantViolation("child point left the parent sphere")
        children = (
            make(level + 1, signs + (1,), plus_pt),
            make(level + 1, signs + (-1,), minus_pt),
        )
        return WitnessNode(level, signs, pt, sphere, children)

    root = make(1, (), point)
    tree = WitnessTree(root, dec, conjugators)
    if len(tree.leaves()) != 2 ** (dec.k - 1):
        raise InvariantViolation("leaf count is not 2^(k-1)")
    return tree


@dataclass(frozen=True)
class NodeMembership:
    level: int
    signs: tuple
    verdict: Verdict
    leaf_in_vc: bool = None


@dataclass(frozen=True)
class TreeMembership:
    root_verdict: Verdict
    entries: tuple  # NodeMembership in tree order; empty unless root is Yes

    @property
    def all_yes(self) -> bool:
        return self.root_verdict is Verdict.YES and all(
            e.verdict is Verdict.YES and e.leaf_in_vc in (None, True)
            for e in self.entries
        )


def verify_tree_in_V(
    tree: WitnessTree, I: LeftIdeal, max_depth: int = 6, max_points: int = 4096
) -> TreeMembership:
    """Zero-set membership verdicts for every tree node; leaves also get an
    in_Vc check.  A non-Yes root short-circuits (nothing to traverse)."""
    root_verdict = in_V(I, tree.root.point, max_depth, max_points)
    if root_verdict is not Verdict.YES:
        return TreeMembership(root_verdict, ())
    entries = []
    for nd in tree.nodes():
        verdict = in_V(I, nd.point, max_depth, max_points)
        leaf_vc = in_Vc(I, nd.point) if nd.is_leaf else None
        entries.append(NodeMembership(nd.level, nd.signs, verdict, leaf_vc))
    return TreeMembership(root_verdict, tuple(entries))


@dataclass(frozen=True)
class NodeRecord:
    level: int
    signs: tuple
    point: tuple
    direct_eval: Quaternion
    sphere: EmbeddedSphere = None
    child_points: tuple = None
    child_evals: tuple = None
    affine: tuple = None  # (q1, q2)
    slice_ok: bool = None


@dataclass(frozen=True)
class Certificate:
    mode: str  # "exact" | "numeric"
    decomposition: BlockDecomposition
    conjugators: tuple
    nodes: tuple  # NodeRecord in tree order
    verdict: str  # "Proved" | "LeafFailure" | "PropagationFailure"
    detail: str = ""

    @property
    def proved(self) -> bool:
        return self.verdict == "Proved"


def propagate(f: CentralPoly, tree: WitnessTree) -> Certificate:
    """Bottom-up vanishing propagation of f along the tree.

    Evaluates f at every leaf; any nonzero leaf value refutes the hypothesis
    that f vanishes on the commuting zero set (LeafFailure).  Otherwise each
    internal node's sphere must carry the zero affine function, which proves
    f = 0 at the node point; the direct evaluation is recorded as a
    cross-check.
    """
    mode = "exact" if f.is_exact() and all(
        q.is_exact() for q in tree.root.point
    ) else "numeric"
    evals = {}
    verdict = "Proved"
    detail = ""
    for leaf in tree.leaves():
        value = f.evaluate(leaf.point)
        evals[leaf.signs] = value
        if verdict == "Proved" and not value.is_zero():
            verdict = "LeafFailure"
            detail = f"f is nonzero at leaf {_sign_word(leaf.signs)}"
    records = []
    for nd in tree.nodes():
        if nd.is_leaf:
            records.append(
                NodeRecord(nd.level, nd.signs, nd.point, evals[nd.signs])
            )
            continue
        plus, minus = nd.children
        if _points_equal(plus.point, minus.point):
            raise InvariantViolation("children coincide")
        if not (contains(nd.sphere, plus.point) and contains(nd.sphere, minus.point)):
            raise InvariantViolation("children left the node sphere")
        q1, q2 = affine_coeffs(f, nd.sphere)
        direct = f.evaluate(nd.point)
        child_evals = (f.evaluate(plus.point), f.evaluate(minus.point))
        if verdict == "Proved" and not (
            q1.is_zero() and q2.is_zero() and direct.is_zero()
        ):
            verdict = "PropagationFailure"
            detail = f"nonzero affine fit or node value at {_sign_word(nd.signs)}"
        records.append(
            NodeRecord(
                nd.level,
                nd.signs,
                nd.point,
                direct,
                nd.sphere,
                (plus.point, minus.point),
                child_evals,
                (q1, q2),
                True,
            )
        )
    return Certificate(
        mode, tree.decomposition, tree.conjugators, tuple(records), verdict, detail
    )


def _sign_word(signs) -> str:
    return "".join("+" if s > 0 else "-" for s in signs) or "(root)"


@dataclass(frozen=True)
class NullstellensatzReport:
    """Bundle of every pipeline stage for one (I, p, f) instance."""

    mode: str
    commuting: bool
    root_verdict: Verdict
    membership: TreeMembership = None
    certificate: Certificate = None
    direct_eval: Quaternion = None
    root_in_vc: bool = None
    verdict: str = ""  # Proved / LeafFailure / PropagationFailure / RootNotInV / Unknown
    detail: str = ""

    @property
    def agrees(self) -> bool:
        """A Proved certificate must be matched by a vanishing direct value."""
        if self.verdict != "Proved":
            return True
        return self.direct_eval is not None and self.direct_eval.is_zero()


def nullstellensatz_check(
    I: LeftIdeal, point, f: CentralPoly, max_depth: int = 6, max_points: int = 4096
) -> NullstellensatzReport:
    """Full pipeline: membership, witness tree, per-node verdicts, vanishing
    propagation, and the direct-evaluation cross-check.

    Exact inputs run exactly when possible; if an irrational conjugator or
    sphere radius blocks the exact route, everything restarts in float mode
    and the certificate is marked numeric.
    """
    point = tuple(point)
    if len(point) != I.arity or f.n != I.arity:
        raise ArityMismatch("ideal, point and polynomial must share one arity")
    exact_inputs = (
        I.is_exact() and f.is_exact() and all(q.is_exact() for q in point)
    )
    if exact_inputs:
        try:
            return _pipeline(I, point, f, "exact", max_depth, max_points)
        except ExactnessError:
            pass
    return _pipeline(
        I.to_float(),
        tuple(q.to_float() for q in point),
        f.to_float(),
        "numeric",
        max_depth,
        max_points,
    )


def _pipeline(I, point, f, mode, max_depth, max_points) -> NullstellensatzReport:
    if pairwise_commuting(point):
        vc = in_Vc(I, point)
        direct = f.evaluate(point)
        if not vc:
            verdict, detail = "RootNotInV", "commuting point is not a zero of I"
        elif direct.is_zero():
            verdict, detail = "Proved", "commuting point: direct evaluation"
        else:
            verdict, detail = "LeafFailure", "f is nonzero at the commuting point"
        return NullstellensatzReport(
            mode,
            True,
            Verdict.YES if vc else Verdict.NO,
            direct_eval=direct,
            root_in_vc=vc,
            verdict=verdict,
            detail=detail,
        )
    root_verdict = in_V(I, point, max_depth, max_points)
    if root_verdict is not Verdict.YES:
        verdict = "RootNotInV" if root_verdict is Verdict.NO else "Unknown"
        return NullstellensatzReport(
            mode,
            False,
            root_verdict,
            direct_eval=f.evaluate(point),
            verdict=verdict,
            detail="root membership not established",
        )
    tree = build_tree(point)
    membership = verify_tree_in_V(tree, I, max_depth, max_points)
    certificate = propagate(f, tree)
    direct = f.evaluate(point)
    return NullstellensatzReport(
        mode,
        False,
        root_verdict,
        membership=membership,
        certificate=certificate,
        direct_eval=direct,
        verdict=certificate.verdict,
        detail=certificate.detail,
    )
