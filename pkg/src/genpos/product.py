"""Cartesian products: layers, universal lines and explicit witness sets."""

from __future__ import annotations

from dataclasses import dataclass, field

from .distance import DistanceMatrix
from .errors import CapacityError, ContractError, ParameterError
from .families import Complete, CompleteMultipartite, make_family
from .graph import Graph, as_mask, bits_of, cartesian_product, iter_bits, product_of_many
from .position import (
    adjacent_universal_pair,
    are_orthogonal_gp,
    extending_vertex,
    find_collinear_triple,
    geodetic_number,
    has_universal_line,
    lower_gp_number,
)
from .search import Budget
from .terminal import terminal_failure

EXACT_PRODUCT_LIMIT = 40


def coords(mask: int, labels) -> list[tuple[int, ...]]:
    return [tuple(labels[v]) for v in iter_bits(mask)]


@dataclass
class LayerReport:
    terminal: bool
    product_maximal: bool
    anchor: int
    image: list[tuple[int, int]]
    terminal_failure: object = None
    extender: tuple[int, int] | None = None

    @property
    def agree(self) -> bool:
        return self.terminal == self.product_maximal


def layer_embed_check(g: Graph, h: Graph, s, anchor: int = 0) -> LayerReport:
    """Evaluate both sides of: S × {h} maximal in G □ H  <=>  S terminal in G."""
    mask = as_mask(s)
    dm_g = DistanceMatrix(g)
    if extending_vertex(dm_g, mask) is not None:
        raise ContractError("S must be a maximal general position set of G")
    if not 0 <= anchor < h.n:
        raise ParameterError(f"anchor {anchor} is not a vertex of H")
    failure = terminal_failure(dm_g, mask)
    prod, idx = cartesian_product(g, h)
    image = idx.embed_left(mask, anchor)
    ext = extending_vertex(DistanceMatrix(prod), image)
    return LayerReport(
        terminal=failure is None,
        product_maximal=ext is None,
        anchor=anchor,
        image=[idx.decode(v) for v in iter_bits(image)],
        terminal_failure=failure,
        extender=None if ext is None else idx.decode(ext),
    )


@dataclass
class UniversalLineReport:
    adjacent_pair_g: tuple[int, int] | None
    adjacent_pair_h: tuple[int, int] | None
    geodetic_g: int
    geodetic_h: int
    observed_pair: tuple[tuple[int, int], tuple[int, int]] | None

    @property
    def condition_i(self) -> bool:
        return self.adjacent_pair_g is not None or self.adjacent_pair_h is not None

    @property
    def condition_ii(self) -> bool:
        return self.geodetic_g == 2 and self.geodetic_h == 2

    @property
    def predicted(self) -> bool:
        return self.condition_i or self.condition_ii

    @property
    def observed(self) -> bool:
        return self.observed_pair is not None

    @property
    def agree(self) -> bool:
        return self.predicted == self.observed


def universal_line_product_criterion(g: Graph, h: Graph) -> UniversalLineReport:
    """Predicted vs. brute-force universal line in G □ H.

    Predicted: some factor has a maximal general position set made of two
    adjacent vertices, or both factors have geodetic number 2.
    """
    if not (g.is_connected() and h.is_connected()):
        raise ParameterError("both factors must be connected")
    prod, idx = cartesian_product(g, h)
    pair = has_universal_line(prod)
    return UniversalLineReport(
        adjacent_pair_g=adjacent_universal_pair(g),
        adjacent_pair_h=adjacent_universal_pair(h),
        geodetic_g=geodetic_number(g).count,
        geodetic_h=geodetic_number(h).count,
        observed_pair=None if pair is None else (idx.decode(pair[0]), idx.decode(pair[1])),
    )


@dataclass
class ProductBound:
    """gp⁻ of a product: proved bounds, witness sets and any exact value."""

    lower: int
    upper: int
    witnesses: dict[str, list[tuple[int, ...]]] = field(default_factory=dict)
    exact: int | None = None
    exact_witness: list[tuple[int, ...]] | None = None
    method: str = ""
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        ok = all(self.checks.values())
        if self.exact is not None:
            ok = ok and self.lower <= self.exact <= self.upper
        return ok


def _check_maximal(dm: DistanceMatrix, mask: int) -> bool:
    return find_collinear_triple(dm, mask) is None and extending_vertex(dm, mask) is None


def _settle(report: ProductBound, dm: DistanceMatrix, labels, best: int, exact_limit: int,
            refute_limit: int) -> None:
    """Fill ``report.exact`` by full search or by refuting every smaller size."""
    if dm.n <= exact_limit:
        res = lower_gp_number(dm)
        report.exact = res.count
        report.exact_witness = coords(res.witness.bits, labels)
        report.method = "exact search"
    elif best - 1 <= refute_limit:
        res = lower_gp_number(dm, Budget(max_subset_size=best - 1))
        if res.exact:
            report.exact = res.count
            report.exact_witness = coords(res.witness.bits, labels)
            report.method = f"search up to size {best - 1}"
        else:
            report.exact = best
            report.method = f"no maximal set of size <= {best - 1}; witness of size {best}"
    else:
        report.method = "bounds only"


def clique_product_witness(orders, exact_limit: int = EXACT_PRODUCT_LIMIT,
                           refute_limit: int = 2) -> ProductBound:
    """gp⁻ of K_{n1} □ ... □ K_{nk} is min(n_i); witness is a clique layer."""
    orders = list(orders)
    if not orders or any(o < 2 for o in orders):
        raise ParameterError("clique orders must all be >= 2")
    total = 1
    for o in orders:
        total *= o
    if total > 4096:
        raise CapacityError(f"product of order {total} is too large")
    prod, labels = product_of_many([make_family(Complete(o)) for o in orders])
    dm = DistanceMatrix(prod)
    i = orders.index(min(orders))
    layer = bits_of(v for v, c in enumerate(labels) if all(c[j] == 0 for j in range(len(orders)) if j != i))
    value = min(orders)
    report = ProductBound(lower=value, upper=value, witnesses={"clique-layer": coords(layer, labels)})
    report.checks["clique-layer maximal"] = _check_maximal(dm, layer) and layer.bit_count() == value
    if len(orders) == 2:
        _settle(report, dm, labels, value, exact_limit, refute_limit)
    else:
        report.method = "witness maximality only"
    return report


def multipartite_product_witness(parts_g, parts_h, exact_limit: int = EXACT_PRODUCT_LIMIT,
                                 refute_limit: int = 2) -> ProductBound:
    """Bounds and explicit maximal sets for K_{m1..mr} □ K_{n1..ns}.

    Parts are sorted in descending order; X_r and Y_s are the smallest
    parts.  Witnesses: a clique layer (size min(r, s)), the diagonal-plus-
    tail set (size max(m_r, n_s)) and, when both smallest parts have at
    least 8 vertices, the six-pairs-plus-column set (size min(m_r, n_s)).
    """
    pg = sorted(parts_g, reverse=True)
    ph = sorted(parts_h, reverse=True)
    r, s = len(pg), len(ph)
    if r < 2 or s < 2:
        raise ParameterError("both graphs need at least two parts")
    if min(pg + ph) < 1 or pg[0] < 2 or ph[0] < 2:
        raise ParameterError("largest part of each graph must have at least 2 vertices")
    g = make_family(CompleteMultipartite(pg))
    h = make_family(CompleteMultipartite(ph))
    prod, idx = cartesian_product(g, h)
    labels = [idx.decode(v) for v in range(prod.n)]
    dm = DistanceMatrix(prod)

    def part_members(parts, k):
        start = sum(parts[:k])
        return list(range(start, start + parts[k]))

    m_r, n_s = pg[-1], ph[-1]
    report = ProductBound(lower=min(r, s, m_r, n_s), upper=min(r, s, max(m_r, n_s)))

    def add(name, mask, size):
        report.witnesses[name] = coords(mask, labels)
        report.checks[f"{name} maximal"] = _check_maximal(dm, mask) and mask.bit_count() == size

    if r <= s:
        clique = [part_members(pg, k)[0] for k in range(r)]
        add("clique-layer", idx.embed_left(clique, 0), r)
    else:
        clique = [part_members(ph, k)[0] for k in range(s)]
        add("clique-layer", idx.embed_right(0, clique), s)

    xs, ys = part_members(pg, r - 1), part_members(ph, s - 1)
    if n_s >= m_r:
        pairs = [(xs[i], ys[i]) for i in range(m_r)] + [(xs[-1], ys[j]) for j in range(m_r, n_s)]
    else:
        pairs = [(xs[i], ys[i]) for i in range(n_s)] + [(xs[j], ys[-1]) for j in range(n_s, m_r)]
    add("diagonal", bits_of(idx.encode(a, b) for a, b in pairs), max(m_r, n_s))

    if min(m_r, n_s) >= 8:
        if m_r <= n_s:
            x, y1, y2 = xs, part_members(ph, 0), part_members(ph, 1)
            enc = idx.encode
        else:
            x, y1, y2 = ys, part_members(pg, 0), part_members(pg, 1)
            enc = lambda a, b: idx.encode(b, a)  # noqa: E731
        pts = [(x[0], y1[0]), (x[1], y1[0]), (x[2], y1[1]), (x[3], y1[1]), (x[4], y2[0]), (x[5], y2[0])]
        pts += [(xv, y2[1]) for xv in x[6:]]
        add("six-pairs", bits_of(enc(a, b) for a, b in pts), len(x))

    best = min(len(w) for name, w in report.witnesses.items() if report.checks[f"{name} maximal"])
    report.upper = min(report.upper, best)
    _settle(report, dm, labels, best, exact_limit, refute_limit)
    return report


@dataclass
class OrthogonalReport:
    product_violation: object
    factor_violation: object

    @property
    def product_gp(self) -> bool:
        return self.product_violation is None

    @property
    def factor_orthogonal(self) -> bool:
        return self.factor_violation is None

    @property
    def agree(self) -> bool:
        return self.product_gp == self.factor_orthogonal


def orthogonal_layers(g: Graph, r: int, sets) -> OrthogonalReport:
    """Compare general position of ``⋃ S_i × {i}`` in G □ K_r with
    pairwise orthogonality of the general position sets ``S_i`` in G."""
    if r < 2:
        raise ParameterError("need r >= 2")
    masks = [as_mask(s) for s in sets]
    if len(masks) > r:
        raise ParameterError(f"{len(masks)} sets do not fit in {r} layers")
    if any(m >> g.n for m in masks):
        raise ParameterError("sets must lie inside V(G)")
    prod, idx = cartesian_product(g, make_family(Complete(r)))
    union = 0
    for i, m in enumerate(masks):
        union |= idx.embed_left(m, i)
    witness = find_collinear_triple(DistanceMatrix(prod), union)
    product_violation = None
    if witness is not None:
        product_violation = tuple(idx.decode(v) for v in (witness.x, witness.y, witness.z))

    dm = DistanceMatrix(g)
    factor_violation = None
    for i, m in enumerate(masks):
        w = find_collinear_triple(dm, m)
        if w is not None:
            factor_violation = ("not-gp", i, w)
            break
    if factor_violation is None:
        for i in range(len(masks)):
            for j in range(i + 1, len(masks)):
                v = are_orthogonal_gp(dm, masks[i], masks[j])
                if v is not None:
                    factor_violation = ("not-orthogonal", (i, j), v)
                    break
            if factor_violation is not None:
                break
    return OrthogonalReport(product_violation, factor_violation)
