"""Assemble gadgets into complete art galleries.

The gallery is a tall rectangle.  Clause slits sit on the right wall near
the top; their visibility strips run down-left across the variable columns.
Every literal of every clause gets one horizontal guard segment spanning
its variable's column, placed at the exact height where the designated
endpoint (left for x=0, right for x=1) lands on the strip boundary, or
where a band ruler crosses the strip.  Variable gadgets pin one guard to
each segment; copying gadgets chain the segments of each variable so all
its guards share an x-coordinate.  Every clearance the construction needs
is computed and audited, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .complexes import (
    CubicalComplex,
    complex_to_dnf,
    face_dim,
    projective_plane_complex,
    sphere_complex,
    torus_complex,
)
from .formulas import (
    Band,
    CnfFormula,
    VarEq,
    cnf_of_dnf_pruned,
    eval_formula,
)
from .gadgets import (
    ClauseGadget,
    CopyGadget,
    GadgetError,
    Niche,
    VariableGadget,
    assemble_room,
    make_clause_gadget,
    make_copy_gadget,
    make_variable_gadget,
    make_wedge_segments,
)
from .geom import (
    GeometryError,
    Point,
    Segment,
    SimplePolygon,
    intersect_lines,
    rat,
)


class CompileError(ValueError):
    pass


SAT_SCREEN_LIMIT = 250_000


@dataclass(frozen=True)
class GuardSegmentRecord:
    """One guard segment: which clause literal it realizes and where."""
    index: int
    clause: int
    literal_pos: int
    var: int
    designation: str            # 'left' | 'right' | 'band'
    band: int | None
    segment: Segment
    endpoint: Point | None      # designated endpoint for left/right


@dataclass(frozen=True)
class GuardConfig:
    guards: tuple[Point, ...]

    def __len__(self):
        return len(self.guards)

    def as_set(self) -> frozenset:
        return frozenset(self.guards)


@dataclass(frozen=True)
class CopyPair:
    var: int
    upper: int   # segment indexes
    lower: int
    gadget: CopyGadget


@dataclass(frozen=True)
class Gallery:
    polygon: SimplePolygon
    formula: CnfFormula
    columns: dict
    segments: tuple[GuardSegmentRecord, ...]
    clause_gadgets: tuple[ClauseGadget, ...]
    variable_gadgets: tuple[VariableGadget, ...]
    copy_pairs: tuple[CopyPair, ...]
    epsilon: Fraction
    metadata: dict

    @property
    def k(self) -> int:
        return len(self.segments)

    def audit(self):
        _audit(self)

    def segment_width(self, var: int) -> Fraction:
        lo, hi = self.columns[var]
        return hi - lo

    def separation_sq(self) -> Fraction:
        """Squared half-distance between the two closest distinct segments."""
        best = None
        segs = [r.segment for r in self.segments]
        for i in range(len(segs)):
            for j in range(i + 1, len(segs)):
                d = _segment_dist_sq(segs[i], segs[j])
                if best is None or d < best:
                    best = d
        return best / 4 if best is not None else Fraction(0)


def _segment_dist_sq(s1: Segment, s2: Segment) -> Fraction:
    """Squared distance between two horizontal segments."""
    dy = s1.a.y - s2.a.y
    lo1, hi1 = s1.a.x, s1.b.x
    lo2, hi2 = s2.a.x, s2.b.x
    if hi1 < lo2:
        dx = lo2 - hi1
    elif hi2 < lo1:
        dx = lo1 - hi2
    else:
        dx = Fraction(0)
    return dx * dx + dy * dy


def vertex_count(g: Gallery) -> int:
    return len(g.polygon.vertices)


def embed(g: Gallery, x) -> GuardConfig:
    """One guard per segment, at affine parameter x_var along it."""
    xs = [rat(v) for v in x]
    if len(xs) != g.formula.n:
        raise CompileError(
            f"point has dimension {len(xs)}, gallery formula has {g.formula.n}")
    if any(v < 0 or v > 1 for v in xs):
        raise CompileError("coordinates must lie in [0, 1]")
    guards = tuple(rec.segment.point_at(xs[rec.var]) for rec in g.segments)
    return GuardConfig(guards)


# --- layout -------------------------------------------------------------


def compile_gallery(f: CnfFormula, epsilon=Fraction(1, 4)) -> Gallery:
    """Compile a plain CNF formula (no band literals) into a gallery."""
    if f.band_constants:
        raise CompileError("compile_gallery takes band-free formulas; "
                           "use compile_surface for the x0 extension")
    return _assemble(f, rat(epsilon))


def _used_vars(f: CnfFormula) -> list[int]:
    used = set()
    for cl in f.clauses:
        for lit in cl:
            used.add(0 if isinstance(lit, Band) else lit.var)
    return sorted(used)


def _sat_screen(f: CnfFormula) -> tuple[bool | None, str]:
    axes = []
    for i in range(f.n):
        if i == 0 and f.band_constants:
            ks = list(f.band_constants)
            axes.append(sorted(set(ks + [(a + b) / 2 for a, b in zip(ks, ks[1:])])))
        else:
            axes.append([Fraction(0), Fraction(1, 2), Fraction(1)])
    total = 1
    for ax in axes:
        total *= len(ax)
    if total > SAT_SCREEN_LIMIT:
        return None, f"satisfiability screen skipped: grid of {total} points"
    for xs in product(*axes):
        if eval_formula(f, xs):
            return True, "satisfiable on screen grid"
    return False, "unsatisfiable on screen grid"


def _assemble(f: CnfFormula, epsilon: Fraction) -> Gallery:
    if epsilon <= 0:
        raise CompileError("epsilon must be positive")
    if not f.clauses:
        raise CompileError("empty formula")
    for cl in f.clauses:
        if len(set(cl)) != len(cl):
            raise CompileError("duplicate literal inside a clause")

    metadata: dict = {}
    sat, note = _sat_screen(f)
    metadata["satisfiability"] = note
    if sat is False:
        raise CompileError("formula is unsatisfiable on the cube")

    has_bands = any(isinstance(l, Band) for cl in f.clauses for l in cl)
    n_bands = len(f.band_constants) - 1 if f.band_constants else 0
    m = len(f.clauses)
    used = _used_vars(f)
    if has_bands and 0 not in used:
        used = [0] + used
    ordinary = [v for v in used if not (has_bands and v == 0)]

    # Column frame: ordinary variables left to right, the band variable
    # (x0) rightmost so its ruler length stays short.  Strips descending
    # from vertically stacked clause mouths shift horizontally by
    # d_cl / sigma per clause; that shift must exceed the column width so
    # a strip meets foreign rows outside their segments, and the column
    # pitch must exceed the per-variable band of row heights.
    w_col = Fraction(1)
    gap_col = max(Fraction(4), Fraction(2 * m + 2))
    x = Fraction(4)
    col: dict[int, tuple[Fraction, Fraction]] = {}
    for v in ordinary:
        col[v] = (x, x + w_col)
        x += w_col + gap_col
    x0_left = None
    if has_bands:
        x0_left = x
        x += 2 + gap_col
    gw = x + 2

    sigma = Fraction(2)
    tau = Fraction(1)
    d_cl = 2 * (w_col + 1)
    mouth_w = epsilon * sigma / (8 * (gw + 2))
    mouth_base = sigma * (gw + tau) + 2
    mouth_y = {j: mouth_base + (m - 1 - j) * d_cl for j in range(m)}
    top = mouth_y[0] + sigma * tau + 2

    gadgets = tuple(
        make_clause_gadget(Point(gw, mouth_y[j]), j, sigma, mouth_w)
        for j in range(m))

    # band constants and ruler rows from the shared wedge shape
    ks: tuple[Fraction, ...] = f.band_constants
    x0_span = None
    ruler_offsets = {}
    if has_bands:
        family = make_wedge_segments(n_bands + 1, gadgets[0].wedge(), x0_left)
        ks = family.constants
        if ks != f.band_constants:
            f = CnfFormula(f.n, f.clauses, ks)
        x0_span = family.segments[0].b.x - family.segments[0].a.x
        if x0_span >= 2:
            raise CompileError("x0 ruler length exceeds its reserved column")
        col[0] = (x0_left, x0_left + x0_span)
        for i, seg in enumerate(family.segments, start=1):
            ruler_offsets[i] = seg.a.y - mouth_y[0]

    # rows: one per clause literal
    rows: list[dict] = []
    for j, clause in enumerate(f.clauses):
        cg = gadgets[j]
        for pos, lit in enumerate(clause):
            if isinstance(lit, Band):
                i = lit.index + 1
                y = mouth_y[j] + ruler_offsets[i]
                lo, hi = col[0]
                rows.append(dict(clause=j, pos=pos, var=0,
                                 designation="band", band=lit.index,
                                 y=y, endpoint=None))
            else:
                v = lit.var
                lo, hi = col[v]
                if lit.const == 1:
                    p = intersect_lines(*cg.low_line(),
                                        Point(hi, 0), Point(hi, 1))
                    rows.append(dict(clause=j, pos=pos, var=v,
                                     designation="right", band=None,
                                     y=p.y, endpoint=p))
                else:
                    p = intersect_lines(*cg.up_line(),
                                        Point(lo, 0), Point(lo, 1))
                    rows.append(dict(clause=j, pos=pos, var=v,
                                     designation="left", band=None,
                                     y=p.y, endpoint=p))

    ys = sorted(r["y"] for r in rows)
    if len(set(ys)) != len(ys):
        raise CompileError("clearance infeasible: two rows share a height; "
                           "retry with a different epsilon")
    # clause strips cross x=0 at height 2 + sigma*tau and terminate on the
    # floor just left of it, clear of every left-wall mouth
    floor_sentinel = 2 + sigma * tau + 2
    if ys[0] <= floor_sentinel + 1:
        raise CompileError("layout error: rows leave no floor margin")
    ceil_sentinel = min(mouth_y.values()) - 1
    if ys and ys[-1] >= ceil_sentinel:
        raise CompileError("rows collide with the clause zone")

    # neighbour gaps from the global row order (sentinels at the margins)
    order = sorted(range(len(rows)), key=lambda idx: rows[idx]["y"])
    gap_below = {}
    gap_above = {}
    for pos_in_order, idx in enumerate(order):
        y = rows[idx]["y"]
        below = rows[order[pos_in_order - 1]]["y"] if pos_in_order > 0 else floor_sentinel
        above = (rows[order[pos_in_order + 1]]["y"]
                 if pos_in_order + 1 < len(order) else ceil_sentinel)
        gap_below[idx] = y - below
        gap_above[idx] = above - y

    records: list[GuardSegmentRecord] = []
    for idx, r in enumerate(rows):
        lo, hi = col[r["var"]]
        seg = Segment(Point(lo, r["y"]), Point(hi, r["y"]))
        records.append(GuardSegmentRecord(
            index=idx, clause=r["clause"], literal_pos=r["pos"], var=r["var"],
            designation=r["designation"], band=r["band"], segment=seg,
            endpoint=r["endpoint"]))

    # copy chains per variable (top to bottom)
    chains: dict[int, list[int]] = {}
    for idx in sorted(range(len(records)), key=lambda i: -records[i].segment.a.y):
        chains.setdefault(records[idx].var, []).append(idx)

    # The left wall must sit far enough left that chamber mouths accept
    # only the sight slopes of their own two rows: a foreign row one gap
    # further away must overshoot the razor mouth.  The margin scales with
    # the widest chain gap relative to the tightest row gap.
    min_gap = min(min(gap_above[i], gap_below[i]) for i in range(len(records)))
    max_pair_gap = Fraction(0)
    for v, chain in chains.items():
        for ui, li in zip(chain, chain[1:]):
            max_pair_gap = max(max_pair_gap,
                               records[ui].segment.a.y - records[li].segment.a.y)
    base = 2 * (max_pair_gap + min_gap + 1) * gw / min_gap + gw + 4
    wall_x = -base

    copy_pairs: list[CopyPair] = []
    ab_mouth_floor: dict[int, Fraction] = {}
    for v, chain in chains.items():
        for upper_idx, lower_idx in zip(chain, chain[1:]):
            up = records[upper_idx].segment
            dn = records[lower_idx].segment
            delta = min(gap_above[upper_idx], gap_below[lower_idx]) / 4
            cg = make_copy_gadget(up, dn, wall_x, delta)
            copy_pairs.append(CopyPair(v, upper_idx, lower_idx, cg))
            ab_mouth_floor[upper_idx] = cg.D.y

    # variable gadgets per row; the forcing apex J must sit low enough that
    # its wedge exits the right wall before descending to the next row
    depth = Fraction(1, 4)
    var_gadgets: list[VariableGadget] = []
    for idx, rec in enumerate(records):
        y = rec.segment.a.y
        col_l = rec.segment.a.x
        gap_min = min(gap_above[idx], gap_below[idx])
        drop = gap_min / 8
        rise = gap_above[idx] / 8
        if idx in ab_mouth_floor:
            rise = min(rise, (ab_mouth_floor[idx] - y) / 2)
        rise = min(rise, gap_min * (col_l - wall_x) / (2 * (gw - col_l)))
        vg = make_variable_gadget(
            rec.segment, "left", scale=depth,
            left_wall_x=wall_x, right_wall_x=gw,
            sliver_drop=drop, forcing_rise=rise, label=f"row{idx}")
        var_gadgets.append(vg)

    niches: list[Niche] = []
    for cg in gadgets:
        niches.append(cg.notch)
    for vg in var_gadgets:
        niches.extend(vg.niches())
    for pair in copy_pairs:
        niches.extend(pair.gadget.niches())

    try:
        polygon = assemble_room(wall_x, gw, Fraction(0), top, niches)
    except (GadgetError, GeometryError) as exc:
        raise CompileError(f"clearance infeasible at epsilon={epsilon}: {exc}") from exc

    gallery = Gallery(
        polygon=polygon, formula=f, columns=col, segments=tuple(records),
        clause_gadgets=gadgets, variable_gadgets=tuple(var_gadgets),
        copy_pairs=tuple(copy_pairs), epsilon=epsilon, metadata=metadata)
    _audit(gallery)
    return gallery


# --- audit --------------------------------------------------------------


def _strip_interval_on_row(cg: ClauseGadget, seg: Segment):
    """Parameters along a horizontal segment cut by a clause strip."""
    y = seg.a.y
    w = seg.b.x - seg.a.x
    apex, hi = cg.low_line()
    r1 = (apex.x - hi.x) / (apex.y - hi.y)
    x_low = apex.x + r1 * (y - apex.y)
    apex2, lo = cg.up_line()
    r2 = (apex2.x - lo.x) / (apex2.y - lo.y)
    x_up = apex2.x + r2 * (y - apex2.y)
    return (x_low - seg.a.x) / w, (x_up - seg.a.x) / w


def _audit(g: Gallery):
    records = g.segments
    # all guard segments strictly inside
    for rec in records:
        for p in (rec.segment.a, rec.segment.b):
            if g.polygon.locate(p) != "in":
                raise CompileError(
                    f"guard segment {rec.index} endpoint {p} not strictly inside")

    # same-variable alignment and column spanning
    for rec in records:
        lo, hi = g.columns[rec.var]
        if rec.segment.a.x != lo or rec.segment.b.x != hi:
            raise CompileError(f"segment {rec.index} does not span its column")

    # clause strips vs every segment: exactly the designated contact
    for rec in records:
        for cg in g.clause_gadgets:
            t_lo, t_up = _strip_interval_on_row(cg, rec.segment)
            designated = (cg.index == rec.clause)
            if designated and rec.designation == "right":
                ok = t_lo == 1 and t_up > 1
            elif designated and rec.designation == "left":
                ok = t_up == 0 and t_lo < 0
            elif designated and rec.designation == "band":
                ks = g.formula.band_constants
                ok = (t_lo == ks[rec.band] and t_up == ks[rec.band + 1])
            else:
                ok = t_up < 0 or t_lo > 1
            if not ok:
                raise CompileError(
                    f"strip of clause {cg.index} meets segment {rec.index} "
                    f"at parameters [{t_lo}, {t_up}] (designation "
                    f"{rec.designation if designated else 'foreign'})")

    # clause regions pairwise disjoint: a region is the wedge clipped by
    # the floor, so disjointness need only hold until its upper boundary
    # exits through y = 0
    from .gadgets import clause_family_disjoint
    span = Fraction(0)
    for cg in g.clause_gadgets:
        apex, hi = cg.low_line()
        r1 = (apex.x - hi.x) / (apex.y - hi.y)
        span = max(span, r1 * apex.y)
    if not clause_family_disjoint(list(g.clause_gadgets), span):
        raise CompileError("clause visibility regions overlap within the room")

    # per-variable y-extents of column-strip crossings must not overlap
    extents = []
    for v, (lo, hi) in g.columns.items():
        lows, highs = [], []
        for cg in g.clause_gadgets:
            apex, mhi = cg.low_line()
            r1 = (apex.x - mhi.x) / (apex.y - mhi.y)
            apex2, mlo = cg.up_line()
            r2 = (apex2.x - mlo.x) / (apex2.y - mlo.y)
            # strip's vertical span over the column
            highs.append(apex.y + (hi - apex.x) / r1)
            lows.append(apex2.y + (lo - apex2.x) / r2)
        extents.append((min(lows), max(highs), v))
    extents.sort()
    for (l1, h1, v1), (l2, h2, v2) in zip(extents, extents[1:]):
        if l2 <= h1:
            raise CompileError(
                f"column strip extents of variables {v1} and {v2} overlap in y")

    # forced slivers pairwise disjoint (their y-intervals are)
    ivs = []
    for vg in g.variable_gadgets:
        f, i, k = vg.forced_zone
        e = vg.E
        ivs.append((k.y, e.y, vg))
    ivs.sort()
    for (a1, b1, _), (a2, b2, _) in zip(ivs, ivs[1:]):
        if a2 <= b1:
            raise CompileError("forced slivers of two rows overlap in y")

    # J wedges touch no foreign segment (the wedge opens downward from J)
    for idx, vg in enumerate(g.variable_gadgets):
        jj = vg.J
        gseg = vg.guard_segment
        for rec in records:
            if rec.index == idx:
                continue
            s = rec.segment
            y = s.a.y
            if y >= jj.y:
                continue
            if vg.j_wedge_contains(s.a) or vg.j_wedge_contains(s.b):
                raise CompileError(
                    f"forcing wedge of row {idx} reaches segment {rec.index}")
            # a horizontal segment could cross the wedge without its
            # endpoints inside only if the wedge's rays cross its row
            # between the endpoints
            for target in (gseg.a, gseg.b):
                r = (target.x - jj.x) / (target.y - jj.y)
                xh = jj.x + r * (y - jj.y)
                if s.a.x <= xh <= s.b.x:
                    raise CompileError(
                        f"forcing wedge boundary of row {idx} crosses "
                        f"segment {rec.index}")

    # chamber razor mouths: no foreign segment can sight the deep edges.
    # Crossing height at the wall plane is monotone in both endpoints, so
    # one extreme corner decides; a per-pair threshold skips far rows.
    wall = g.polygon._bbox[0]
    far_right = max(rec.segment.b.x for rec in records)
    for pair in g.copy_pairs:
        cg = pair.gadget
        own = {pair.upper, pair.lower}
        mu = wall - cg.B.x
        psi_min = mu / (far_right - wall + mu)
        y_ab = cg.A.y
        # rows below this line overshoot the AB mouth bottom at every corner
        ab_safe_below = y_ab - (y_ab - cg.D.y) / psi_min
        y_uv = cg.U.y
        uv_safe_above = y_uv + (cg.S.y - y_uv) / psi_min
        for rec in records:
            if rec.index in own:
                continue
            y = rec.segment.a.y
            if y <= ab_safe_below or y >= y_ab:
                pass  # blocked at the AB mouth
            else:
                _check_chamber_blocked(cg, rec, "AB")
            if y >= uv_safe_above or y <= y_uv:
                pass
            else:
                _check_chamber_blocked(cg, rec, "UV")

    # copy pair alignment sanity
    for pair in g.copy_pairs:
        up = g.segments[pair.upper].segment
        dn = g.segments[pair.lower].segment
        if up.a.x != dn.a.x or up.b.x != dn.b.x:
            raise CompileError("copy pair segments misaligned")


def _check_chamber_blocked(cg: CopyGadget, rec: GuardSegmentRecord, which: str):
    """Foreign sightlines to a chamber's deep edge must cross the wall
    plane outside the open mouth interval; crossing height is monotone in
    both endpoints so the four corners decide."""
    edge, mouth_lo, mouth_hi = ((cg.A, cg.B), cg.D.y, cg.C.y) if which == "AB" \
        else ((cg.U, cg.V), cg.T.y, cg.S.y)
    wall_x = cg.C.x
    crossings = []
    for gp in (rec.segment.a, rec.segment.b):
        for ep in edge:
            t = (wall_x - gp.x) / (ep.x - gp.x)
            crossings.append(gp.y + t * (ep.y - gp.y))
    if not (max(crossings) <= mouth_lo or min(crossings) >= mouth_hi):
        raise CompileError(
            f"segment {rec.index} (variable {rec.var}) can sight chamber "
            f"{which} of a copy pair")


# --- surface construction -----------------------------------------------


def _default_constants(n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(i, n - 1) for i in range(n))


def surface_formula(complex_: CubicalComplex, f1, f2, n: int,
                    constants=None) -> CnfFormula:
    """CNF whose solution set is the n-fold connected sum of the surface
    realized by the complex (x0 is the new chain coordinate, variable 0).

    Caps at x0 = 0 and x0 = 1 are once-punctured copies; interior band
    constants carry alternating boundary tubes with full junction copies at
    the interior constants, so the gluing is a closed surface.  The
    classifier certifies the homeomorphism type.
    """
    if n < 2:
        raise CompileError("connected-sum formula needs genus n >= 2")
    if f1 == f2:
        raise CompileError("the two removed faces must differ")
    for face in (f1, f2):
        if face not in complex_.faces or face_dim(face) != 2:
            raise CompileError("removed faces must be 2-faces of the complex")
    ks = tuple(rat(v) for v in constants) if constants else _default_constants(n)
    if len(ks) != n:
        raise CompileError(f"need {n} band constants for genus {n}")

    from .complexes import face_with_boundary, remove_face
    c1 = remove_face(complex_, f1)
    c2 = remove_face(complex_, f2)
    b1 = face_with_boundary(complex_, f1)
    b2 = face_with_boundary(complex_, f2)

    def membership(kx: CubicalComplex) -> list[tuple]:
        base = cnf_of_dnf_pruned(complex_to_dnf(kx))
        shifted = []
        for cl in base.clauses:
            shifted.append(tuple(VarEq(l.var + 1, l.const) for l in cl))
        return shifted

    m_c1 = membership(c1)
    m_c2 = membership(c2)
    m_b1 = membership(b1)
    m_b2 = membership(b2)
    if len(m_c1) != len(m_c2):
        raise CompileError(
            "removed faces are not symmetric: C1 and C2 CNF sizes differ")

    zero = VarEq(0, 0)
    one = VarEq(0, 1)
    even_bands = [Band(j - 1) for j in range(1, n) if j % 2 == 0]
    odd_bands = [Band(j - 1) for j in range(1, n) if j % 2 == 1]
    if n % 2 == 0:
        c2_extra = [zero, one]
        c1_extra = []
        s1 = [zero] + even_bands + [one]
        s2 = odd_bands
    else:
        c2_extra = [zero]
        c1_extra = [one]
        s1 = [zero] + even_bands
        s2 = odd_bands + [one]

    # At n=2 the B2 family's band terms span all of [0,1], making those
    # clauses inert; they are kept anyway so the clause count (and with it
    # the gallery vertex count) stays exactly affine in n.
    clauses: list[tuple] = []
    for cl in m_c2:
        clauses.append(tuple(cl) + tuple(c2_extra))
    for cl in m_c1:
        clauses.append(tuple(cl) + tuple(c1_extra))
    for cl in m_b1:
        clauses.append(tuple(cl) + tuple(s1))
    for cl in m_b2:
        clauses.append(tuple(cl) + tuple(s2))
    return CnfFormula(complex_.n + 1, tuple(clauses), ks)


def surface_fixture(orientable: bool) -> CubicalComplex:
    return torus_complex() if orientable else projective_plane_complex()


def canonical_removed_faces(complex_: CubicalComplex):
    faces2 = sorted((f for f in complex_.faces if face_dim(f) == 2),
                    key=lambda f: tuple(-1 if v is None else v for v in f))
    if len(faces2) < 2:
        raise CompileError("complex has fewer than two 2-faces")
    return faces2[0], faces2[1]


def compile_surface(n: int, orientable: bool, epsilon=Fraction(1, 4)) -> Gallery:
    """Gallery whose solution space is the closed surface of genus n."""
    if n < 0:
        raise CompileError("genus must be nonnegative")
    if n == 0:
        if not orientable:
            raise CompileError("there is no non-orientable surface of genus 0")
        return _assemble(cnf_of_dnf_pruned(complex_to_dnf(sphere_complex())),
                         rat(epsilon))
    if n == 1:
        fixture = surface_fixture(orientable)
        return _assemble(cnf_of_dnf_pruned(complex_to_dnf(fixture)), rat(epsilon))
    fixture = surface_fixture(orientable)
    f1, f2 = canonical_removed_faces(fixture)
    f = surface_formula(fixture, f1, f2, n)
    return _assemble(f, rat(epsilon))
