"""Gadget geometry: variable, copying, and clause gadgets, plus the wedge
family of band-encoding guard segments.

All gadgets are convex niches carved outward through a straight wall of an
axis-aligned room.  Constructors compute every auxiliary point exactly and
re-check the defining collinearity and ordering relations before returning;
a violated relation is a constructor error, never silent.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    Point,
    Segment,
    SimplePolygon,
    intersect_lines,
    invert_through,
    orient,
    pt,
    rat,
)


class GadgetError(ValueError):
    pass


@dataclass(frozen=True)
class Niche:
    """Convex niche carved outward through a wall.

    points are in polygon boundary-walk order: first and last lie on the
    wall plane (the mouth corners), the rest are beyond it.  Left-wall
    niches are walked top to bottom, right-wall niches bottom to top.
    """
    wall: str
    points: tuple[Point, ...]
    label: str = ""

    def mouth_interval(self) -> tuple[Fraction, Fraction]:
        a = self.points[0].y
        b = self.points[-1].y
        return (min(a, b), max(a, b))


def assemble_room(x_left, x_right, y_bottom, y_top, niches) -> SimplePolygon:
    """Axis-aligned room with niches spliced into its side walls."""
    x_left, x_right = rat(x_left), rat(x_right)
    y_bottom, y_top = rat(y_bottom), rat(y_top)
    left = [n for n in niches if n.wall == "left"]
    right = [n for n in niches if n.wall == "right"]
    if len(left) + len(right) != len(niches):
        raise GadgetError("only left/right wall niches are supported")

    def check_wall(group, wall_x, inward_sign):
        ivs = []
        for n in group:
            lo, hi = n.mouth_interval()
            if not (y_bottom < lo and hi < y_top):
                raise GadgetError(f"niche {n.label!r} mouth outside wall span")
            if n.points[0].x != wall_x or n.points[-1].x != wall_x:
                raise GadgetError(f"niche {n.label!r} mouth not on wall plane")
            for q in n.points[1:-1]:
                if (q.x - wall_x) * inward_sign >= 0:
                    raise GadgetError(f"niche {n.label!r} does not point outward")
            ivs.append((lo, hi, n.label))
        ivs.sort()
        for (l1, h1, a), (l2, h2, b) in zip(ivs, ivs[1:]):
            if l2 <= h1:
                raise GadgetError(f"niche mouths {a!r} and {b!r} overlap")

    check_wall(left, x_left, +1)
    check_wall(right, x_right, -1)

    left.sort(key=lambda n: -n.mouth_interval()[1])
    right.sort(key=lambda n: n.mouth_interval()[0])

    verts: list[Point] = [Point(x_left, y_bottom), Point(x_right, y_bottom)]
    for n in right:
        verts.extend(n.points)
    verts.append(Point(x_right, y_top))
    verts.append(Point(x_left, y_top))
    for n in left:
        verts.extend(n.points)
    return SimplePolygon(verts)


# --- variable gadget --------------------------------------------------------


@dataclass(frozen=True)
class VariableGadget:
    """Three slits forcing one guard onto guard_segment.

    F and I are slit apexes on the guard line flanking the room; any guard
    seeing both must lie on segment FI (the forced triangles FIK below the
    line and EFI above it meet exactly in FI).  The J slit's visibility
    wedge meets line FI exactly in guard_segment.
    """
    guard_segment: Segment
    wall_side: str
    F: Point
    I: Point
    J: Point
    E: Point
    K: Point
    notch_F: Niche
    notch_I: Niche
    notch_J: Niche
    forced_zone: tuple[Point, Point, Point]  # closed triangle F I K
    sliver_above: tuple[Point, Point, Point]  # closed triangle E F I

    def niches(self) -> list[Niche]:
        return [self.notch_F, self.notch_I, self.notch_J]

    def j_wedge_contains(self, p: Point) -> bool:
        """p inside the closed visibility cone of J (rays J->G and J->H)."""
        g, h = self.guard_segment.a, self.guard_segment.b
        return orient(self.J, g, p) >= 0 and orient(self.J, h, p) <= 0


def make_variable_gadget(guard_segment: Segment, wall_side: str = "left",
                         scale=Fraction(1, 2), left_wall_x=None,
                         right_wall_x=None, sliver_drop=None,
                         forcing_rise=None, label: str = "") -> VariableGadget:
    """Variable gadget for a horizontal guard segment.

    scale bounds the slit depth beyond the walls.  sliver_drop is the
    half-height of the forced slivers at the far wall; forcing_rise the
    height of the J apex above the guard line.  Walls default to a small
    standalone harness around the segment.
    """
    g, h = guard_segment.a, guard_segment.b
    if g.y != h.y:
        raise GadgetError("guard segment must be horizontal")
    if g.x > h.x:
        g, h = h, g
    if g.x == h.x:
        raise GadgetError("guard segment must have positive length")
    scale = rat(scale)
    if scale <= 0:
        raise GadgetError("scale must be positive")
    w = h.x - g.x
    y0 = g.y
    margin = 2 * (w + scale)
    lw = rat(left_wall_x) if left_wall_x is not None else g.x - margin
    rw = rat(right_wall_x) if right_wall_x is not None else h.x + margin
    if not (lw < g.x and h.x < rw):
        raise GadgetError("walls must strictly flank the guard segment")
    drop = rat(sliver_drop) if sliver_drop is not None else scale
    rise = rat(forcing_rise) if forcing_rise is not None else scale / 2
    if drop <= 0 or rise <= 0:
        raise GadgetError("sliver_drop and forcing_rise must be positive")

    depth = scale
    span = rw - lw
    f = Point(lw - depth, y0)
    i = Point(rw + depth, y0)
    # mouth half-heights chosen so the slivers reach exactly +-drop at the
    # opposite wall
    m_f = drop * depth / (span + depth)
    m_i = drop * depth / (span + depth)
    k = Point(rw, y0 - drop)
    e = Point(lw, y0 + drop)

    tag = (label + ".") if label else ""
    notch_f = Niche("left", (Point(lw, y0), f, Point(lw, y0 - m_f)),
                    tag + "F")
    notch_i = Niche("right", (Point(rw, y0), i, Point(rw, y0 + m_i)),
                    tag + "I")

    j = Point(lw - depth, y0 + rise)
    jm_g = intersect_lines(j, g, Point(lw, 0), Point(lw, 1))
    jm_h = intersect_lines(j, h, Point(lw, 0), Point(lw, 1))
    if not (y0 < jm_g.y < jm_h.y):
        raise GadgetError("J mouth corners out of order")
    notch_j = Niche("left", (jm_h, j, jm_g), tag + "J")

    gadget = VariableGadget(
        guard_segment=Segment(g, h), wall_side=wall_side,
        F=f, I=i, J=j, E=e, K=k,
        notch_F=notch_f, notch_I=notch_i, notch_J=notch_j,
        forced_zone=(f, i, k), sliver_above=(e, f, i))
    _check_variable_gadget(gadget)
    return gadget


def _check_variable_gadget(vg: VariableGadget):
    g, h = vg.guard_segment.a, vg.guard_segment.b
    f, i, k, e, j = vg.F, vg.I, vg.K, vg.E, vg.J
    if not (f.y == i.y == g.y == h.y):
        raise GadgetError("F, I and the guard segment must share a line")
    if not (f.x < g.x and h.x < i.x):
        raise GadgetError("guard segment not strictly inside segment FI")
    if not (orient(f, i, k) < 0 and orient(f, i, e) > 0):
        raise GadgetError("forced triangles FIK and EFI must flank line FI")
    if not (j.y > g.y):
        raise GadgetError("J apex must sit strictly above the guard line")
    # J's wedge meets the guard line exactly in [G, H]: its rays pass
    # through the endpoints by construction; assert the collinearity
    if orient(vg.J, vg.notch_J.points[-1], g) != 0:
        raise GadgetError("J mouth corner not on ray J->G")
    if orient(vg.J, vg.notch_J.points[0], h) != 0:
        raise GadgetError("J mouth corner not on ray J->H")


def variable_gadget_harness(vg: VariableGadget) -> SimplePolygon:
    """Minimal standalone room exposing one variable gadget for testing."""
    lw = vg.notch_F.points[0].x
    rw = vg.notch_I.points[0].x
    y0 = vg.guard_segment.a.y
    top_need = max(vg.E.y, vg.notch_J.mouth_interval()[1])
    bottom_need = vg.K.y
    top = y0 + 2 * (top_need - y0)
    bottom = y0 - 2 * (y0 - bottom_need)
    return assemble_room(lw, rw, bottom, top, vg.niches())


# --- copying gadget ----------------------------------------------------------


@dataclass(frozen=True)
class CopyGadget:
    """Two chamber slits forcing aligned guards to share an x-coordinate.

    The AB chamber sits just above the upper row and the UV chamber just
    below the lower row, each opening through a razor mouth in the left
    wall whose corners are the occluders of Lemma-3 type: C and D for AB,
    S and T for UV.  Inversion through C maps GH onto BA endpoint to
    endpoint (and D: NO onto BA; S: GH onto VU; T: NO onto VU).
    """
    upper_segment: Segment
    lower_segment: Segment
    A: Point
    B: Point
    C: Point
    D: Point
    U: Point
    V: Point
    S: Point
    T: Point
    slit_AB: Niche
    slit_UV: Niche

    def niches(self) -> list[Niche]:
        return [self.slit_AB, self.slit_UV]

    def ab_image(self, t: Fraction) -> Point:
        """Point of AB covered boundary at parameter t (both f_C and f_D)."""
        t = rat(t)
        return Point(self.B.x + t * (self.A.x - self.B.x), self.A.y)

    def uv_image(self, t: Fraction) -> Point:
        t = rat(t)
        return Point(self.V.x + t * (self.U.x - self.V.x), self.U.y)

    def guard_pair(self, t, t2=None) -> tuple[Point, Point]:
        t = rat(t)
        t2 = t if t2 is None else rat(t2)
        gu, gl = self.upper_segment, self.lower_segment
        return (gu.point_at(t), gl.point_at(t2))


def make_copy_gadget(gh: Segment, no: Segment, wall_x, row_gap) -> CopyGadget:
    """Copy gadget for two vertically aligned horizontal guard segments.

    wall_x is the left wall plane; row_gap is the vertical clearance used
    above the upper row and below the lower row for the chamber slits.
    """
    g, h = gh.a, gh.b
    n, o = no.a, no.b
    if g.y != h.y or n.y != o.y:
        raise GadgetError("guard segments must be horizontal")
    if g.x > h.x:
        g, h = h, g
    if n.x > o.x:
        n, o = o, n
    if n.x != g.x or o.x != h.x:
        raise GadgetError("segments misaligned: need N.x = G.x and O.x = H.x")
    if n.y >= g.y:
        raise GadgetError("lower segment must lie strictly below the upper")
    wall_x = rat(wall_x)
    if wall_x >= g.x:
        raise GadgetError("wall must lie strictly left of the segments")
    delta = rat(row_gap)
    if delta <= 0:
        raise GadgetError("insufficient vertical gap for the chamber slits")

    yu, yl = g.y, n.y
    w = h.x - g.x
    gap = yu - yl
    d0 = g.x - wall_x
    # chamber setback: small enough that the razor mouth clears both rows
    mu = d0 * delta / (2 * gap)
    length = w * mu / d0

    y_ab = yu + delta
    b = Point(wall_x - mu, y_ab)
    a = Point(b.x - length, y_ab)
    c = intersect_lines(g, b, h, a)
    d = intersect_lines(n, b, o, a)

    y_uv = yl - delta
    v = Point(wall_x - mu, y_uv)
    u = Point(v.x - length, y_uv)
    s = intersect_lines(g, v, h, u)
    t = intersect_lines(n, v, o, u)

    slit_ab = Niche("left", (c, b, a, d), "AB")
    slit_uv = Niche("left", (s, u, v, t), "UV")
    gadget = CopyGadget(Segment(g, h), Segment(n, o), a, b, c, d, u, v, s, t,
                        slit_ab, slit_uv)
    _check_copy_gadget(gadget, wall_x)
    return gadget


def _check_copy_gadget(cg: CopyGadget, wall_x):
    g, h = cg.upper_segment.a, cg.upper_segment.b
    n, o = cg.lower_segment.a, cg.lower_segment.b
    a, b, c, d = cg.A, cg.B, cg.C, cg.D
    u, v, s, t = cg.U, cg.V, cg.S, cg.T
    yu, yl, y_ab, y_uv = g.y, n.y, a.y, u.y

    if not (a.x < b.x and u.x < v.x):
        raise GadgetError("chamber deep edges must run left to right")
    if c.x != wall_x or d.x != wall_x or s.x != wall_x or t.x != wall_x:
        raise GadgetError("occluders must land exactly on the wall plane")
    # Fig. 3 ordering relations
    if not (yu < c.y < y_ab):
        raise GadgetError("C not strictly between line GH and line AB")
    if not (yl < d.y < y_ab):
        raise GadgetError("D not strictly between line NO and line AB")
    if not (y_uv < s.y < yu):
        raise GadgetError("S not strictly between line GH and line UV")
    if not (y_uv < t.y < yl):
        raise GadgetError("T not strictly between line NO and line UV")
    # razor mouths must clear both rows so foreign sightlines stay blocked
    if not (yu < d.y < c.y):
        raise GadgetError("insufficient vertical gap: AB mouth does not clear the upper row")
    if not (t.y < s.y < yl):
        raise GadgetError("insufficient vertical gap: UV mouth does not clear the lower row")
    # endpoint correspondence of the four inversions
    checks = [
        (c, g, y_ab, b), (c, h, y_ab, a),
        (d, n, y_ab, b), (d, o, y_ab, a),
        (s, g, y_uv, v), (s, h, y_uv, u),
        (t, n, y_uv, v), (t, o, y_uv, u),
    ]
    for z, src, target_y, expect in checks:
        got = invert_through(z, src, target_y)
        if got != expect:
            raise GadgetError(
                f"inversion through {z} maps {src} to {got}, expected {expect}")
    for quad, name in ((cg.slit_AB.points, "AB"), (cg.slit_UV.points, "UV")):
        m = len(quad)
        for idx in range(m):
            p0, p1, p2 = quad[idx - 1], quad[idx], quad[(idx + 1) % m]
            if orient(p0, p1, p2) <= 0:
                raise GadgetError(f"slit {name} is not strictly convex")


# --- copy strip: a standalone Lemma-3 harness -------------------------------


@dataclass(frozen=True)
class CopyStrip:
    """One copy gadget plus both rows' variable gadgets in a closed strip."""
    polygon: SimplePolygon
    upper: VariableGadget
    lower: VariableGadget
    copy: CopyGadget

    @property
    def apexes(self) -> dict[str, Point]:
        return {"F": self.upper.F, "I": self.upper.I, "J": self.upper.J,
                "M": self.lower.F, "P": self.lower.I, "Q": self.lower.J}

    def guards_at(self, t, t2=None) -> tuple[Point, Point]:
        return self.copy.guard_pair(t, t2)


def build_copy_strip(gx=Fraction(10), width=Fraction(1), yu=Fraction(10),
                     yl=Fraction(0), wall_x=Fraction(0), right_x=Fraction(14),
                     row_gap=Fraction(2)) -> CopyStrip:
    """Standalone strip realizing the hypotheses of the copying lemma."""
    gx, width, yu, yl = rat(gx), rat(width), rat(yu), rat(yl)
    wall_x, right_x, row_gap = rat(wall_x), rat(right_x), rat(row_gap)
    gh = Segment(Point(gx, yu), Point(gx + width, yu))
    no = Segment(Point(gx, yl), Point(gx + width, yl))
    cg = make_copy_gadget(gh, no, wall_x, row_gap)

    gap = yu - yl
    drop = gap / 8
    rise_u = (cg.D.y - yu) / 2
    rise_l = gap / 8
    upper = make_variable_gadget(gh, "left", scale=drop,
                                 left_wall_x=wall_x, right_wall_x=right_x,
                                 sliver_drop=drop, forcing_rise=rise_u,
                                 label="upper")
    lower = make_variable_gadget(no, "left", scale=drop,
                                 left_wall_x=wall_x, right_wall_x=right_x,
                                 sliver_drop=drop, forcing_rise=rise_l,
                                 label="lower")
    # the lower row's forcing notch must stay below the upper row's F mouth
    if lower.notch_J.mouth_interval()[1] >= upper.notch_F.mouth_interval()[0]:
        raise GadgetError("strip too cramped: forcing notch collides with F mouth")

    niches = cg.niches() + upper.niches() + lower.niches()
    y_bottom = cg.T.y - row_gap
    y_top = cg.A.y + row_gap
    poly = assemble_room(wall_x, right_x, y_bottom, y_top, niches)
    return CopyStrip(poly, upper, lower, cg)


# --- clause gadget -----------------------------------------------------------


@dataclass(frozen=True)
class ClauseGadget:
    """Narrow diagonal slit whose deep end is seen exactly from a thin
    triangular strip extending down-left from its mouth."""
    index: int
    witness_point: Point
    mouth_hi: Point
    mouth_lo: Point
    notch: Niche

    def region_contains(self, p: Point) -> bool:
        """p inside the closed visibility wedge of the witness point."""
        w = self.witness_point
        lo = orient(w, self.mouth_hi, p)   # low line: through the upper corner
        up = orient(w, self.mouth_lo, p)
        return lo >= 0 and up <= 0

    def low_line(self) -> tuple[Point, Point]:
        """Boundary line carrying right-endpoint (x=1) designations."""
        return (self.witness_point, self.mouth_hi)

    def up_line(self) -> tuple[Point, Point]:
        """Boundary line carrying left-endpoint (x=0) designations."""
        return (self.witness_point, self.mouth_lo)

    def wedge(self) -> "Wedge":
        return Wedge(self.witness_point, self.mouth_hi, self.mouth_lo)


def make_clause_gadget(anchor: Point, index: int, slope, width) -> ClauseGadget:
    """Clause slit on the right wall at the anchor (its upper mouth corner).

    The witness apex sits one unit beyond the wall, so the region beyond the
    mouth diverges vertically at rate width per unit of horizontal depth;
    keeping width small relative to the room span keeps sibling regions
    disjoint.
    """
    slope, width = rat(slope), rat(width)
    if slope <= 0 or width <= 0:
        raise GadgetError("slope and width must be positive")
    tau = Fraction(1)
    apex = Point(anchor.x + tau, anchor.y + slope * tau)
    mouth_hi = anchor
    mouth_lo = Point(anchor.x, anchor.y - width)
    notch = Niche("right", (mouth_lo, apex, mouth_hi), f"clause{index}")
    gadget = ClauseGadget(index, apex, mouth_hi, mouth_lo, notch)
    if orient(apex, mouth_hi, mouth_lo) <= 0:
        raise GadgetError("clause slit degenerate")
    return gadget


def clause_family_disjoint(gadgets: list[ClauseGadget], span) -> bool:
    """The diverging wedges of translated clause gadgets stay disjoint over
    a horizontal span.  Consecutive wedges meet where the vertical spread
    (depth * width / tau) catches up with the translation."""
    span = rat(span)
    gs = sorted(gadgets, key=lambda g: -g.mouth_hi.y)
    for g1, g2 in zip(gs, gs[1:]):
        translation = g1.mouth_lo.y - g2.mouth_hi.y
        if translation <= 0:
            return False
        w = g1.mouth_hi.y - g1.mouth_lo.y
        tau = g1.witness_point.x - g1.mouth_hi.x
        spread = w * span / tau
        if spread >= translation:
            return False
    return True


# --- wedge family for x0 bands ----------------------------------------------


@dataclass(frozen=True)
class Wedge:
    """Two rays from a clause apex bounding its visibility strip."""
    apex: Point
    low_pt: Point   # on the lower boundary line (crosses rulers first)
    up_pt: Point

    def __post_init__(self):
        if self.apex.y <= self.low_pt.y or self.apex.y <= self.up_pt.y:
            raise GadgetError("wedge apex must sit above both ray points")

    def x_low(self, y) -> Fraction:
        r = (self.apex.x - self.low_pt.x) / (self.apex.y - self.low_pt.y)
        return self.apex.x + r * (rat(y) - self.apex.y)

    def x_up(self, y) -> Fraction:
        r = (self.apex.x - self.up_pt.x) / (self.apex.y - self.up_pt.y)
        return self.apex.x + r * (rat(y) - self.apex.y)


@dataclass(frozen=True)
class WedgeFamily:
    """n-1 aligned horizontal guard segments crossing a wedge.

    Segment i meets the lower wedge line at parameter k_{i-1} of its own
    length and the upper line at k_i; the common segment length is solved
    from the fixed wedge so that k_{n-1} = 1 exactly in rationals.
    """
    wedge: Wedge
    segments: tuple[Segment, ...]
    constants: tuple[Fraction, ...]


def make_wedge_segments(n: int, wedge: Wedge, left_x) -> WedgeFamily:
    """Solve for the common segment length and place the n-1 rulers.

    The y-positions are derived, not chosen: alignment of all segments at
    left_x together with the crossing recurrence pins them uniquely.
    """
    if n < 2:
        raise GadgetError("need n >= 2 for a wedge family")
    left_x = rat(left_x)
    apex = wedge.apex
    if apex.x <= left_x:
        raise GadgetError("wedge apex must lie right of the segments")
    r1 = (apex.x - wedge.low_pt.x) / (apex.y - wedge.low_pt.y)
    r2 = (apex.x - wedge.up_pt.x) / (apex.y - wedge.up_pt.y)
    if r1 <= 0 or r2 <= 0:
        raise GadgetError("wedge rays must descend leftward")
    ratio = r2 / r1
    if not (0 < ratio < 1):
        raise GadgetError("no terminating segment length for this wedge")

    denom = 1 - ratio ** (n - 1)
    s = (apex.x - left_x) * denom
    ks = [(1 - ratio ** i) / denom for i in range(n)]

    segments = []
    for i in range(1, n):
        # lower line crosses at parameter k_{i-1}
        y_i = apex.y + (left_x + ks[i - 1] * s - apex.x) / r1
        if wedge.x_up(y_i) != left_x + ks[i] * s:
            raise GadgetError("wedge recurrence failed to close")
        segments.append(Segment(Point(left_x, y_i), Point(left_x + s, y_i)))
    ys = [seg.a.y for seg in segments]
    if any(b <= a for a, b in zip(ys, ys[1:])):
        raise GadgetError("ruler rows out of order")
    if ks[0] != 0 or ks[-1] != 1:
        raise GadgetError("band constants must run from 0 to 1")
    return WedgeFamily(wedge, tuple(segments), tuple(ks))
