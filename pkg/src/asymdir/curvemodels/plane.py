"""Smooth plane quintics and sextics with auxiliary lines."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DegenerateInput, InvalidParams, SingularCurve, TangentLine
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, UniPoly, cluster_roots, parse_polynomial, resultant_y, roots_univariate

XYZ = ("X", "Y", "Z")


@dataclass(frozen=True)
class LineSection:
    """Intersection of a line with the curve: ``points`` are normalized
    projective coordinates (largest coordinate equal to 1)."""

    line: Poly
    points: tuple[tuple[complex, complex, complex], ...]
    transversal: bool
    min_separation: float


@dataclass(frozen=True)
class PlaneCurveModel:
    F: Poly
    degree: int
    lines: tuple[Poly, ...] = ()
    sections: tuple[LineSection, ...] = ()
    smoothness: dict = field(default_factory=dict, compare=False)

    def chart(self, var: str) -> Poly:
        """Affine chart with ``var`` set to 1, in the remaining two variables."""
        return self.F.dehomogenize(XYZ.index(var))


def line_vector(line: Poly) -> tuple:
    if not line.is_homogeneous(1) or line.is_zero():
        raise InvalidParams(f"not a linear form: {line!r}")
    return tuple(line.coeff(*e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def cross(u, v) -> tuple:
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def normalize_point(p) -> tuple:
    p = tuple(complex(c) for c in p)
    k = max(range(3), key=lambda i: abs(p[i]))
    return tuple(c / p[k] for c in p)


def _kernel_basis(v) -> tuple[tuple, tuple]:
    a, b, c = (Fraction(t) for t in v)
    if c != 0:
        return (Fraction(1), Fraction(0), -a / c), (Fraction(0), Fraction(1), -b / c)
    if b != 0:
        return (Fraction(1), -a / b, Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))
    return (Fraction(0), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))


def line_section(F: Poly, line: Poly, ctx: NumCtx = DEFAULT_CTX) -> LineSection:
    """Intersect ``F = 0`` with a line through the parametrization ``A + t B``,
    where ``B`` is chosen off the curve so that all points have finite ``t``."""
    A, B = _kernel_basis(line_vector(line))
    k = 0
    while F(*B) == 0:
        k += 1
        B = tuple(b + k * a for a, b in zip(A, B))
        if k > F.total_degree + 1:
            raise DegenerateInput("line is contained in the curve")
    G = F(*(UniPoly([a, b], "t") for a, b in zip(A, B)))
    if not isinstance(G, UniPoly) or G.degree < 1:
        raise DegenerateInput("line meets the curve in no finite points")
    roots = [r.value for r in roots_univariate(G, ctx)]
    groups = cluster_roots(roots, ctx.cluster_tol)
    dG = G.derivative()
    scale = G.one_norm()
    transversal = len(groups) == len(roots) and all(
        abs(complex(dG(r))) > ctx.zero_tol * scale * max(1.0, abs(r)) ** G.degree for r in roots)
    sep = min((abs(roots[i] - roots[j]) for i in range(len(roots)) for j in range(i + 1, len(roots))),
              default=float("inf"))
    pts = tuple(normalize_point([a + r * b for a, b in zip(A, B)]) for r in roots)
    return LineSection(line, pts, transversal, float(sep))


def _trim(u: UniPoly, rel: float = 1e-12) -> UniPoly:
    scale = max((abs(complex(c)) for c in u.coeffs), default=0.0)
    return UniPoly([c if abs(complex(c)) > rel * scale else 0 for c in u.coeffs], u.var)


def _singular_candidates(F: Poly, ctx: NumCtx) -> list[tuple]:
    """Projective points where all partials may vanish: roots of the resultant
    of F_X, F_Y in the chart Z = 1, then the line Z = 0."""
    grads = [F.diff(i) for i in range(3)]
    pts = []
    # chart Z = 1
    g = [d.dehomogenize(2) for d in grads]
    g = [Poly(d.terms, ("x", "y")) for d in g]
    if g[0].degree_y >= 1 or g[1].degree_y >= 1:
        res = resultant_y(g[0], g[1])
        if res.is_zero():
            raise SingularCurve("partial derivatives share a common component")
    else:
        # neither partial involves y: candidates lie on vertical lines x = root
        res = next((d.specialize(1, 0) for d in g[:2] if d.degree_x > 0), UniPoly([]))
    xs = [r.value for r in roots_univariate(res, ctx)] if res.degree >= 1 else []
    for x0 in xs:
        ys = []
        for d in g:
            u = _trim(d.specialize(0, x0))
            if u.degree >= 1:
                ys.extend(r.value for r in roots_univariate(u, ctx))
        pts.extend((x0, y0, 1) for y0 in ys)
    # line Z = 0: points (1, y, 0) and (0, 1, 0)
    h = [Poly(d.substitute(2, 0).dehomogenize(0).terms, ("y", "z")) for d in grads]
    line_polys = [UniPoly([d.coeff(k, 0) for k in range(d.degree(0) + 1)], "y") if not d.is_zero() else UniPoly([])
                  for d in h]
    if all(p.is_zero() for p in line_polys):
        raise SingularCurve("all partials vanish along the line Z = 0")
    for p in line_polys:
        if p.degree >= 1:
            pts.extend((1, r.value, 0) for r in roots_univariate(p, ctx))
    pts.append((0, 1, 0))
    return pts


def smoothness_certificate(F: Poly, ctx: NumCtx = DEFAULT_CTX) -> dict:
    grads = [F.diff(i) for i in range(3)]
    scale = F.scale()
    cands = _singular_candidates(F, ctx)
    worst = float("inf")
    for p in cands:
        q = normalize_point(p)
        size = sum(abs(complex(d(*q))) for d in grads)
        worst = min(worst, size / scale)
        if size <= ctx.zero_tol * scale:
            raise SingularCurve(f"gradient vanishes at ({q[0]:.6g} : {q[1]:.6g} : {q[2]:.6g})")
    return {"smooth": True, "method": "resultant elimination", "tolerance": ctx.zero_tol,
            "candidates_checked": len(cands), "min_relative_gradient": worst}


def parse_line(text) -> Poly:
    return text if isinstance(text, Poly) else parse_polynomial(text, XYZ)


def build_plane_curve(F_text, degree: int, line_texts=(), ctx: NumCtx = DEFAULT_CTX,
                      require_transversal: bool = True) -> PlaneCurveModel:
    """Validate a smooth plane curve of degree 5 or 6 and intersect it with lines."""
    if degree not in (5, 6):
        raise InvalidParams(f"degree must be 5 or 6, got {degree}")
    F = F_text if isinstance(F_text, Poly) else parse_polynomial(F_text, XYZ)
    if not F.is_homogeneous(degree) or F.is_zero():
        raise InvalidParams(f"F is not a homogeneous form of degree {degree}")
    lines = tuple(parse_line(t) for t in line_texts)
    vecs = [line_vector(l) for l in lines]
    for i in range(len(vecs)):
        for j in range(i + 1, len(vecs)):
            if all(c == 0 for c in cross(vecs[i], vecs[j])):
                raise InvalidParams(f"lines {i + 1} and {j + 1} are proportional")
    cert = smoothness_certificate(F, ctx)
    sections = []
    for i, l in enumerate(lines):
        sec = line_section(F, l, ctx)
        if require_transversal and not sec.transversal:
            raise TangentLine(f"line {i + 1} is tangent to the curve")
        sections.append(sec)
    return PlaneCurveModel(F, degree, lines, tuple(sections), cert)
