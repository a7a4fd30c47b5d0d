"""The embedded catalog of spherical sheets and strata per simple type.

Everything here is citable data: which sheets of spherical classes exist,
their Weyl elements w_S = w0*w_Pi, expected component structure of the
slice intersection, smoothness verdicts, and the spherical-class marking
used by the finite-group oracle.  The catalog is literal data, not
re-derived; consistency with the other modules is enforced by tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .linalg import (
    mat_mul,
    mat_pow,
    rank as mat_rank,
    scalar_shift,
)
from .matgroups import GroupContext
from .rootsys import (
    RootSystem,
    WeylElement,
    build_root_system,
    longest_element,
    w0_wPi,
)


@dataclass(frozen=True)
class SheetDescriptor:
    """One non-trivial sheet of spherical conjugacy classes."""

    group_type: str          # A B C D E
    rank: int
    isogeny: str             # natural matrix group, or sc for E types
    label: str               # e.g. "S", "Sprime", "S1", "-S1", "S2", "R"
    semisimple_members: str  # eigenvalue pattern, human-readable
    unipotent_members: tuple[str, ...]
    isolated_members: tuple[str, ...]
    pi: tuple[int, ...]      # zero-based simple-root indices
    expected_components: int
    component_geometry: str  # "affine line", "graph surface", "cuspidal curve"
    sheet_smooth: bool
    stratum_id: str
    stratum_smooth: bool
    notes: tuple[str, ...] = ()

    def weyl_system(self) -> RootSystem:
        return build_root_system(self.group_type, self.rank)

    def w_S(self) -> WeylElement:
        return catalog_w_S(self.group_type, self.rank, self.label)


class CatalogError(ValueError):
    pass


def _a_type_w_S(system: RootSystem, m: int) -> WeylElement:
    """Bruhat-maximal involution with m two-cycles: the nested pairing.

    The catalog index subset follows from it as Pi = {alpha_{m+1}..alpha_{n-m}}
    (the stated range one wider is not diagram-symmetric and fails the
    involution requirement, so the element is primary here).
    """
    from fractions import Fraction

    n = system.rank
    w = system.identity_element()
    for j in range(1, m + 1):
        root = tuple(
            Fraction(1 if t == j - 1 else (-1 if t == n + 1 - j else 0))
            for t in range(n + 1)
        )
        w = w.mul(system.reflection(root))
    return w


def a_type_pi(n: int, m: int) -> tuple[int, ...]:
    return tuple(range(m, n - m))


def catalog_w_S(group_type: str, rank: int, label: str) -> WeylElement:
    system = build_root_system(group_type, rank)
    if group_type == "A":
        m = int(label.split("_")[1])
        return _a_type_w_S(system, m)
    pi = _catalog_pi(group_type, rank, label)
    w = w0_wPi(system, pi)
    if group_type == "D" and label in ("thetaS", "thetaR"):
        theta_w = _theta_conjugate(
            system, w0_wPi(system, _catalog_pi(group_type, rank,
                                               label.replace("theta", ""))))
        if theta_w != w:
            raise AssertionError("theta twist disagrees with its Pi data")
    return w


def _catalog_pi(group_type: str, rank: int, label: str) -> tuple[int, ...]:
    n = rank
    if group_type == "B":
        return () if label == "S" else tuple(range(2, n))
    if group_type == "C":
        if label == "S2":
            return ()
        return tuple(range(2, n))  # S1 and -S1
    if group_type == "D":
        if label == "S":
            return tuple(range(0, n, 2))  # alpha_1, alpha_3, ..., alpha_{n-1}
        if label == "thetaS":
            # theta swaps the two fork roots alpha_{n-1} <-> alpha_n
            return tuple(range(0, n - 2, 2)) + (n - 1,)
        if label in ("R", "thetaR"):
            return tuple(range(0, n - 2, 2))
        return tuple(range(2, n))  # Sprime
    if group_type == "E":
        return (2, 3, 4) if rank == 6 else (1, 2, 3, 4)
    raise CatalogError(f"no Pi data for {group_type}{rank} {label}")


def _theta_conjugate(system: RootSystem, w: WeylElement) -> WeylElement:
    """Image of w under the order-2 graph automorphism of D_n.

    theta acts as conjugation by diag(1,..,1,-1) on the coordinate model.
    """
    n = system.rank

    def flip(v):
        return tuple(-x if i == n - 1 else x for i, x in enumerate(v))

    cols = []
    for a in system.simple_roots:
        img = flip(w.apply_vector(flip(a)))
        cols.append(system.coefficients(img))
    matrix = tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
    return WeylElement(system, matrix)


def sheet_catalog(group_type: str, rank: int, isogeny: str = "natural"):
    """All non-trivial sheets of spherical classes for a simple type."""
    group_type = group_type.upper()
    if group_type in ("F", "G") or (group_type == "E" and rank == 8):
        return []
    if group_type == "A":
        return _a_catalog(rank, isogeny)
    if group_type == "B":
        if rank < 2:
            raise CatalogError("type B requires rank >= 2")
        return _b_catalog(rank)
    if group_type == "C":
        if rank < 3:
            raise CatalogError(
                "type C catalog starts at rank 3; rank 2 is listed under B_2")
        return _c_catalog(rank)
    if group_type == "D":
        if rank < 4:
            raise CatalogError("type D requires rank >= 4")
        return _d_catalog(rank)
    if group_type == "E":
        return _e_catalog(rank)
    raise CatalogError(f"unknown type {group_type}")


def _a_catalog(n: int, isogeny: str):
    out = []
    for m in range(1, (n + 1) // 2 + 1):
        notes = (
            "solver finds 2^(m-1) sign components; the quoted count (m-1) "
            "disagrees and is flagged, not adopted",
            "semisimple members carry multiplicities (n+1-m, m); the sheet's "
            "unipotent member fixes these by the dimension count",
        )
        if isogeny == "sl":
            notes = notes + (
                "inside SL the slice meets the det=1 curves; for p | m those "
                "curves are non-reduced and the reduced curve is used",
            )
        out.append(
            SheetDescriptor(
                group_type="A",
                rank=n,
                isogeny=isogeny if isogeny in ("gl", "sl") else "gl",
                label=f"S_{m}",
                semisimple_members=(
                    f"two eigenvalues with multiplicities ({n + 1 - m},{m})"
                ),
                unipotent_members=(f"(2^{m},1^{n + 1 - 2 * m})",),
                isolated_members=(),
                pi=a_type_pi(n, m),
                expected_components=2 ** (m - 1),
                component_geometry="graph surface (a,b) -> (a,b,a^2/b+b)",
                sheet_smooth=True,
                stratum_id=f"A{n}:S_{m}",
                stratum_smooth=True,
                notes=notes,
            )
        )
    return out


def _b_catalog(n: int):
    unip_S = f"(3,2^{n - 1})" if n % 2 == 1 else f"(3,2^{n - 2},1^2)"
    b2_note = (
        ("for n=2 the sheets S and S' share the class (3,1^2), so the "
         "stratum containing them is singular",)
        if n == 2 else ()
    )
    stratum_S = f"B{n}:unip(3,1^2)" if n == 2 else f"B{n}:S"
    stratum_Sp = f"B{n}:unip(3,1^2)" if n == 2 else f"B{n}:Sprime"
    sheets = [
        SheetDescriptor(
            group_type="B",
            rank=n,
            isogeny="so",
            label="S",
            semisimple_members="eigenvalues 1,l,1/l with multiplicities 1,n,n",
            unipotent_members=(unip_S,),
            isolated_members=(
                f"rho_n * unipotent (2^{n}) in SO_{2 * n}" if n % 2 == 0
                else f"rho_n * unipotent (2^{n - 1},1^2) in SO_{2 * n}",
            ),
            pi=(),
            expected_components=2 ** (2 * n - 1),
            component_geometry="affine line",
            sheet_smooth=True,
            stratum_id=stratum_S,
            stratum_smooth=n != 2,
            notes=b2_note,
        ),
        SheetDescriptor(
            group_type="B",
            rank=n,
            isogeny="so",
            label="Sprime",
            semisimple_members=(
                "eigenvalues 1,l,1/l with multiplicities 2n-1,1,1"),
            unipotent_members=(f"(3,1^{2 * n - 2})",),
            isolated_members=(),
            pi=tuple(range(2, n)),
            expected_components=4,
            component_geometry="affine line",
            sheet_smooth=True,
            stratum_id=stratum_Sp,
            stratum_smooth=n != 2,
            notes=b2_note,
        ),
    ]
    return sheets


def _c_catalog(n: int):
    common = dict(group_type="C", rank=n, isogeny="sp")
    out = []
    for label, sign in (("S1", "+"), ("-S1", "-")):
        out.append(
            SheetDescriptor(
                **common,
                label=label,
                semisimple_members=(
                    f"{sign}(eigenvalues l,1/l,1 with multiplicities 1,1,2n-2)"),
                unipotent_members=(f"{sign}(2^2,1^{2 * n - 4})",),
                isolated_members=(f"{sign}sigma_1 x_beta(1)",),
                pi=tuple(range(2, n)),
                expected_components=4,
                component_geometry="affine line",
                sheet_smooth=True,
                stratum_id=f"C{n}:{label}",
                stratum_smooth=True,
            )
        )
    out.append(
        SheetDescriptor(
            **common,
            label="S2",
            semisimple_members="eigenvalues l,1/l with multiplicities n,n",
            unipotent_members=(f"+-(2^{n})",),
            isolated_members=(),
            pi=(),
            expected_components=2 ** n,
            component_geometry="affine line",
            sheet_smooth=True,
            stratum_id=f"C{n}:S2",
            stratum_smooth=True,
        )
    )
    return out


def _d_catalog(n: int):
    common = dict(group_type="D", rank=n, isogeny="so")
    out = []
    if n % 2 == 0:
        h = n // 2
        for label in ("S", "thetaS"):
            out.append(
                SheetDescriptor(
                    **common,
                    label=label,
                    semisimple_members=(
                        "eigenvalues l,1/l with multiplicities n,n"
                        + (" (theta-twisted)" if label == "thetaS" else "")),
                    unipotent_members=(
                        f"+-(2^{n}){'_II' if label == 'thetaS' else '_I'}",),
                    isolated_members=(),
                    pi=_catalog_pi("D", n, label),
                    expected_components=2 ** h,
                    component_geometry="affine line",
                    sheet_smooth=True,
                    stratum_id=f"D{n}:{label}",
                    stratum_smooth=True,
                    notes=(
                        "the two very even classes (2^n) split between S and "
                        "theta(S); w_S and theta(w_S) differ",
                    ),
                )
            )
    else:
        h = (n - 1) // 2
        for label in ("R", "thetaR"):
            out.append(
                SheetDescriptor(
                    **common,
                    label=label,
                    semisimple_members=(
                        "eigenvalues l,1/l with multiplicities n,n"
                        + (" (theta-twisted)" if label == "thetaR" else "")),
                    unipotent_members=(f"+-(2^{n - 1},1^2)",),
                    isolated_members=(),
                    pi=_catalog_pi("D", n, label),
                    expected_components=2 ** h,
                    component_geometry="affine line (coordinate zeta in k^*)",
                    sheet_smooth=True,
                    stratum_id=f"D{n}:R-thetaR",
                    stratum_smooth=False,
                    notes=(
                        "R and theta(R) share the classes +-(2^{n-1},1^2), "
                        "so their stratum is singular; theta(w_R) = w_R",
                    ),
                )
            )
    out.append(
        SheetDescriptor(
            **common,
            label="Sprime",
            semisimple_members=(
                "eigenvalues 1,l,1/l with multiplicities 2n-2,1,1"),
            unipotent_members=(f"(3,1^{2 * n - 3})",),
            isolated_members=(),
            pi=tuple(range(2, n)),
            expected_components=4,
            component_geometry="affine line",
            sheet_smooth=True,
            stratum_id=f"D{n}:Sprime",
            stratum_smooth=True,
        )
    )
    return out


def _e_catalog(rank: int):
    if rank == 6:
        return [
            SheetDescriptor(
                group_type="E",
                rank=6,
                isogeny="sc",
                label="S",
                semisimple_members="torus family p_{2,a}, a^3 != 0,1",
                unipotent_members=("2A_1 (times the centre)",),
                isolated_members=(),
                pi=(2, 3, 4),
                expected_components=2,
                component_geometry="cuspidal curve image x^3=y^2",
                sheet_smooth=True,
                stratum_id="E6:S",
                stratum_smooth=True,
            )
        ]
    if rank == 7:
        return [
            SheetDescriptor(
                group_type="E",
                rank=7,
                isogeny="sc",
                label="S",
                semisimple_members="torus family q_{3,a}, a^2 != 0,1",
                unipotent_members=("3A_1'' (times the centre)",),
                isolated_members=(),
                pi=(1, 2, 3, 4),
                expected_components=8,
                component_geometry="affine line (coordinate a+1/a)",
                sheet_smooth=True,
                stratum_id="E7:S",
                stratum_smooth=True,
            )
        ]
    return []


class RootDatumOnly(ValueError):
    """E-type slice elements exist only at the root-datum level here."""


def slice_representative(descriptor: SheetDescriptor, field=None):
    """(wdot_S, family schema) for a classical descriptor.

    wdot_S is the displayed monomial matrix, checked to preserve the tagged
    form and decode to w_S; the schema names the free parameters and their
    domains.  E-type requests raise RootDatumOnly.
    """
    from .families import build_family, E6Family, E7Family
    from .fields import QQ

    if field is None:
        field = QQ
    fam = build_family(descriptor)
    if isinstance(fam, (E6Family, E7Family)):
        raise RootDatumOnly(
            f"E{descriptor.rank} slice elements are recorded at the "
            "root-datum level only; request the tuple family instead")
    wdot = fam.representative(field)
    if not fam.ctx.in_group(field, wdot):
        raise AssertionError("representative escaped the tagged group")
    schema = _family_schema(descriptor)
    return wdot, schema


def _family_schema(d: SheetDescriptor) -> str:
    n = d.rank
    if d.group_type == "B" and d.label == "S":
        return (f"E in {{+-1}}^{n}; v in k^{n}; Q unipotent upper "
                f"triangular; M = -(1/2) v v^T + A with A skew")
    if d.group_type == "C" and d.label == "S2":
        return (f"E in {{+-1}}^{n}; V unipotent upper triangular; "
                "X symmetric")
    if d.group_type == "D" and d.label in ("S", "thetaS"):
        return (f"signs e in {{+-1}}^{n // 2}; x in k^{n // 2} "
                "(D = diag(-e_b x_b I_2))")
    if d.group_type == "D" and d.label in ("R", "thetaR"):
        return (f"signs e in {{+-1}}^{(n - 1) // 2}; "
                f"x in k^{(n - 1) // 2}; zeta in k^*")
    if d.group_type == "A":
        m = int(d.label.split("_")[1])
        return (f"a in (k^*)^{m}; b in k^*; zeta in k^{m}")
    return ("eps, eta in {+-1}; c in k^*; one coefficient per negated "
            "positive root")


def catalog_table(group_type: str, rank: int) -> str:
    """Plain structured-text report: one row per sheet."""
    from .rootsys import minus_one_rank

    rows = [f"{group_type}{rank} sheets of spherical conjugacy classes"]
    header = (f"{'sheet':10s} {'Pi':18s} {'l(w_S)':>7s} {'rk(1-w_S)':>10s} "
              f"{'components':>11s} {'sheet':>6s} {'stratum':>8s}")
    rows.append(header)
    for d in sheet_catalog(group_type, rank):
        w = d.w_S()
        pi = ",".join(str(i + 1) for i in d.pi) or "-"
        rows.append(
            f"{d.label:10s} {pi:18s} {w.length():7d} "
            f"{minus_one_rank(w):10d} {d.expected_components:11d} "
            f"{'smooth' if d.sheet_smooth else 'sing':>6s} "
            f"{'smooth' if d.stratum_smooth else 'sing':>8s}")
        members = list(d.unipotent_members) + list(d.isolated_members)
        rows.append(f"  classes: {d.semisimple_members}; " +
                    "; ".join(members))
    return "\n".join(rows)


@dataclass(frozen=True)
class SmoothnessVerdict:
    smooth: bool
    reason: str
    witness: Optional[str] = None


def all_stratum_ids(group_type: str, rank: int) -> list[str]:
    return sorted({d.stratum_id for d in sheet_catalog(group_type, rank)})


def smoothness_verdict(group_type: str, rank: int, stratum_id: str) -> SmoothnessVerdict:
    """Smooth/singular verdict for a stratum of spherical classes.

    Sheets themselves are always smooth; only two stratum families are not.
    """
    group_type = group_type.upper()
    if group_type == "C" and rank == 2:
        # same group as B_2 under the exceptional isogeny
        return SmoothnessVerdict(
            smooth=False,
            reason=(
                "stratum of the unipotent class (2^2); equivalently the B_2 "
                "stratum of (3,1^2)"),
            witness="shared class of S and S' under the B2=C2 identification",
        )
    descriptors = sheet_catalog(group_type, rank)
    matching = [d for d in descriptors if d.stratum_id == stratum_id]
    if not matching:
        raise CatalogError(f"unknown stratum {stratum_id} for {group_type}{rank}")
    d = matching[0]
    if d.stratum_smooth:
        return SmoothnessVerdict(True, "all sheets in the stratum are smooth "
                                       "and pairwise disjoint")
    if group_type == "B" and rank == 2:
        return SmoothnessVerdict(
            False,
            "S and S' intersect in the unipotent class (3,1^2)",
            witness="(3,1^2), equivalently (2^2) in the C_2 picture",
        )
    if group_type == "D":
        n = rank
        return SmoothnessVerdict(
            False,
            "R and theta(R) intersect in the sign-twisted unipotent classes",
            witness=f"+-(2^{n - 1},1^2) shared by R and theta(R)",
        )
    raise CatalogError(f"no verdict rule for {stratum_id}")


# -- spherical-class marking for the oracle groups --------------------------

@dataclass(frozen=True)
class SphericalTag:
    tag: str
    dim: int
    sheet: Optional[str]          # catalog sheet label when the class sits in one
    w_class: Optional[str]        # "w0" | "long-root-reflection" | "identity"


def _is_scalar(field, g):
    n = len(g)
    z = g[0][0]
    return all(g[i][j] == (z if i == j else field.zero)
               for i in range(n) for j in range(n))


def _rank_shift(field, g, c, power=1):
    m = scalar_shift(field, g, c)
    return mat_rank(field, mat_pow(field, m, power))


def classify_spherical(ctx: GroupContext, field, g) -> Optional[SphericalTag]:
    """Spherical marking of a conjugacy class member, by exact invariants.

    Returns None for non-spherical classes.  Only the oracle groups
    (SL2, SL3, Sp4, SO5) are catalogued.
    """
    key = (ctx.label, ctx.rank)
    if key == ("SL", 1):
        return _classify_sl2(field, g)
    if key == ("SL", 2):
        return _classify_sl3(field, g)
    if key == ("Sp", 2):
        return _classify_sp4(ctx, field, g)
    if key == ("SO-odd", 2):
        return _classify_so5(ctx, field, g)
    raise CatalogError(f"no spherical marking for {ctx.label} rank {ctx.rank}")


def _classify_sl2(field, g):
    if _is_scalar(field, g):
        return SphericalTag("central", 0, None, "identity")
    for z in (field.one, field.neg(field.one)):
        if _rank_shift(field, g, z) == 1 and _rank_shift(field, g, z, 2) == 0:
            return SphericalTag("unipotent(2) up to centre", 2, "S_1", "w0")
    return SphericalTag("regular semisimple", 2, "S_1", "w0")


def _classify_sl3(field, g):
    if _is_scalar(field, g):
        return SphericalTag("central", 0, None, "identity")
    for z in field.elements():
        if field.is_zero(z):
            continue
        if _rank_shift(field, g, z) == 1:
            if _rank_shift(field, g, z, 2) == 0:
                return SphericalTag(
                    "unipotent(2,1) up to centre", 4, "S_1", "w0")
            return SphericalTag("semisimple, two eigenvalues", 4, "S_1", "w0")
    # semisimple with minimal polynomial of degree 2
    for a in field.elements():
        if field.is_zero(a):
            continue
        for b in field.elements():
            if field.is_zero(b) or b == a:
                continue
            prod = mat_mul(field, scalar_shift(field, g, a),
                           scalar_shift(field, g, b))
            if all(field.is_zero(x) for row in prod for x in row):
                return SphericalTag(
                    "semisimple, two eigenvalues", 4, "S_1", "w0")
    return None


def _min_quadratic_mu(ctx, field, g):
    """mu with g + g^{-1} = mu * I, if it exists."""
    from .linalg import inverse

    try:
        ginv = inverse(field, g)
    except ZeroDivisionError:
        return None
    n = len(g)
    s = [[field.add(g[i][j], ginv[i][j]) for j in range(n)] for i in range(n)]
    mu = s[0][0]
    if all(s[i][j] == (mu if i == j else field.zero)
           for i in range(n) for j in range(n)):
        return mu
    return None


def _classify_sp4(ctx, field, g):
    one, none_ = field.one, field.neg(field.one)
    if _is_scalar(field, g):
        return SphericalTag("central", 0, None, "identity")
    for z in (one, none_):
        r1 = _rank_shift(field, g, z)
        r2 = _rank_shift(field, g, z, 2)
        if r1 == 1 and r2 == 0:
            return SphericalTag("transvection (2,1^2) up to centre", 4, None,
                                "long-root-reflection")
        if r1 == 2 and r2 == 0:
            return SphericalTag("unipotent (2^2) up to centre", 6, "B2-sheet",
                                "w0")
    gsq = mat_mul(field, g, g)
    if _is_scalar(field, gsq) and gsq[0][0] == one:
        return SphericalTag("involution diag(-1,-1,1,1)", 4, None, None)
    mu = _min_quadratic_mu(ctx, field, g)
    if mu is not None and mu != field.of(2) and mu != field.of(-2):
        return SphericalTag("semisimple (l,l,1/l,1/l)", 6, "B2-sheet", "w0")
    # semisimple (1,1,l,1/l) up to the centre:
    # (g -+ 1)(g^2 - mu g + 1) = 0 with mu != +-2
    for h in (g, tuple(tuple(field.neg(x) for x in row) for row in g)):
        mu = _solve_cubic_mu(field, h)
        if mu is not None and mu != field.of(2) and mu != field.of(-2):
            return SphericalTag("semisimple (1,1,l,1/l) up to centre", 6,
                                "B2-sheet", "w0")
    # mixed: g^2 a transvection and charpoly (x^2-1)^2
    hr1 = _rank_shift(field, gsq, one)
    hr2 = _rank_shift(field, gsq, one, 2)
    if hr1 == 1 and hr2 == 0:
        return SphericalTag("mixed sigma * x_beta(1) up to centre", 6,
                            "B2-sheet", "w0")
    return None


def _solve_cubic_mu(field, g):
    """mu with (g - 1)(g^2 - mu*g + 1) = 0, or None."""
    n = len(g)
    k = scalar_shift(field, g, field.one)
    gsq = mat_mul(field, g, g)
    lhs = mat_mul(field, k, scalar_shift(field, gsq, field.neg(field.one)))
    # lhs must equal mu * k * g
    kg = mat_mul(field, k, g)
    mu = None
    for i in range(n):
        for j in range(n):
            if not field.is_zero(kg[i][j]):
                mu = field.div(lhs[i][j], kg[i][j])
                break
        if mu is not None:
            break
    if mu is None:
        return None
    target = tuple(tuple(field.mul(mu, x) for x in row) for row in kg)
    return mu if lhs == target else None


def _classify_so5(ctx, field, g):
    one = field.one
    if _is_scalar(field, g):
        return SphericalTag("identity", 0, None, "identity")
    r1 = _rank_shift(field, g, one)
    r1_2 = _rank_shift(field, g, one, 2)
    r1_3 = _rank_shift(field, g, one, 3)
    if r1 == 2 and r1_2 == 0:
        return SphericalTag("unipotent (2^2,1)", 4, None,
                            "long-root-reflection")
    if r1 == 2 and r1_2 == 1 and r1_3 == 0:
        return SphericalTag("unipotent (3,1^2)", 6, "S and Sprime", "w0")
    gsq = mat_mul(field, g, g)
    if _is_scalar(field, gsq) and gsq[0][0] == one:
        if r1 == 4:
            return SphericalTag("involution rho (1,-1^4)", 4, None, None)
        if r1 == 2:
            return SphericalTag("involution (1^3,-1^2)", 6, "Sprime", "w0")
        return None
    mu = _solve_cubic_mu(field, g)
    if mu is not None and mu != field.of(2) and mu != field.of(-2):
        # semisimple iff the minimal polynomial is (x-1)(x^2-mu x+1)
        if r1 == 4:
            return SphericalTag("semisimple (1,l^2,1/l^2)", 6, "S", "w0")
        if r1 == 2:
            return SphericalTag("semisimple (1^3,l,1/l)", 6, "Sprime", "w0")
        return None
    hr1 = _rank_shift(field, gsq, one)
    hr2 = _rank_shift(field, gsq, one, 2)
    if r1 == 4 and hr1 == 2 and hr2 == 0:
        return SphericalTag("mixed rho * (2^2)", 6, "S", "w0")
    return None


def expected_w_element(system: RootSystem, w_class: str) -> WeylElement:
    """Concrete Weyl element for a marking's expected-w description."""
    if w_class == "identity":
        return system.identity_element()
    if w_class == "w0":
        return longest_element(system, range(system.rank))
    if w_class == "long-root-reflection":
        return system.reflection(system.highest_root())
    raise CatalogError(f"unknown w-class {w_class!r}")
