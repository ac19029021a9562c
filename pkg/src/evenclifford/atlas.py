"""Catalog of the maximal-symmetry model spaces, with cross-checks.

Every rank admits the flat model; the curved models exist for specific
ranks and multiplicities (quaternionic projective/hyperbolic families for
rank 3, products of those for rank 4, Grassmannian families for ranks
5/6/8, and four exceptional quotients at ranks 9/10/12/16).  No dimension
stored here is trusted: `cross_check` validates each entry against the
closed-form bound machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .bounds import binom2, d_max
from .clifford import irrep_info
from .structures import Multiplicities

FLAT = "flat"
COMPACT = "compact"
NONCOMPACT = "noncompact"


def dim_so(n: int) -> int:
    return binom2(n)


def dim_su(n: int) -> int:
    return n * n - 1 if n >= 1 else 0


def dim_sp(n: int) -> int:
    return n * (2 * n + 1) if n >= 0 else 0


# validated (not trusted) by cross_check against the bound formulas
EXCEPTIONAL_DIMS = {"F4": 52, "E6": 78, "E7": 133, "E8": 248}


@dataclass(frozen=True)
class SymmetricSpaceModel:
    r: int
    name: str
    family: str
    mult: Multiplicities
    dim_M: int
    dim_G: int
    factors: Tuple[str, ...] = ()
    mixed_product: bool = False

    def to_json_dict(self) -> dict:
        out = {
            "rank": self.r,
            "name": self.name,
            "family": self.family,
            "mult": list(self.mult.values),
            "dim_M": self.dim_M,
            "dim_G": self.dim_G,
        }
        if self.factors:
            out["factors"] = list(self.factors)
            out["mixed_product"] = self.mixed_product
        return out


def _flat_name(r: int, mult: Multiplicities) -> str:
    if mult.is_split:
        return f"(Delta{r}+)^x{mult.m1} (+) (Delta{r}-)^x{mult.m2}"
    return f"(Delta{r})^x{mult.m}"


def _flat_dim_G(r: int, mult: Multiplicities) -> int:
    """Automorphism dimension of the flat model: translations plus the
    centralizer plus the span of the bivector images.  Equals d_max
    except in the degenerate rank-4 single-half case, where the image
    spans only 3 dimensions."""
    from .normalizers import expected_dims

    n = irrep_info(r).dim * mult.total
    span = 3 if (r == 4 and mult.is_split and 0 in mult.values) else binom2(r)
    return n + expected_dims(r, mult).centralizer + span


def _r3_factor_models(k: int) -> List[Tuple[str, str, int]]:
    """(name, family, dim_G) options for one quaternionic factor of
    dimension 4k: flat, compact, noncompact."""
    flat_g = d_max(3, k)
    return [
        (f"(Delta3)^x{k}", FLAT, flat_g),
        (f"Sp({k + 1})/(Sp({k})xSp(1))", COMPACT, dim_sp(k + 1)),
        (f"Sp({k},1)/(Sp({k})xSp(1))", NONCOMPACT, dim_sp(k + 1)),
    ]


def models_for(r: int, mult) -> List[SymmetricSpaceModel]:
    """The flat model for (r, mult), plus every curved catalog entry whose
    rank and multiplicities match.  Compact/noncompact entries come in
    dual pairs of equal dimensions."""
    if r < 3:
        raise ValueError("models require rank >= 3")
    mult = Multiplicities.coerce(mult, r)
    d = irrep_info(r).dim
    n = d * mult.total
    out: List[SymmetricSpaceModel] = [
        SymmetricSpaceModel(
            r=r,
            name=_flat_name(r, mult),
            family=FLAT,
            mult=mult,
            dim_M=n,
            dim_G=_flat_dim_G(r, mult),
        )
    ]

    def dual(name_c: str, name_n: str, dim_g: int) -> None:
        out.append(
            SymmetricSpaceModel(r, name_c, COMPACT, mult, n, dim_g)
        )
        out.append(
            SymmetricSpaceModel(r, name_n, NONCOMPACT, mult, n, dim_g)
        )

    if r == 3:
        k = mult.m
        dual(
            f"Sp({k + 1})/(Sp({k})xSp(1))",
            f"Sp({k},1)/(Sp({k})xSp(1))",
            dim_sp(k + 1),
        )
    elif r == 4:
        if mult.m1 >= 1 and mult.m2 >= 1:
            options_1 = _r3_factor_models(mult.m1)
            options_2 = _r3_factor_models(mult.m2)
            for name1, fam1, g1 in options_1:
                for name2, fam2, g2 in options_2:
                    if fam1 == FLAT and fam2 == FLAT:
                        continue  # the global flat model, already listed
                    mixed = (fam1 == FLAT) != (fam2 == FLAT)
                    family = NONCOMPACT if NONCOMPACT in (fam1, fam2) else COMPACT
                    if fam1 == FLAT or fam2 == FLAT:
                        family = "mixed"
                    out.append(
                        SymmetricSpaceModel(
                            r=4,
                            name=f"{name1} x {name2}",
                            family=family,
                            mult=mult,
                            dim_M=n,
                            dim_G=g1 + g2,
                            factors=(name1, name2),
                            mixed_product=mixed,
                        )
                    )
    elif r == 5:
        k = mult.m
        dual(
            f"Sp({k + 2})/(Sp({k})xSp(2))",
            f"Sp({k},2)/(Sp({k})xSp(2))",
            dim_sp(k + 2),
        )
    elif r == 6:
        k = mult.m
        dual(
            f"SU({k + 4})/S(U({k})xU(4))",
            f"SU({k},4)/S(U({k})xU(4))",
            dim_su(k + 4),
        )
    elif r == 8:
        if 0 in mult.values and mult.total >= 1:
            k = mult.total
            dual(
                f"SO({k + 8})/(SO({k})xSO(8))",
                f"SO({k},8)/(SO({k})xSO(8))",
                dim_so(k + 8),
            )
    elif r == 9 and mult.values == (1,):
        dual("F4/Spin(9)", "F4^-20/Spin(9)", EXCEPTIONAL_DIMS["F4"])
    elif r == 10 and mult.values == (1,):
        dual(
            "E6/(Spin(10).U(1))",
            "E6^-14/(Spin(10).U(1))",
            EXCEPTIONAL_DIMS["E6"],
        )
    elif r == 12 and mult.is_split and sorted(mult.values) == [0, 1]:
        dual(
            "E7/(Spin(12).SU(2))",
            "E7^-5/(Spin(12).SU(2))",
            EXCEPTIONAL_DIMS["E7"],
        )
    elif r == 16 and mult.is_split and sorted(mult.values) == [0, 1]:
        dual("E8/Spin+(16)", "E8^8/Spin+(16)", EXCEPTIONAL_DIMS["E8"])
    return out


@dataclass(frozen=True)
class ModelCheck:
    name: str
    passed: bool
    detail: str = ""


def cross_check(model: SymmetricSpaceModel) -> List[ModelCheck]:
    """Validate a catalog entry against the bound machinery: dim_M = N,
    dim_G = d_max for curved models (with factorwise additivity for the
    rank-4 products), and the flat formula for flat models."""
    checks: List[ModelCheck] = []
    n = irrep_info(model.r).dim * model.mult.total
    checks.append(
        ModelCheck(
            "dim_M",
            model.dim_M == n,
            f"dim_M {model.dim_M} vs N {n}" if model.dim_M != n else "",
        )
    )
    if model.family == FLAT:
        want = _flat_dim_G(model.r, model.mult)
        checks.append(
            ModelCheck(
                "dim_G",
                model.dim_G == want,
                "" if model.dim_G == want else f"dim_G {model.dim_G} vs {want}",
            )
        )
        return checks
    want = d_max(model.r, model.mult)
    checks.append(
        ModelCheck(
            "dim_G_equals_d_max",
            model.dim_G == want,
            "" if model.dim_G == want else f"dim_G {model.dim_G} vs d_max {want}",
        )
    )
    if model.r == 4 and model.factors:
        add = d_max(3, model.mult.m1) + d_max(3, model.mult.m2)
        checks.append(
            ModelCheck(
                "factor_additivity",
                model.dim_G == add,
                "" if model.dim_G == add
                else f"dim_G {model.dim_G} vs factor sum {add}",
            )
        )
    return checks


# ----------------------------------------------------------------------
# catalog export

_SYMBOLIC_ROWS: List[Tuple[str, List[str]]] = [
    ("any", ["(Delta_r)^xm  or  (Delta_r+)^xm1 (+) (Delta_r-)^xm2"]),
    ("3", ["Sp(k+1)/(Sp(k)xSp(1))", "Sp(k,1)/(Sp(k)xSp(1))"]),
    ("4", ["M1 x M2 with Mi in the rank-3 list (flat factors flagged)"]),
    ("5", ["Sp(k+2)/(Sp(k)xSp(2))", "Sp(k,2)/(Sp(k)xSp(2))"]),
    ("6", ["SU(k+4)/S(U(k)xU(4))", "SU(k,4)/S(U(k)xU(4))"]),
    ("8", ["SO(k+8)/(SO(k)xSO(8))", "SO(k,8)/(SO(k)xSO(8))"]),
    ("9", ["F4/Spin(9)", "F4^-20/Spin(9)"]),
    ("10", ["E6/(Spin(10).U(1))", "E6^-14/(Spin(10).U(1))"]),
    ("12", ["E7/(Spin(12).SU(2))", "E7^-5/(Spin(12).SU(2))"]),
    ("16", ["E8/Spin+(16)", "E8^8/Spin+(16)"]),
]


def symbolic_catalog() -> List[dict]:
    return [{"rank": r, "models": list(models)} for r, models in _SYMBOLIC_ROWS]


def symbolic_catalog_text() -> str:
    width = max(len(r) for r, _ in _SYMBOLIC_ROWS) + 2
    lines = [f"{'r':<{width}}M"]
    lines.append("-" * 72)
    for r, models in _SYMBOLIC_ROWS:
        lines.append(f"{r:<{width}}{',  '.join(models)}")
    return "\n".join(lines)


def models_text(models: List[SymmetricSpaceModel]) -> str:
    lines = [f"{'family':<12}{'dim_M':>6}{'dim_G':>7}  name"]
    lines.append("-" * 72)
    for m in models:
        lines.append(f"{m.family:<12}{m.dim_M:>6}{m.dim_G:>7}  {m.name}")
    return "\n".join(lines)
