"""HTTP service wrapping the library.

Run with:  uvicorn detlevel.service:app

Every endpoint is a thin translation layer: pydantic models in,
library calls, pydantic models out.  Domain validation failures
(malformed matrices, bad parameters) surface as HTTP 400.
"""

from __future__ import annotations

from typing import Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .analysis import analyze_matrix, report_to_dict, run_conjecture, summary_to_dict
from .degree_matrix import DegreeMatrixError, reduce_zeros, validate
from .hseries import tau
from .level import socle_shifts
from .matroid import delta0, delta0_groups, delta0_h, represent_delta0
from .pure_osequence import SearchLimits, f_vector, gamma_from_matrix

app = FastAPI(
    title="detlevel",
    version=__version__,
    description="h-vectors of standard determinantal schemes: levelness, "
    "pure O-sequences, witnesses, and counterexample sweeps.",
)


class MatrixRequest(BaseModel):
    rows: list[list[int]]


class AnalyzeRequest(MatrixRequest):
    budget_nodes: Optional[int] = Field(default=10_000_000, description="None disables")
    budget_seconds: Optional[float] = Field(default=60.0, description="None disables")


class PurityModel(BaseModel):
    status: str
    rule: str
    witness: Optional[list[list[int]]] = None
    index: Optional[int] = None
    nodes: int = 0


class AnalyzeResponse(BaseModel):
    matrix: list[list[int]]
    t: int
    c: int
    zero_free: bool
    reduced_matrix: Optional[list[list[int]]] = None
    r: int
    equal_rows: bool
    h: list[int]
    tau: int
    last_entry: int
    socle_shifts: list[int]
    level: bool
    socle_degree: Optional[int] = None
    cm_type: Optional[int] = None
    log_concave: bool
    flawless: bool
    flawless_violation: Optional[int] = None
    osequence: bool
    purity: PurityModel


class GammaResponse(BaseModel):
    matrix: list[list[int]]
    nvars: int
    degree: int
    generator_count: int
    generators: list[list[int]]
    f_vector: list[int]


class MatroidRequest(BaseModel):
    c: int
    m: Optional[int] = Field(default=None, description="defaults to len(sizes)")
    sizes: list[int]
    represent: bool = False


class MatroidResponse(BaseModel):
    c: int
    m: int
    sizes: list[int]
    groups: list[list[int]]
    n: int
    facet_count: int
    facets: list[list[int]]
    h: list[int]
    representation: Optional[list[list[int]]] = None


class LevelResponse(BaseModel):
    matrix: list[list[int]]
    reduced_matrix: Optional[list[list[int]]] = None
    socle_shifts: list[int]
    level: bool
    socle_degree: Optional[int] = None
    cm_type: Optional[int] = None


class ConjectureRequest(BaseModel):
    t: int = Field(ge=1)
    c: int = Field(ge=2, description="the conjecture concerns codimension >= 2")
    max_entry: int = Field(ge=1)
    zero_free: bool = True
    budget_nodes: Optional[int] = 10_000_000
    budget_seconds: Optional[float] = 60.0
    threads: int = Field(default=1, ge=1)
    include_reports: bool = False


class ConjectureResponse(BaseModel):
    t: int
    c: int
    max_entry: int
    zero_free: bool
    total: int
    pure: int
    not_pure: int
    inconclusive: int
    equal_rows_matrices: int
    rule_counts: dict[str, int]
    contradictions: list[list[list[int]]]
    inconclusive_matrices: list[list[list[int]]]
    reports: Optional[list[AnalyzeResponse]] = None


def _matrix(rows: list[list[int]]):
    try:
        return validate(rows)
    except DegreeMatrixError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def _limits(nodes: Optional[int], seconds: Optional[float]) -> SearchLimits:
    return SearchLimits(max_nodes=nodes, max_seconds=seconds)


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/analyze", response_model=AnalyzeResponse)
def analyze(req: AnalyzeRequest) -> AnalyzeResponse:
    A = _matrix(req.rows)
    report = analyze_matrix(A, _limits(req.budget_nodes, req.budget_seconds))
    return AnalyzeResponse(**report_to_dict(report))


@app.post("/conjecture", response_model=ConjectureResponse)
def conjecture(req: ConjectureRequest) -> ConjectureResponse:
    try:
        summary = run_conjecture(
            t=req.t,
            c=req.c,
            max_entry=req.max_entry,
            zero_free=req.zero_free,
            limits=_limits(req.budget_nodes, req.budget_seconds),
            threads=req.threads,
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return ConjectureResponse(**summary_to_dict(summary, include_reports=req.include_reports))


@app.post("/gamma", response_model=GammaResponse)
def gamma(req: MatrixRequest) -> GammaResponse:
    A = _matrix(req.rows)
    try:
        ideal = gamma_from_matrix(A)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return GammaResponse(
        matrix=[list(r) for r in A.entries],
        nvars=ideal.nvars,
        degree=tau(A),
        generator_count=len(ideal.generators),
        generators=[list(g) for g in ideal.generators],
        f_vector=list(f_vector(ideal)),
    )


@app.post("/matroid", response_model=MatroidResponse)
def matroid(req: MatroidRequest) -> MatroidResponse:
    m = req.m if req.m is not None else len(req.sizes)
    try:
        cx = delta0(req.c, m, req.sizes)
        h = delta0_h(req.c, m, req.sizes)
        representation = (
            [list(r) for r in represent_delta0(req.c, m, req.sizes)]
            if req.represent
            else None
        )
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc
    return MatroidResponse(
        c=req.c,
        m=m,
        sizes=list(req.sizes),
        groups=[list(g) for g in delta0_groups(req.sizes)],
        n=sum(req.sizes),
        facet_count=len(cx.facets),
        facets=sorted(sorted(F) for F in cx.facets),
        h=list(h),
        representation=representation,
    )


@app.post("/level", response_model=LevelResponse)
def level(req: MatrixRequest) -> LevelResponse:
    A = _matrix(req.rows)
    B = reduce_zeros(A)
    shifts = socle_shifts(B)
    is_lvl = shifts.all_equal
    return LevelResponse(
        matrix=[list(r) for r in A.entries],
        reduced_matrix=None if B is A else [list(r) for r in B.entries],
        socle_shifts=list(shifts.shifts),
        level=is_lvl,
        socle_degree=tau(B) if is_lvl else None,
        cm_type=shifts.rank if is_lvl else None,
    )
