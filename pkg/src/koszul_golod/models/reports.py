"""Pydantic report models: every verdict the engine emits, with its bounds."""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from .enums import Branch, CandidateSource, CertificateStatus, KoszulVerdict
from .inputs import Bounds

SCHEMA_VERSION = "1.0"


class _Report(BaseModel):
    model_config = ConfigDict(validate_assignment=True, extra="forbid")


# ============================================================================
# Betti tables
# ============================================================================


class BettiTable(_Report):
    """β_{i,j} = dim Tor_i(M, k)_j for i <= hom and j <= internal; rows are i."""

    hom: int = Field(..., description="Homological bound N")
    internal: int = Field(..., description="Internal bound J")
    rows: List[List[int]] = Field(..., description="rows[i][j] = β_{i,j}")
    complete: bool = Field(default=True, description="Every entry is exact within the bounds")
    label: str = Field(default="Tor^R(k,k)", description="What the table counts")

    @classmethod
    def from_dict(cls, entries: Dict[Tuple[int, int], int], hom: int, internal: int, **kw) -> "BettiTable":
        rows = [[0] * (internal + 1) for _ in range(hom + 1)]
        for (i, j), b in entries.items():
            if i <= hom and j <= internal:
                rows[i][j] = b
        return cls(hom=hom, internal=internal, rows=rows, **kw)

    def get(self, i: int, j: int) -> int:
        if 0 <= i <= self.hom and 0 <= j <= self.internal:
            return self.rows[i][j]
        return 0

    def total(self, i: int) -> int:
        return sum(self.rows[i]) if 0 <= i <= self.hom else 0

    def entries(self) -> Dict[Tuple[int, int], int]:
        return {(i, j): b for i, row in enumerate(self.rows) for j, b in enumerate(row) if b}

    def off_diagonal(self, shift: int = 0) -> List[Tuple[int, int]]:
        """Nonzero (i, j) with i >= 1 and j != i + shift."""
        return sorted((i, j) for (i, j) in self.entries() if i >= 1 and j != i + shift)

    def first_off_diagonal(self, shift: int = 0) -> Optional[Tuple[int, int]]:
        hits = self.off_diagonal(shift)
        return hits[0] if hits else None

    def poincare_text(self) -> str:
        """One-line rendering sum β_{i,j} z^i t^j."""
        pieces = []
        for (i, j), b in sorted(self.entries().items()):
            mono = "*".join(
                p for p in (("z" if i == 1 else f"z^{i}") if i else "", ("t" if j == 1 else f"t^{j}") if j else "") if p
            )
            if not mono:
                pieces.append(str(b))
            else:
                pieces.append(mono if b == 1 else f"{b}*{mono}")
        return " + ".join(pieces) or "0"


# ============================================================================
# Koszul and Golod-ring tests
# ============================================================================


class RouteResult(_Report):
    """One route of a multi-route test. ``verdict`` is None when the route was not run."""

    name: str = Field(..., description="Route name")
    verdict: Optional[bool] = Field(default=None, description="Positive, negative, or not run")
    detail: str = Field(default="", description="Witness or evidence")


class KoszulReport(_Report):
    schema_version: str = Field(default=SCHEMA_VERSION, description="Report schema version")
    bounds: Bounds = Field(..., description="Truncation bounds")
    verdict: KoszulVerdict = Field(..., description="koszul-to-bound or non-koszul")
    summary: str = Field(..., description="Verdict sentence with the bounds inline")
    witness: Optional[str] = Field(default=None, description="First off-diagonal entry or other concrete witness")
    routes: List[RouteResult] = Field(default_factory=list, description="Per-route outcomes")
    routes_agree: bool = Field(default=True, description="All routes that ran gave the same verdict")
    g_quadratic_order: Optional[str] = Field(
        default=None, description="First term order with a quadratic Gröbner basis"
    )
    obstruction_index: Optional[int] = Field(
        default=None, description="First i with a negative coefficient of 1/H(-z)"
    )
    inconsistent: bool = Field(
        default=False, description="A quadratic Gröbner basis exists yet another route found a witness"
    )
    betti: BettiTable = Field(..., description="Betti table of k over R")

    @property
    def is_koszul(self) -> bool:
        return self.verdict == KoszulVerdict.KOSZUL_TO_BOUND


class NuPowerEntry(_Report):
    n: int = Field(..., description="Exponent of m^n")
    vanishes: bool = Field(..., description="ν^R(m^n) = 0 within bounds")
    witness_bidegree: Optional[Tuple[int, int]] = Field(default=None, description="First nonzero bidegree")
    witness: Optional[str] = Field(default=None, description="A cycle of m^(n+1)F with nonzero image")


class NuPowerReport(_Report):
    bounds: Bounds = Field(..., description="Truncation bounds")
    entries: List[NuPowerEntry] = Field(default_factory=list, description="One entry per tested n")
    regularity: Optional[int] = Field(
        default=None,
        description="Least s with ν^R(m^n) = 0 for every tested n >= s (None if the largest n fails)",
    )


class GolodRingReport(_Report):
    schema_version: str = Field(default=SCHEMA_VERSION, description="Report schema version")
    bounds: Bounds = Field(..., description="Truncation bounds")
    nu_route: RouteResult = Field(..., description="ν(mK) = 0")
    serre_route: RouteResult = Field(..., description="Serre equality against P = Q")
    koszul_golod: bool = Field(..., description="ν(mK) = 0: R is a Koszul Golod ring")
    golod: bool = Field(..., description="Serre equality: R is a Golod ring")
    consistent: bool = Field(..., description="ν(mK) = 0 implies the Serre equality")
    serre_inequality_holds: bool = Field(..., description="P^R_k <= Serre bound coefficientwise")
    tor_matches_koszul_homology: bool = Field(
        ..., description="Tor^Q(R,k) from the resolution over Q equals H(K)"
    )
    serre_denominator: str = Field(default="1 - z(P^Q_R(z,t) - 1)", description="Denominator form used")
    tor_table: BettiTable = Field(..., description="Tor^Q(R,k)")


# ============================================================================
# Witnesses
# ============================================================================


class GolodCertificate(_Report):
    schema_version: str = Field(default=SCHEMA_VERSION, description="Report schema version")
    quadrics: List[str] = Field(..., description="f_1..f_d as polynomial text")
    codimension: int = Field(..., description="d")
    regular: bool = Field(..., description="Hilbert-series check of the regular sequence")
    nu_route: RouteResult = Field(..., description="(a) ν(mD) = 0")
    two_linear_route: RouteResult = Field(..., description="(b) Tor^P_i(R,k)_j = 0 unless j = i + 1")
    serre_route: RouteResult = Field(..., description="(c) Serre equality for P -> R")
    serre_compared: int = Field(..., description="Number of coefficients compared")
    serre_inequality_holds: bool = Field(..., description="Serre bound never exceeded")
    consistent: bool = Field(..., description="(a) = (b) and (a) implies (c)")
    status: CertificateStatus = Field(..., description="Overall outcome")
    tor_table: BettiTable = Field(..., description="Tor^P(R,k) from H(D)")
    source: CandidateSource = Field(default=CandidateSource.EXPLICIT, description="Candidate provenance")
    provenance: str = Field(default="", description="Candidate generator detail")
    seed: Optional[int] = Field(default=None, description="Seed of the search")
    bounds: Bounds = Field(..., description="Truncation bounds")

    @property
    def golod(self) -> bool:
        return bool(self.serre_route.verdict)

    @property
    def accepted(self) -> bool:
        return self.status in (CertificateStatus.GOLOD_AND_KOSZUL, CertificateStatus.GOLOD_NOT_KOSZUL)


class AttemptRecord(_Report):
    index: int = Field(..., description="Position in the candidate order")
    source: CandidateSource = Field(..., description="Candidate generator")
    quadrics: List[str] = Field(..., description="Candidate quadrics")
    outcome: str = Field(..., description="Rejection reason or status")


class WitnessSearchResult(_Report):
    schema_version: str = Field(default=SCHEMA_VERSION, description="Report schema version")
    certificate: Optional[GolodCertificate] = Field(default=None, description="First accepted certificate")
    attempts: List[AttemptRecord] = Field(default_factory=list, description="Attempts log")
    exhausted: bool = Field(default=False, description="Budget or candidates ran out")
    budget: int = Field(..., description="Candidates verified at most")
    seed: int = Field(..., description="Seed of the random rung")
    max_codim: int = Field(..., description="Largest codimension tried")
    koszul_hint: Optional[bool] = Field(default=None, description="Koszul verdict used to judge candidates")


# ============================================================================
# Classification
# ============================================================================


class PresentationEcho(_Report):
    field: str = Field(..., description="Coefficient field")
    variables: List[str] = Field(..., description="Variable names")
    relations: List[str] = Field(..., description="Relations as text")


class SocleReport(_Report):
    s: int = Field(..., description="Number of degree-one socle forms removed")
    forms: List[str] = Field(default_factory=list, description="The socle forms")
    reduced: PresentationEcho = Field(..., description="R' after the reduction")


class HilbertReport(_Report):
    series: str = Field(..., description="Exact rational Hilbert series")
    coefficients: List[int] = Field(..., description="h_0..h_J")
    is_artinian: bool = Field(..., description="Hilbert series is a polynomial")


class ExceptionalReport(_Report):
    exceptional: bool = Field(..., description="Series equals (1+2t-2t^3)/(1-t)")
    h_prefix_matches: bool = Field(..., description="h = (1,3,3,1,1,...) up to the bound")
    normal_form: Optional[str] = Field(default=None, description="First matching normal-form family, if any")
    normal_form_matches: List[str] = Field(
        default_factory=list, description="Every matching family; the F_2 families overlap"
    )
    evidence: str = Field(default="", description="Series text and comparison")


class StructureReport(_Report):
    case_id: Optional[str] = Field(default=None, description="Matched structural case")
    coordinates: List[str] = Field(default_factory=list, description="x1..xe in the original variables")
    relations: List[str] = Field(
        default_factory=list, description="Relations rewritten so that x1..xe become the variables"
    )
    params: Dict[str, str] = Field(default_factory=dict, description="Index parameters of the case")
    null_square_form: Optional[str] = Field(default=None, description="x with x^2 = 0 used by the search")
    rank: Optional[int] = Field(default=None, description="rank(x) = dim x R_1")
    subspaces: Dict[str, List[str]] = Field(default_factory=dict, description="V, W and W' = V ∩ W")
    ladder: List[str] = Field(default_factory=list, description="Strategy ladder log")
    tried: int = Field(default=0, description="Assignments checked")


class TheoremChecks(_Report):
    artinian_bounds: Optional[bool] = Field(default=None, description="h_4 = 0 and h_3 <= 1")
    hilbert_trichotomy: Optional[bool] = Field(default=None, description="Series form for dim R_2 <= 2")
    main_theorem: Optional[bool] = Field(
        default=None, description="Koszul iff not exceptional, after the reduction"
    )


class ClassificationReport(_Report):
    schema_version: str = Field(default=SCHEMA_VERSION, description="Report schema version")
    input: PresentationEcho = Field(..., description="Input presentation")
    bounds: Bounds = Field(..., description="Truncation bounds")
    socle: SocleReport = Field(..., description="Trivial fiber reduction")
    branch: Branch = Field(..., description="Pipeline branch")
    hilbert: HilbertReport = Field(..., description="Hilbert data of R'")
    dim_r2: int = Field(..., description="dim R_2 of the input")
    exceptional: Optional[ExceptionalReport] = Field(default=None, description="Exceptional-ring detection")
    structure: Optional[StructureReport] = Field(default=None, description="Structural case match")
    witness: Optional[WitnessSearchResult] = Field(default=None, description="Witness search")
    koszul: Optional[KoszulReport] = Field(default=None, description="Koszul test of the input")
    absolutely_koszul: bool = Field(default=False, description="Koszul and a Golod witness exists")
    checks: TheoremChecks = Field(default_factory=TheoremChecks, description="Theorem-level checks")
    consistent: bool = Field(default=True, description="Report-level invariants hold")
    notes: List[str] = Field(default_factory=list, description="Warnings and remarks")


# ============================================================================
# Corpus
# ============================================================================


class CorpusExpectation(_Report):
    hilbert_prefix: Optional[List[int]] = Field(default=None, description="h_0, h_1, ...")
    koszul: Optional[bool] = Field(default=None, description="Expected Koszul verdict")
    witness_codim_max: Optional[int] = Field(default=None, description="Expected witness codimension bound")
    case_id: Optional[str] = Field(default=None, description="Expected structural case")
    exceptional: Optional[bool] = Field(default=None, description="Expected exceptional flag")
    branch: Optional[Branch] = Field(default=None, description="Expected branch")


class CorpusEntry(_Report):
    name: str = Field(..., description="Unique entry name", min_length=1)
    presentation: str = Field(..., description="Presentation file body")
    expected: CorpusExpectation = Field(default_factory=CorpusExpectation, description="Expectations")
    provenance: str = Field(..., description="Where the expectations come from")
    bounds: Optional[Bounds] = Field(default=None, description="Per-entry truncation bounds")
    variant_of: Optional[str] = Field(default=None, description="Base entry of a trivial fiber variant")


class CorpusRow(_Report):
    name: str = Field(..., description="Entry name")
    passed: bool = Field(..., description="All expectations met")
    mismatches: List[str] = Field(default_factory=list, description="Fields that did not match")
    detail: str = Field(default="", description="Short summary of the classification")


class CorpusReport(_Report):
    schema_version: str = Field(default=SCHEMA_VERSION, description="Report schema version")
    rows: List[CorpusRow] = Field(default_factory=list, description="One row per entry")
    transfer: List[str] = Field(default_factory=list, description="Trivial-fiber transfer mismatches")

    @property
    def passed(self) -> int:
        return sum(1 for r in self.rows if r.passed)

    @property
    def failed(self) -> int:
        return len(self.rows) - self.passed
