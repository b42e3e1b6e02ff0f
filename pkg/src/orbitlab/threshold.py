"""Degree-by-degree identification of generator characters.

The combinatorial core: dimensions of covariant spaces, the threshold
character that detects forced ideal elements, the syzygy-free upper
bound for the part of the ideal generated in lower degrees, and the
induced lower bound for new generators.  Running the pipeline over a
table of generator dimensions resolves the generator character in each
degree or reports that it cannot be seen combinatorially.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import comb
from typing import Mapping

from .errors import ConfigError, MissingBetti
from .repring import Character, partition_count, require_effective, symmetric_power

__all__ = [
    "covariant_dimension",
    "threshold_character",
    "generated_upper_bound",
    "forced_generator_bound",
    "PipelineConfig",
    "DegreeRecord",
    "PipelineReport",
    "run_pipeline",
    "mrc_ideal_dimension",
    "mrc_expected_generators",
    "VISIBLE",
    "INVISIBLE_RESOLVED",
    "INVISIBLE_UNRESOLVED",
    "NO_GENERATORS",
]

VISIBLE = "VISIBLE"
INVISIBLE_RESOLVED = "INVISIBLE_RESOLVED"
INVISIBLE_UNRESOLVED = "INVISIBLE_UNRESOLVED"
NO_GENERATORS = "NO_GENERATORS"


def covariant_dimension(d: int, m: int, q: int) -> int:
    """Dimension of the space of degree-m, order-q covariants of a d-ic.

    Equals the multiplicity of s_q in Sym^m(S_d), computed as a
    difference of bounded partition counts; zero when q and m*d have
    different parities or q is out of range.
    """
    if q < 0 or q > m * d or (m * d - q) % 2 != 0:
        return 0
    half = (m * d - q) // 2
    return partition_count(half, m, d) - partition_count(half - 1, m, d)


def threshold_character(d: int, m: int) -> Character:
    """Combinatorial floor for the ideal in degree m.

    Whenever the covariant space of order q has dimension above q + 1,
    the surplus must consist of covariants vanishing at a general form;
    the threshold character collects that surplus over all q.
    """
    out = {}
    for q in range(m * d, -1, -1):
        surplus = covariant_dimension(d, m, q) - (q + 1)
        if surplus > 0:
            out[q] = surplus
    return Character(out)


def generated_upper_bound(
    d: int,
    m: int,
    resolved: Mapping[int, Character],
    suppressed: frozenset[int] | set[int] = frozenset(),
) -> Character:
    """Character of generators-so-far times the ring in degree m.

    Sums resolved[j] * Sym^(m-j)(S_d) over lower degrees j, ignoring
    all syzygies, so it bounds the generated part from above.  Degrees
    listed in suppressed are omitted from the sum.
    """
    total = Character.zero()
    for j, ch in resolved.items():
        if j >= m or j in suppressed or not ch:
            continue
        if ch is None:
            raise MissingBetti(f"generator character in degree {j} is unresolved")
        total = total + ch * symmetric_power(m - j, d)
    return total


def forced_generator_bound(
    d: int,
    m: int,
    resolved: Mapping[int, Character],
    suppressed: frozenset[int] | set[int] = frozenset(),
) -> Character:
    """Lower bound for the new-generator character in degree m.

    The part of the threshold character sticking out above the
    generated-so-far bound: sup(upper, threshold) - upper.  Always
    effective.
    """
    upper = generated_upper_bound(d, m, resolved, suppressed)
    return upper.sup(threshold_character(d, m)) - upper


@dataclass(frozen=True)
class PipelineConfig:
    """Inputs for a pipeline run over one order d."""

    d: int
    betas: dict[int, int]
    suppressed: frozenset[int] = frozenset()
    corrections: dict[int, Character] = field(default_factory=dict)
    max_degree: int | None = None

    def __post_init__(self):
        if self.d < 4:
            raise ConfigError("pipeline needs order d >= 4")
        for m, b in self.betas.items():
            if b < 0:
                raise ConfigError(f"negative generator dimension at degree {m}")
        extra = set(self.suppressed) - set(self.betas)
        if extra:
            raise ConfigError(f"suppressed degrees {sorted(extra)} have no beta entry")
        for m, ch in self.corrections.items():
            if not isinstance(ch, Character) or not ch.is_effective():
                raise ConfigError(f"correction at degree {m} must be effective")
        if self.max_degree is None:
            top = max((m for m, b in self.betas.items() if b), default=0)
            object.__setattr__(self, "max_degree", top)

    @classmethod
    def from_json(cls, doc: dict | str) -> "PipelineConfig":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(
            d=int(doc["d"]),
            betas={int(k): int(v) for k, v in doc.get("betas", {}).items()},
            suppressed=frozenset(int(x) for x in doc.get("suppressed", [])),
            corrections={
                int(k): Character.from_pairs(v)
                for k, v in doc.get("corrections", {}).items()
            },
            max_degree=doc.get("max_degree"),
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "betas": {str(m): b for m, b in sorted(self.betas.items())},
            "suppressed": sorted(self.suppressed),
            "corrections": {
                str(m): ch.to_pairs() for m, ch in sorted(self.corrections.items())
            },
            "max_degree": self.max_degree,
        }


@dataclass(frozen=True)
class DegreeRecord:
    """Everything the pipeline derived for one degree."""

    m: int
    beta: int
    zeta_row: dict[int, int]
    threshold: Character
    generated_bound: Character
    forced_bound: Character
    status: str
    resolved: Character | None
    gap: int

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "beta": self.beta,
            "zeta_row": {str(q): z for q, z in sorted(self.zeta_row.items())},
            "threshold": self.threshold.to_pairs(),
            "generated_bound": self.generated_bound.to_pairs(),
            "forced_bound": self.forced_bound.to_pairs(),
            "status": self.status,
            "resolved": None if self.resolved is None else self.resolved.to_pairs(),
            "gap": self.gap,
        }


@dataclass(frozen=True)
class PipelineReport:
    d: int
    records: list[DegreeRecord]
    halted: bool

    def record(self, m: int) -> DegreeRecord:
        for rec in self.records:
            if rec.m == m:
                return rec
        raise KeyError(f"degree {m} not in report")

    def resolved_characters(self) -> dict[int, Character]:
        return {
            rec.m: rec.resolved
            for rec in self.records
            if rec.resolved is not None and rec.resolved
        }

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "halted": self.halted,
            "degrees": [rec.to_json() for rec in self.records],
        }

    def render_text(self) -> str:
        lines = [f"order d = {self.d}", f"{'m':>3}  {'beta':>5}  {'status':<21} character"]
        for rec in self.records:
            shown = "" if rec.resolved is None else str(rec.resolved)
            lines.append(f"{rec.m:>3}  {rec.beta:>5}  {rec.status:<21} {shown}")
        if self.halted:
            lines.append("pipeline halted: unresolved invisible generators")
        return "\n".join(lines)


def run_pipeline(config: PipelineConfig) -> PipelineReport:
    """Resolve generator characters degree by degree.

    A degree whose forced lower bound has the right dimension is
    VISIBLE; otherwise a supplied correction of the missing dimension
    resolves it as INVISIBLE_RESOLVED, and without one the pipeline
    records the gap and halts.  Suppressed degrees are reported but
    kept out of all later generated-part sums.
    """
    resolved: dict[int, Character] = {}
    records: list[DegreeRecord] = []
    halted = False

    for m in range(1, config.max_degree + 1):
        beta = config.betas.get(m, 0)
        zeta_row = {
            q: z
            for q in range(m * config.d + 1)
            if (z := covariant_dimension(config.d, m, q))
        }
        thr = threshold_character(config.d, m)
        upper = generated_upper_bound(config.d, m, resolved, config.suppressed)
        forced = require_effective(
            upper.sup(thr) - upper, f"forced bound in degree {m}"
        )
        gap = beta - forced.dimension()
        status: str
        res: Character | None = None

        if m in config.suppressed:
            status = NO_GENERATORS
        elif beta == 0:
            if not forced:
                status = NO_GENERATORS
                res = Character.zero()
            else:
                status = INVISIBLE_UNRESOLVED
                halted = True
        elif forced.dimension() == beta:
            status = VISIBLE
            res = forced
        else:
            correction = config.corrections.get(m)
            if correction is not None:
                candidate = forced + correction
                if candidate.dimension() != beta:
                    raise ConfigError(
                        f"correction at degree {m} gives dimension "
                        f"{candidate.dimension()}, expected {beta}"
                    )
                status = INVISIBLE_RESOLVED
                res = candidate
            else:
                status = INVISIBLE_UNRESOLVED
                halted = True

        if res is not None and res:
            resolved[m] = res
        records.append(
            DegreeRecord(
                m=m,
                beta=beta,
                zeta_row=zeta_row,
                threshold=thr,
                generated_bound=upper,
                forced_bound=forced,
                status=status,
                resolved=res,
                gap=gap,
            )
        )
        if halted:
            break

    return PipelineReport(d=config.d, records=records, halted=halted)


def mrc_ideal_dimension(n: int, num_points: int, m: int) -> int:
    """Expected dimension of the degree-m part of the ideal of general points.

    Under the maximal-rank assumption the evaluation map at the points
    has full rank, so the kernel dimension is the positive part of
    binom(m+n, n) - num_points; degree zero is always empty.
    """
    if m <= 0:
        return 0
    return max(0, comb(m + n, n) - num_points)


def mrc_expected_generators(
    n: int, num_points: int, max_degree: int
) -> dict[int, int]:
    """Expected new-generator counts for general points in projective n-space.

    In each degree the previous ideal piece times the n+1 linear forms
    is assumed to have maximal rank, so new generators appear exactly
    where the ideal grows faster than that product can reach.
    """
    if num_points < 0:
        raise ValueError("number of points must be nonnegative")
    out: dict[int, int] = {}
    for m in range(1, max_degree + 1):
        k_prev = mrc_ideal_dimension(n, num_points, m - 1)
        k_here = mrc_ideal_dimension(n, num_points, m)
        reachable = min(k_prev * (n + 1), k_here)
        gen = k_here - reachable
        if gen > 0:
            out[m] = gen
    return out
