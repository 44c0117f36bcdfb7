"""
The growth record of the parabolic example.

Stage n of the construction glues t_n thin triangles and t_n·M_n fans onto the disk built so
far. Its boundary vertices lie over the circle of radius R_n, so the record keeps, per stage:

    t_1 = 3,  t_{n+1} = t_n·M_n,  M_n = 2^{e_n}
    s_n = 1 + t_1 + ... + t_n                  (sheets over the disk of radius R_{n+1})
    log R_{n+1} = log R_n + 2πn(1 + slack)·s_n

log R_1 is the largest integer b with (3√3/4)·e^{2b} <= ε, so the first triangle has area at
most ε. e_n is chosen so that every fan triangle of stage n has area at most ε: the least
such exponent while it can be computed in floating point, otherwise 10·a_{n+1} where
log R_{n+1} = a_{n+1}·π + b.
"""

import dataclasses
import math
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from tqdm import tqdm

from conformal_type_lab.config import config
from conformal_type_lab.errors import DomainError, PreconditionFailed, StageMissing
from conformal_type_lab.example_factory.counts import SymbolicCount
from conformal_type_lab.example_factory.log_length import LogLength
from conformal_type_lab.utils import create_logger, fraction_to_dict

FIRST_VERTEX_COUNT = 3
# Coefficients of π below this are still handled by the least-exponent rule
LEAST_RULE_LIMIT = 2 ** 40
# A least exponent closer than this to the required value is bumped by one
LEAST_RULE_MARGIN = 1e-6

LEAST = "least"
DOMINATING = "dominating"


@dataclasses.dataclass(frozen=True)
class Stage:
    """One stage of the construction.

    Attributes:
        n (int): Stage index, from 1.
        log_radius (LogLength): log R_n.
        next_log_radius (LogLength): log R_{n+1}.
        t (SymbolicCount): Boundary vertices over the circle of radius R_n.
        sheets (SymbolicCount): s_n = 1 + t_1 + ... + t_n.
        exponent (SymbolicCount): e_n, the fan subdivision is M_n = 2^{e_n}.
        exponent_rule (str): ``least`` or ``dominating``.
        area_margin (Optional[float]): ln ε minus the fan log-area bound under the least
            rule; None under the dominating rule, which is certified symbolically.
    """

    n: int
    log_radius: LogLength
    next_log_radius: LogLength
    t: SymbolicCount
    sheets: SymbolicCount
    exponent: SymbolicCount
    exponent_rule: str
    area_margin: Optional[float] = None

    @property
    def subdivision(self) -> SymbolicCount:
        """M_n."""
        return SymbolicCount.power_of_two(self.exponent)

    @property
    def next_t(self) -> SymbolicCount:
        """t_{n+1} = t_n·M_n."""
        return self.t * self.subdivision

    def module_ratio(self) -> Optional[Fraction]:
        """(log R_{n+1} − log R_n) / (2π·s_n), or None when it is not rational."""
        growth = self.next_log_radius - self.log_radius
        if growth.b != 0:
            return None
        return growth.a_pi.ratio_to(self.sheets * 2)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "logR": self.log_radius.to_dict(),
            "next_logR": self.next_log_radius.to_dict(),
            "t": self.t.to_json(),
            "M": {"log2": self.exponent.to_json()},
            "sheets": self.sheets.to_json(),
            "exponent_rule": self.exponent_rule,
            "area_margin": self.area_margin,
            "module_bound": fraction_to_dict(self.module_ratio()),
        }


@dataclasses.dataclass(frozen=True)
class GrowthRecord:
    """Stages 1..built of the construction for a given ε."""

    eps: float
    radius_slack: Fraction
    base_log_radius: int
    stages: Tuple[Stage, ...]

    @property
    def built(self) -> int:
        return len(self.stages)

    def stage(self, n: int) -> Stage:
        """Stage n.

        Raises:
            StageMissing: If n is not in 1..built.
        """
        if not 1 <= n <= self.built:
            raise StageMissing(n, self.built)
        return self.stages[n - 1]

    def vertex_counts(self, n: int) -> List[SymbolicCount]:
        """[t_1, ..., t_{n+1}], the boundary vertex counts of the first n + 1 circles."""
        if not 0 <= n <= self.built:
            raise StageMissing(n, self.built)
        counts = [SymbolicCount(FIRST_VERTEX_COUNT)]
        for stage in self.stages[:n]:
            counts.append(stage.next_t)
        return counts

    @property
    def base_area(self) -> float:
        """Area of the first triangle, inscribed equilaterally in the circle of radius R_1."""
        return 3 * math.sqrt(3) / 4 * math.exp(2 * self.base_log_radius)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "eps": self.eps,
            "radius_slack": fraction_to_dict(self.radius_slack),
            "base_log_radius": self.base_log_radius,
            "base_area": self.base_area,
            "stages": [stage.to_dict() for stage in self.stages],
        }


class GrowthBuilder:
    """Builds the growth record stage by stage.

    Args:
        eps (float): Area bound for every triangle, positive.
        radius_slack (Fraction): Relative slack in the radius growth, non-negative.
    """

    def __init__(self, eps: float, radius_slack=0):
        if not (math.isfinite(eps) and eps > 0):
            raise DomainError("eps", eps, "positive finite reals")
        radius_slack = Fraction(radius_slack)
        if radius_slack < 0:
            raise DomainError("radius_slack", radius_slack, "non-negative rationals")
        self.eps = float(eps)
        self.radius_slack = radius_slack
        self.growth_factor = 1 + radius_slack
        self.base_log_radius = math.floor(0.5 * math.log(4 * self.eps / (3 * math.sqrt(3))))
        self.logger = create_logger(
            name=f"{self.__class__.__module__}.{self.__class__.__name__}",
            log_level=config.log_level,
            log_file=config.log_file,
        )

    def _subdivision_exponent(self, sheets: SymbolicCount,
                              next_log_radius: LogLength
                              ) -> Tuple[SymbolicCount, str, Optional[float]]:
        """e_n such that 2π·s_n·R_{n+1}²/2^{e_n} <= ε."""
        a = next_log_radius.a_pi
        if a.is_constant and abs(a.constant) < LEAST_RULE_LIMIT:
            bound = (math.log(2 * math.pi) + sheets.approx_log2() * math.log(2)
                     + 2 * next_log_radius.approx() - math.log(self.eps))
            required = bound / math.log(2)
            exponent = max(1, math.ceil(required))
            if exponent - required < LEAST_RULE_MARGIN:
                exponent += 1
            margin = (exponent - required) * math.log(2)
            return SymbolicCount(exponent), LEAST, margin

        # 10·ln 2 > 2π covers R_{n+1}²; a_{n+1} >= 2·s_n covers the factor 2π·s_n, and
        # 2·log R_1 <= ln ε leaves the rational part non-positive
        if a < sheets * 2:
            raise PreconditionFailed("log-radius coefficient a_{n+1} >= 2 s_n")
        exponent = a * (10 * self.growth_factor.denominator)
        return exponent, DOMINATING, None

    def build(self, n_max: int) -> GrowthRecord:
        """Stages 1..n_max.

        Raises:
            DomainError: If n_max is outside 1..max_stages.
        """
        max_stages = config.get_record_settings()["max_stages"]
        if not 1 <= n_max <= max_stages:
            raise DomainError("n_max", n_max, f"1..{max_stages}")
        start_time = time.time()

        log_radius = LogLength.of(0, self.base_log_radius)
        t = SymbolicCount(FIRST_VERTEX_COUNT)
        placed = SymbolicCount(0)
        stages: List[Stage] = []
        indices = range(1, n_max + 1)
        if config.show_progress and n_max > 2:
            indices = tqdm(indices, desc="Stages", leave=False)
        for n in indices:
            sheets = placed + t + 1
            growth = sheets * (2 * n * self.growth_factor)
            next_log_radius = log_radius + LogLength.of(growth)
            exponent, rule, margin = self._subdivision_exponent(sheets, next_log_radius)
            stage = Stage(
                n=n,
                log_radius=log_radius,
                next_log_radius=next_log_radius,
                t=t,
                sheets=sheets,
                exponent=exponent,
                exponent_rule=rule,
                area_margin=margin,
            )
            stages.append(stage)
            self.logger.debug(
                f"Stage {n}: log2 t = {t.approx_log2():.6g}, exponent rule {rule}")
            placed = placed + t
            t = stage.next_t
            log_radius = next_log_radius

        self.logger.info(
            f"Built {n_max} stages for eps={self.eps} in {time.time() - start_time:.3f} seconds"
        )
        return GrowthRecord(
            eps=self.eps,
            radius_slack=self.radius_slack,
            base_log_radius=self.base_log_radius,
            stages=tuple(stages),
        )


def build(eps: float, n_max: int, radius_slack=0) -> GrowthRecord:
    """Build the growth record through stage ``n_max``; see :class:`GrowthBuilder`."""
    return GrowthBuilder(eps, radius_slack).build(n_max)
