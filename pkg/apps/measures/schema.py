"""
    Measures Pydantic Schemas

    Description:
    - This module contains the objects and morphisms of the dimension-shift
    category and of homogeneous radial measures.

"""

# Importing Python Packages
import math
import sys
from typing import Any, Callable
from pydantic import Field, model_validator

# Importing FastAPI Packages

# Importing Project Files
from apps.base import BaseDomainSchema
from apps.quadrature.schema import Integrand
from core.exceptions import BallVolumeError, CoefficientError
from .configuration import measures_configuration
from .response_message import measures_response_message


# -----------------------------------------------------------------------------


class DimObject(BaseDomainSchema):
    """
    Dimension Object Schema

    Description:
    - This schema is used to represent a continuous dimension x > 0.

    """

    x: float = Field(gt=0, allow_inf_nan=False, examples=[2.0])


class DimShift(BaseDomainSchema):
    """
    Dimension Shift Schema

    Description:
    - This schema is used to represent the unique morphism x -> x + 2r.
    - Negative shifts are rejected.

    """

    source: DimObject
    r: float = Field(ge=0, allow_inf_nan=False, examples=[1.0])

    @property
    def target(self) -> DimObject:
        return DimObject(x=self.source.x + 2.0 * self.r)


class HomogeneousRadialMeasure(BaseDomainSchema):
    """
    Homogeneous Radial Measure Schema

    Description:
    - This schema is used to represent the measure coeff * u^(x/2 - 1) du on
    (0, inf).
    - log_coeff = ln(coeff) is always present. Either field may be given;
    the other is derived. At extreme dimensions coeff may be subnormal or
    0 while log_coeff stays exact, and evaluation then works in log space.

    """

    x: float = Field(gt=0, allow_inf_nan=False, examples=[2.0])
    coeff: float = Field(ge=0, allow_inf_nan=False, examples=[math.pi])
    log_coeff: float = Field(allow_inf_nan=False, examples=[math.log(math.pi)])

    @model_validator(mode="before")
    @classmethod
    def fill_coefficients(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data

        coeff: Any = data.get("coeff")
        log_coeff: Any = data.get("log_coeff")

        if (
            log_coeff is None
            and isinstance(coeff, (int, float))
            and 0.0 < coeff < math.inf
        ):
            return {**data, "log_coeff": math.log(coeff)}

        if (
            coeff is None
            and isinstance(log_coeff, (int, float))
            and log_coeff < measures_configuration.LOG_FLOAT_MAX
        ):
            return {**data, "coeff": math.exp(log_coeff)}

        return data

    @model_validator(mode="after")
    def check_coefficients(self) -> "HomogeneousRadialMeasure":
        tolerance: float = measures_configuration.MORPHISM_RELATIVE_TOLERANCE

        if self.is_log_scale:
            if self.log_coeff > measures_configuration.LOG_FLOAT_MIN + (
                tolerance * abs(measures_configuration.LOG_FLOAT_MIN)
            ):
                raise ValueError(
                    measures_response_message.INCONSISTENT_COEFFICIENTS
                )

            return self

        if abs(math.log(self.coeff) - self.log_coeff) > (
            tolerance * max(1.0, abs(self.log_coeff))
        ):
            raise ValueError(
                measures_response_message.INCONSISTENT_COEFFICIENTS
            )

        return self

    @property
    def order(self) -> float:
        """
        Exponent x/2 - 1 of the density at zero.

        """

        return self.x / 2.0 - 1.0

    @property
    def is_log_scale(self) -> bool:
        return self.coeff < sys.float_info.min

    def density(self, u: float) -> float:
        if self.is_log_scale and u > 0.0:
            return math.exp(self.log_coeff + self.order * math.log(u))

        return self.coeff * u**self.order

    def interval_mass(self, lo: float, hi: float) -> float:
        """
        Interval Mass

        Description:
        - This method is used to evaluate the closed form
        coeff * (2/x) * (hi^(x/2) - lo^(x/2)).
        - May underflow to 0 at extreme dimensions; log_interval_mass
        keeps the exact value.

        Parameter:
        - **lo** (FLOAT): Left end, lo >= 0. **(Required)**
        - **hi** (FLOAT): Right end, hi >= lo. **(Required)**

        Return:
        - **mass** (FLOAT): Measure of (lo, hi).

        """

        if self.is_log_scale:
            if hi <= lo:
                return 0.0

            log_mass: float = self.log_interval_mass(lo, hi)

            if log_mass > measures_configuration.LOG_FLOAT_MAX:
                return math.inf

            return math.exp(log_mass)

        half: float = self.x / 2.0

        return self.coeff * (2.0 / self.x) * (hi**half - lo**half)

    def log_interval_mass(self, lo: float, hi: float) -> float:
        """
        Log Interval Mass

        Description:
        - This method is used to evaluate ln of the mass of (lo, hi) without
        forming coeff, as ln(coeff) + ln(2/x) + (x/2) ln(hi)
        + ln(1 - (lo/hi)^(x/2)).

        Parameter:
        - **lo** (FLOAT): Left end, lo >= 0. **(Required)**
        - **hi** (FLOAT): Right end, hi > lo. **(Required)**

        Return:
        - **value** (FLOAT): ln of the mass of (lo, hi).

        """

        half: float = self.x / 2.0
        value: float = (
            self.log_coeff + math.log(2.0 / self.x) + half * math.log(hi)
        )

        if lo > 0.0:
            value += math.log1p(-math.exp(half * math.log(lo / hi)))

        return value

    def integrand(
        self,
        weight: Callable[[float], float] | None = None,
        weight_order: float = 0.0,
    ) -> Integrand:
        """
        Integrand

        Description:
        - This method is used to wrap weight(u) * density(u) for quadrature.
        - weight_order is the power of u the weight behaves like at zero.

        Parameter:
        - **weight** (CALLABLE): Weight function, 1 when omitted.
        **(Optional)**
        - **weight_order** (FLOAT): Order of the weight at zero.
        **(Optional)**

        Return:
        - **integrand** (Integrand): Weighted density.

        """

        if weight is None:
            return Integrand(
                function=self.density, singularity_order_at_zero=self.order
            )

        def weighted(u: float) -> float:
            factor: float = weight(u)

            # density may overflow where the weight has already vanished
            if factor == 0.0:
                return 0.0

            return factor * self.density(u)

        return Integrand(
            function=weighted,
            singularity_order_at_zero=self.order + weight_order,
        )


class DensityMorphism(BaseDomainSchema):
    """
    Density Morphism Schema

    Description:
    - This schema is used to represent the Radon-Nikodym density
    h(u) = A * u^power with target = h * source.
    - A is strictly positive.

    """

    source: HomogeneousRadialMeasure
    target: HomogeneousRadialMeasure
    A: float = Field(gt=0, allow_inf_nan=False, examples=[math.pi])
    power: float = Field(ge=0, allow_inf_nan=False, examples=[1.0])

    @model_validator(mode="after")
    def check_consistency(self) -> "DensityMorphism":
        """
        Check Consistency

        Description:
        - This method is used to enforce target.x = source.x + 2 * power and
        A = target.coeff / source.coeff.
        - The ratio is compared in log space when a coefficient or the ratio
        leaves the normal float range.

        """

        expected_x: float = self.source.x + 2.0 * self.power

        if abs(self.target.x - expected_x) > (
            measures_configuration.SHIFT_TOLERANCE * max(1.0, expected_x)
        ):
            raise ValueError(
                measures_response_message.INVALID_TARGET_DIMENSION
            )

        tolerance: float = measures_configuration.MORPHISM_RELATIVE_TOLERANCE

        if not (self.source.is_log_scale or self.target.is_log_scale):
            ratio: float = self.target.coeff / self.source.coeff

            if sys.float_info.min <= ratio < math.inf:
                if abs(self.A - ratio) > tolerance * ratio:
                    raise ValueError(
                        measures_response_message.INVALID_MORPHISM_COEFFICIENT
                    )

                return self

        log_ratio: float = self.target.log_coeff - self.source.log_coeff
        scale: float = max(
            1.0, abs(self.target.log_coeff), abs(self.source.log_coeff)
        )

        if abs(math.log(self.A) - log_ratio) > tolerance * scale:
            raise ValueError(
                measures_response_message.INVALID_MORPHISM_COEFFICIENT
            )

        return self

    def density(self, u: float) -> float:
        return self.A * u**self.power


class CoefficientFunction(BaseDomainSchema):
    """
    Coefficient Function Schema

    Description:
    - This schema is used to wrap an opaque positive map x -> c(x), with an
    optional log-scale evaluation used for extreme dimensions.

    """

    c: Callable[[float], float]
    log_c: Callable[[float], float] | None = None
    name: str = Field(default="custom", examples=["mellin_gamma"])

    def __call__(self, x: float) -> float:
        try:
            value: float = float(self.c(x))

        except BallVolumeError:
            raise

        except (ArithmeticError, ValueError) as err:
            raise CoefficientError(
                f"{measures_response_message.INVALID_COEFFICIENT}, "
                f"{self.name}({x!r}) raised {err}"
            ) from err

        if not (math.isfinite(value) and value > 0.0):
            raise CoefficientError(
                f"{measures_response_message.INVALID_COEFFICIENT}, "
                f"{self.name}({x!r}) = {value!r}"
            )

        return value

    def log(self, x: float) -> float:
        """
        Log

        Description:
        - This method is used to evaluate ln c(x), through log_c when given.

        Parameter:
        - **x** (FLOAT): Dimension. **(Required)**

        Return:
        - **value** (FLOAT): ln c(x).

        """

        if self.log_c is None:
            return math.log(self(x))

        value: float = float(self.log_c(x))

        if not math.isfinite(value):
            raise CoefficientError(
                f"{measures_response_message.INVALID_COEFFICIENT}, "
                f"ln {self.name}({x!r}) = {value!r}"
            )

        return value


class BumpProbe(BaseDomainSchema):
    """
    Bump Probe Schema

    Description:
    - This schema is used to represent the smooth compactly supported probe
    exp(-1 / (1 - ((u - center) / width)^2)) on (center - width,
    center + width), zero outside.

    """

    center: float = Field(gt=0, allow_inf_nan=False, examples=[1.0])
    width: float = Field(gt=0, allow_inf_nan=False, examples=[0.5])

    @model_validator(mode="after")
    def check_support(self) -> "BumpProbe":
        if self.width >= self.center:
            raise ValueError(measures_response_message.INVALID_PROBE_SUPPORT)

        return self

    @property
    def support(self) -> tuple[float, float]:
        return self.center - self.width, self.center + self.width

    @property
    def peak(self) -> float:
        return math.exp(-1.0)

    def __call__(self, u: float) -> float:
        z: float = (u - self.center) / self.width

        if abs(z) >= 1.0:
            return 0.0

        return math.exp(-1.0 / (1.0 - z * z))
