"""
    Verify Generator Module

    Description:
    - This module contains the embedded xorshift64* generator, seeded
    through splitmix64, so reports are byte-identical across platforms.

"""

# Importing Python Packages
import math

# Importing FastAPI Packages

# Importing Project Files
from core.exceptions import DomainError
from .configuration import verify_configuration
from .response_message import verify_response_message


# -----------------------------------------------------------------------------


def splitmix64(seed: int) -> int:
    """
    First output of splitmix64 started at seed.

    """

    mask: int = verify_configuration.MASK_64
    z: int = (seed + verify_configuration.SPLITMIX_GAMMA) & mask
    z = ((z ^ (z >> 30)) * verify_configuration.SPLITMIX_MULTIPLIER_1) & mask
    z = ((z ^ (z >> 27)) * verify_configuration.SPLITMIX_MULTIPLIER_2) & mask

    return z ^ (z >> 31)


class Xorshift64Star:
    """
    Xorshift64* Generator

    Description:
    - This class is used to draw reproducible 64-bit integers and uniform
    floats from an unsigned 64-bit seed.
    - Not thread-safe; use one instance per run.

    """

    def __init__(self, seed: int):
        """
        Xorshift64* Class Initialization

        Description:
        - This method is used to seed the state with splitmix64(seed); a
        zero state is replaced by a fixed nonzero constant.

        Parameter:
        - **seed** (INT): Unsigned 64-bit seed. **(Required)**

        """

        if (
            isinstance(seed, bool)
            or not isinstance(seed, int)
            or not 0 <= seed < verify_configuration.SEED_LIMIT
        ):
            raise DomainError(
                f"{verify_response_message.INVALID_SEED}, got {seed!r}"
            )

        self.state: int = (
            splitmix64(seed) or verify_configuration.XORSHIFT_FALLBACK_STATE
        )

    def next_u64(self) -> int:
        mask: int = verify_configuration.MASK_64
        state: int = self.state
        state ^= state >> 12
        state ^= (state << 25) & mask
        state ^= state >> 27
        self.state = state

        return (state * verify_configuration.XORSHIFT_MULTIPLIER) & mask

    def uniform(self) -> float:
        """
        Uniform float in [0, 1) from the top 53 bits.

        """

        return (self.next_u64() >> 11) * verify_configuration.UNIFORM_SCALE

    def uniform_range(self, low: float, high: float) -> float:
        return low + (high - low) * self.uniform()

    def log_uniform_range(self, low: float, high: float) -> float:
        """
        Log-uniform float in [low, high), 0 < low <= high.

        """

        if low == high:
            self.uniform()
            return low

        log_low: float = math.log(low)

        return math.exp(
            log_low + (math.log(high) - log_low) * self.uniform()
        )
