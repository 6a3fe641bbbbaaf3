"""Exception hierarchy for the restoration toolkit.

Every domain failure raised by the imaging modules derives from ImpulseError,
which is what the command dispatcher catches and turns into exit code 1.
"""


class ImpulseError(Exception):
    """Base class for all domain errors."""


class InvalidParameterError(ImpulseError, ValueError):
    """A value object was constructed with out-of-range fields."""


class BoundsError(ImpulseError, IndexError):
    """A pixel coordinate has no full 3x3 neighborhood inside the image."""


class SizeError(ImpulseError):
    """An image is too small for a 3x3 filter."""


class ShapeError(ImpulseError):
    """Two images (or an image and a mask) have different dimensions."""


class DegenerateReferenceError(ImpulseError):
    """The SNR reference image has zero energy."""


class ZeroDenominatorError(ImpulseError):
    """A percentage metric has no pixels in its denominator."""


class ConfigError(ImpulseError):
    """An environment override could not be parsed."""


class ExperimentError(ImpulseError):
    """A benchmark was requested with an invalid experiment description."""


class PgmParseError(ImpulseError):
    """A PGM byte stream could not be decoded.

    Attributes:
        offset: Byte offset into the input where decoding failed.
    """

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
