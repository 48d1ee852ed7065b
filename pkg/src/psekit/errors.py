"""Exception vocabulary shared by every psekit module.

The command line maps these onto stable exit codes (see ``psekit.cli``):
usage/validation errors exit 2, I/O errors exit 3, numerical failures
exit 4, checkpoint problems exit 5.
"""


class PsekitError(Exception):
    """Base class for all toolkit errors."""


class InvalidInput(PsekitError):
    """An argument value violates a documented precondition."""


class InvalidParams(PsekitError):
    """A parameter object (STFT setup, model config) is inconsistent."""


class InvalidState(PsekitError):
    """An operation was called on data in the wrong state, e.g. running
    spectrogram synthesis on a still-compressed spectrogram."""


class ShapeError(PsekitError):
    """Array shapes are incompatible for the requested operation."""


class InvalidReference(PsekitError):
    """A reference signal is unusable, e.g. all-zero in an SDR ratio."""


class RoleConflict(PsekitError):
    """A speaker was asked to play incompatible roles in one mixture."""


class InsufficientEnrollment(PsekitError):
    """A speaker does not have enough distinct utterances to supply the
    requested enrollment clue(s)."""


class CompositionError(PsekitError):
    """A mini-batch could not be composed under the role-disjointness
    constraint from the available pools."""


class NumericalError(PsekitError):
    """A non-finite value appeared where finite math was required. The
    message names the tensor or parameter that went bad."""


class CheckpointError(PsekitError):
    """A checkpoint is missing, corrupt, or inconsistent with its config
    header."""


class EmptyManifest(PsekitError):
    """An evaluation or training manifest contains no usable rows."""


class ScoringError(PsekitError):
    """An external metric scorer failed for one item."""
