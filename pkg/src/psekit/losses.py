"""Training objectives: negative SI-SDR, enrollment-consistency L1, and
their composites.

Every function accepts Waveform / ComplexSpectrogram / numpy / torch inputs
and computes in float64 torch so the same code serves unit tests and the
differentiable training path.  Scalars come back as 0-dim tensors; call
float() on them outside a graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import torch

from .dsp import ComplexSpectrogram, Waveform
from .errors import InvalidInput, InvalidReference, ShapeError

EPS = 1e-8


def _as_signal(x) -> torch.Tensor:
    if isinstance(x, Waveform):
        x = x.samples
    if isinstance(x, np.ndarray):
        return torch.from_numpy(np.ascontiguousarray(x, dtype=np.float64))
    if torch.is_tensor(x):
        return x.to(torch.float64) if x.dtype != torch.float64 else x
    return torch.as_tensor(x, dtype=torch.float64)


def _as_spec_channels(x) -> torch.Tensor:
    """Any spectrogram representation -> real tensor with a trailing
    real/imag axis kept wherever the input put it (only elementwise ops
    follow, so the exact layout is irrelevant as long as both sides match).
    """
    if isinstance(x, ComplexSpectrogram):
        return torch.view_as_real(torch.from_numpy(x.data))
    if torch.is_tensor(x):
        if x.is_complex():
            return torch.view_as_real(x.to(torch.complex128))
        return x.to(torch.float64)
    x = np.asarray(x)
    if np.iscomplexobj(x):
        return torch.view_as_real(torch.from_numpy(np.ascontiguousarray(x, np.complex128)))
    return torch.from_numpy(np.ascontiguousarray(x, np.float64))


@dataclass
class LossValue:
    """A scalar objective plus its named parts.

    total is always the documented combination of the components, computed
    from the same tensors, so the two cannot disagree.
    """

    total: torch.Tensor
    components: dict = field(default_factory=dict)

    def item(self) -> float:
        return float(self.total)

    def component_floats(self) -> dict:
        return {k: float(v) for k, v in self.components.items()}


def neg_sisdr(est, ref, zero_mean: bool = True, eps: float = EPS) -> torch.Tensor:
    """Negative scale-invariant SDR in dB.

    alpha = <est, ref> / (||ref||^2 + eps); the ratio compares the scaled
    reference against the residual.  Mean subtraction first, per the usual
    zero-mean convention (disable only for hand-computed fixtures).
    """
    est = _as_signal(est)
    ref = _as_signal(ref)
    if est.shape != ref.shape:
        raise ShapeError(f"est {tuple(est.shape)} vs ref {tuple(ref.shape)}")
    if est.numel() < 2:
        raise InvalidInput("signals must have at least 2 samples")
    if not bool((ref != 0).any()):
        raise InvalidReference("reference signal is all zero")
    if zero_mean:
        est = est - est.mean()
        ref = ref - ref.mean()
    alpha = (est * ref).sum() / ((ref * ref).sum() + eps)
    target = alpha * ref
    noise = est - target
    ratio = (target * target).sum() / ((noise * noise).sum() + eps)
    return -10.0 * torch.log10(ratio)


def consistency_loss(spec_a, spec_b, mode: str = "real_imag") -> torch.Tensor:
    """Mean absolute error between two complex spectrograms.

    mode "real_imag" averages |a - b| over every element with real and
    imaginary parts as two real channels; "modulus" averages the complex
    modulus of the difference instead.
    """
    if isinstance(spec_a, ComplexSpectrogram) and isinstance(spec_b, ComplexSpectrogram):
        if spec_a.params != spec_b.params or spec_a.sample_rate != spec_b.sample_rate:
            raise ShapeError("spectrogram parameters differ")
    a = _as_spec_channels(spec_a)
    b = _as_spec_channels(spec_b)
    if a.shape != b.shape:
        raise ShapeError(f"spec shapes {tuple(a.shape)} vs {tuple(b.shape)}")
    diff = a - b
    if mode == "real_imag":
        return diff.abs().mean()
    if mode == "modulus":
        # last axis is (re, im) after channel extraction
        return torch.sqrt((diff * diff).sum(dim=-1)).mean()
    raise InvalidInput(f"unknown consistency mode {mode!r}")


def enhancement_loss(est, ref) -> LossValue:
    """Per-item objective for single-output training.

    The task tag never enters: enrollment-free and enrollment-conditioned
    items share this loss unchanged.
    """
    s = neg_sisdr(est, ref)
    return LossValue(total=s, components={"sisdr_1": s})


def paired_loss(y1, y2, ref, consistency_weight: float = 1.0,
                mode: str = "real_imag") -> LossValue:
    """Objective over two enrollment branches of the same mixture.

    y1 and y2 are (waveform_estimate, output_spectrogram) pairs produced
    under two different enrollments of the target speaker;
    total = neg_sisdr(y1) + neg_sisdr(y2) + weight * consistency.
    """
    if consistency_weight < 0:
        raise InvalidInput(
            f"consistency_weight must be >= 0, got {consistency_weight}")
    wave1, spec1 = y1
    wave2, spec2 = y2
    s1 = neg_sisdr(wave1, ref)
    s2 = neg_sisdr(wave2, ref)
    c = consistency_loss(spec1, spec2, mode=mode)
    total = s1 + s2 + consistency_weight * c
    return LossValue(total=total,
                     components={"sisdr_1": s1, "sisdr_2": s2, "consistency": c})


def mean_loss(values: list[LossValue]) -> LossValue:
    """Average of per-item losses; components averaged key-wise."""
    if not values:
        raise InvalidInput("cannot average an empty loss list")
    n = len(values)
    total = sum(v.total for v in values) / n
    keys = values[0].components.keys()
    components = {}
    for k in keys:
        present = [v.components[k] for v in values if k in v.components]
        components[k] = sum(present) / len(present)
    return LossValue(total=total, components=components)
