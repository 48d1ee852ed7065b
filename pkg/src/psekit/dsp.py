"""Deterministic signal-processing primitives.

STFT analysis/synthesis with exact reconstruction, power-law dynamic range
compression of complex spectrograms, band-limited resampling, and 16-bit
mono WAV I/O.  Everything here is a pure function of its inputs; all audio
is float64 normalized to [-1, 1].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.io import wavfile
from scipy.signal import firwin, resample_poly

from .errors import InvalidInput, InvalidParams, InvalidState

# Minimum of the overlap-added squared window over one hop period, relative
# to its maximum.  Parameter sets below this cannot be inverted.
_OLA_FLOOR = 1e-6
# Half-width of the windowed-sinc resampling kernel, in zero crossings per
# polyphase branch.
_RESAMPLE_HALF_WIDTH = 32


@dataclass(frozen=True)
class Waveform:
    """Mono audio: float64 samples plus a sample rate in Hz."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=np.float64)
        if samples.ndim != 1:
            raise InvalidInput(f"samples must be 1-D, got shape {samples.shape}")
        if not np.all(np.isfinite(samples)):
            raise InvalidInput("samples contain NaN or Inf")
        if int(self.sample_rate) <= 0:
            raise InvalidInput(f"sample_rate must be positive, got {self.sample_rate}")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", int(self.sample_rate))

    def __len__(self):
        return len(self.samples)

    @property
    def duration_s(self) -> float:
        return len(self.samples) / self.sample_rate


@dataclass(frozen=True)
class StftParams:
    """Analysis/synthesis configuration.

    The window and hop are in milliseconds so one parameter set carries
    across sample rates; fft_size is in samples and must hold one window.
    """

    window_ms: float = 32.0
    hop_ms: float = 16.0
    fft_size: int = 256
    window_kind: str = "hann"

    def window_samples(self, sample_rate: int) -> int:
        return int(round(self.window_ms * sample_rate / 1000.0))

    def hop_samples(self, sample_rate: int) -> int:
        return int(round(self.hop_ms * sample_rate / 1000.0))

    @property
    def bins(self) -> int:
        return self.fft_size // 2 + 1


@dataclass
class ComplexSpectrogram:
    """Complex STFT frames, [frames, bins], with its analysis parameters."""

    data: np.ndarray
    params: StftParams
    sample_rate: int
    compressed: bool = False

    def __post_init__(self):
        data = np.asarray(self.data, dtype=np.complex128)
        if data.ndim != 2:
            raise InvalidInput(f"spectrogram must be 2-D, got shape {data.shape}")
        if data.shape[1] != self.params.bins:
            raise InvalidInput(
                f"expected {self.params.bins} bins for fft_size "
                f"{self.params.fft_size}, got {data.shape[1]}")
        if not np.all(np.isfinite(data)):
            raise InvalidInput("spectrogram contains NaN or Inf")
        self.data = data


def make_window(params: StftParams, sample_rate: int) -> np.ndarray:
    """Periodic analysis taper of window_samples length."""
    w = params.window_samples(sample_rate)
    if params.window_kind != "hann":
        raise InvalidParams(f"unsupported window kind {params.window_kind!r}")
    if w < 2:
        raise InvalidParams(f"window of {w} samples is too short")
    n = np.arange(w)
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * n / w)


def validate_stft_params(params: StftParams, sample_rate: int) -> None:
    """Raise InvalidParams unless analysis with these params is invertible."""
    if params.hop_ms > params.window_ms:
        raise InvalidParams("hop must not exceed the window")
    w = params.window_samples(sample_rate)
    h = params.hop_samples(sample_rate)
    if h < 1:
        raise InvalidParams(f"hop of {h} samples at {sample_rate} Hz")
    if params.fft_size < w:
        raise InvalidParams(
            f"fft_size {params.fft_size} smaller than the {w}-sample window")
    window = make_window(params, sample_rate)
    # Overlap-added squared window over one hop period; a zero anywhere
    # makes the weighted overlap-add inverse lose those samples.
    denom = np.zeros(h)
    for start in range(0, w, h):
        seg = window[start:start + h] ** 2
        denom[:len(seg)] += seg
    if denom.min() < _OLA_FLOOR * max(denom.max(), 1e-300):
        raise InvalidParams(
            f"window/hop pair ({params.window_ms} ms / {params.hop_ms} ms) "
            "does not satisfy the overlap-add reconstruction condition")


def frame_count(num_samples: int, params: StftParams, sample_rate: int) -> int:
    """Number of analysis frames for a signal of num_samples."""
    h = params.hop_samples(sample_rate)
    return 1 + math.ceil(num_samples / h)


def stft(wave: Waveform, params: StftParams) -> ComplexSpectrogram:
    """Analysis transform.

    The signal is reflect-padded by half a window at each edge (plus a zero
    tail to complete the last frame), so the frame count depends only on
    the input length and every payload sample is fully covered by windows.
    """
    if len(wave) == 0:
        raise InvalidInput("cannot analyze an empty waveform")
    validate_stft_params(params, wave.sample_rate)
    w = params.window_samples(wave.sample_rate)
    h = params.hop_samples(wave.sample_rate)
    window = make_window(params, wave.sample_rate)
    num_frames = frame_count(len(wave), params, wave.sample_rate)

    padded = np.pad(wave.samples, w // 2, mode="reflect")
    total = (num_frames - 1) * h + w
    if total > len(padded):
        padded = np.concatenate([padded, np.zeros(total - len(padded))])

    frames = np.lib.stride_tricks.sliding_window_view(padded, w)[::h][:num_frames]
    data = np.fft.rfft(frames * window, n=params.fft_size, axis=1)
    return ComplexSpectrogram(data, params, wave.sample_rate, compressed=False)


def istft(spec: ComplexSpectrogram, target_length: int) -> Waveform:
    """Synthesis transform, exact inverse of stft up to float rounding.

    Weighted overlap-add: frames are windowed again and the sum is divided
    by the accumulated squared window, then the half-window lead-in is
    dropped and the result trimmed or zero-padded to target_length.
    """
    if spec.compressed:
        raise InvalidState("spectrogram is compressed; expand it before synthesis")
    if target_length < 0:
        raise InvalidInput(f"target_length must be >= 0, got {target_length}")
    validate_stft_params(spec.params, spec.sample_rate)
    w = spec.params.window_samples(spec.sample_rate)
    h = spec.params.hop_samples(spec.sample_rate)
    window = make_window(spec.params, spec.sample_rate)

    frames = np.fft.irfft(spec.data, n=spec.params.fft_size, axis=1)[:, :w]
    frames = frames * window
    num_frames = spec.data.shape[0]
    total = (num_frames - 1) * h + w
    out = np.zeros(total)
    denom = np.zeros(total)
    wsq = window ** 2
    for t in range(num_frames):
        out[t * h:t * h + w] += frames[t]
        denom[t * h:t * h + w] += wsq
    safe = denom > 1e-11
    out[safe] /= denom[safe]

    payload = out[w // 2:w // 2 + target_length]
    if len(payload) < target_length:
        payload = np.concatenate([payload, np.zeros(target_length - len(payload))])
    return Waveform(payload, spec.sample_rate)


def drc_compress(spec: ComplexSpectrogram, exponent: float) -> ComplexSpectrogram:
    """Magnitude power-law compression m -> m**exponent, phase preserved."""
    if spec.compressed:
        raise InvalidState("spectrogram is already compressed")
    if not 0.0 < exponent <= 1.0:
        raise InvalidParams(f"compression exponent must be in (0, 1], got {exponent}")
    mag = np.abs(spec.data)
    scale = np.ones_like(mag)
    nz = mag > 0.0
    # m**(e-1) applied multiplicatively keeps the phase bit-exact and maps
    # zero to zero without a 0**negative.
    scale[nz] = mag[nz] ** (exponent - 1.0)
    return ComplexSpectrogram(spec.data * scale, spec.params, spec.sample_rate,
                              compressed=True)


def drc_expand(spec: ComplexSpectrogram, exponent: float) -> ComplexSpectrogram:
    """Inverse of drc_compress: m -> m**(1/exponent), phase preserved."""
    if not spec.compressed:
        raise InvalidState("spectrogram is not compressed")
    if not 0.0 < exponent <= 1.0:
        raise InvalidParams(f"compression exponent must be in (0, 1], got {exponent}")
    mag = np.abs(spec.data)
    scale = np.ones_like(mag)
    nz = mag > 0.0
    scale[nz] = mag[nz] ** (1.0 / exponent - 1.0)
    return ComplexSpectrogram(spec.data * scale, spec.params, spec.sample_rate,
                              compressed=False)


def resample(wave: Waveform, target_rate: int) -> Waveform:
    """Polyphase windowed-sinc rate conversion.

    Output length is round(n * target / source); a same-rate call returns
    the input unchanged.
    """
    if target_rate <= 0:
        raise InvalidInput(f"target_rate must be positive, got {target_rate}")
    if target_rate == wave.sample_rate:
        return wave
    g = math.gcd(wave.sample_rate, target_rate)
    up, down = target_rate // g, wave.sample_rate // g
    q = max(up, down)
    taps = 2 * _RESAMPLE_HALF_WIDTH * q + 1
    kernel = firwin(taps, 1.0 / q, window=("kaiser", 5.0))
    out = resample_poly(wave.samples, up, down, window=kernel)
    out_len = int(round(len(wave) * target_rate / wave.sample_rate))
    if len(out) >= out_len:
        out = out[:out_len]
    else:
        out = np.concatenate([out, np.zeros(out_len - len(out))])
    return Waveform(out, target_rate)


def read_wav(path) -> Waveform:
    """Read a mono 16-bit PCM WAV into [-1, 1] float64."""
    rate, data = wavfile.read(path)
    if data.ndim != 1:
        raise InvalidInput(f"{path}: expected mono audio, got shape {data.shape}")
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / 32768.0
    elif data.dtype in (np.float32, np.float64):
        samples = data.astype(np.float64)
    else:
        raise InvalidInput(f"{path}: unsupported sample format {data.dtype}")
    return Waveform(samples, int(rate))


def write_wav(path, wave: Waveform) -> None:
    """Write 16-bit PCM; values outside the representable range are clipped."""
    pcm = np.clip(np.round(wave.samples * 32768.0), -32768, 32767).astype(np.int16)
    wavfile.write(path, wave.sample_rate, pcm)
