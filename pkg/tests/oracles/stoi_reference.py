"""Loop-based short-time objective intelligibility reference.

Plain-Python transcription of the standard STOI procedure, kept deliberately
un-vectorized (explicit frame / band / segment loops) so it shares no code
shape with the package implementation it checks.

Constants of the procedure:
    internal rate        10 kHz
    frame / hop          256 / 128 samples, Hann taper hanning(258)[1:-1]
    silence removal      frames more than 40 dB below the loudest ref frame
                         are dropped from both signals (mask from ref only),
                         survivors overlap-added back together
    spectrum             512-point FFT per frame
    bands                15 one-third-octave bands, first center 150 Hz,
                         band edges snapped to the nearest FFT bin
    segments             30 consecutive frames
    normalization+clip   per band-segment: scale degraded to the clean norm,
                         clip at a -15 dB lower SDR bound
    score                mean of per-band per-segment correlations
"""

import math

import numpy as np
from scipy.signal import resample_poly

FS = 10000
FRAME = 256
HOP = 128
NFFT = 512
NUM_BANDS = 15
MIN_FREQ = 150.0
SEG = 30
BETA_DB = -15.0
DYN_RANGE_DB = 40.0
TINY = 1e-15


def _window():
    full = np.hanning(FRAME + 2)
    return full[1:-1].astype(np.float64)


def _resample_to_fs(x, rate):
    if rate == FS:
        return np.asarray(x, dtype=np.float64)
    g = math.gcd(int(rate), FS)
    return resample_poly(np.asarray(x, dtype=np.float64), FS // g, rate // g)


def _frame_starts(n):
    starts = []
    s = 0
    while s + FRAME <= n:
        starts.append(s)
        s += HOP
    return starts


def _remove_silent(x, y):
    w = _window()
    starts = _frame_starts(len(x))
    if not starts:
        return np.zeros(0), np.zeros(0)
    energies = []
    for s in starts:
        fr = w * x[s:s + FRAME]
        energies.append(20.0 * math.log10(float(np.linalg.norm(fr)) + TINY))
    thr = max(energies) - DYN_RANGE_DB
    kept = [i for i, e in enumerate(energies) if e > thr]
    out_len = len(kept) * HOP + FRAME
    xs = np.zeros(out_len)
    ys = np.zeros(out_len)
    for j, i in enumerate(kept):
        s_in = starts[i]
        s_out = j * HOP
        xs[s_out:s_out + FRAME] += w * x[s_in:s_in + FRAME]
        ys[s_out:s_out + FRAME] += w * y[s_in:s_in + FRAME]
    return xs, ys


def _band_matrix():
    freqs = np.array([k * FS / NFFT for k in range(NFFT // 2 + 1)])
    obm = np.zeros((NUM_BANDS, NFFT // 2 + 1))
    for j in range(NUM_BANDS):
        cf = MIN_FREQ * 2.0 ** (j / 3.0)
        f_lo = cf / 2.0 ** (1.0 / 6.0)
        f_hi = cf * 2.0 ** (1.0 / 6.0)
        lo = int(np.argmin((freqs - f_lo) ** 2))
        hi = int(np.argmin((freqs - f_hi) ** 2))
        obm[j, lo:hi] = 1.0
    return obm


def _band_envelopes(x):
    w = _window()
    obm = _band_matrix()
    starts = _frame_starts(len(x))
    env = np.zeros((NUM_BANDS, len(starts)))
    for m, s in enumerate(starts):
        spec = np.fft.rfft(w * x[s:s + FRAME], NFFT)
        power = np.abs(spec) ** 2
        for j in range(NUM_BANDS):
            env[j, m] = math.sqrt(float(np.dot(obm[j], power)))
    return env


def _correlation(a, b):
    a = a - a.mean()
    b = b - b.mean()
    denom = (np.linalg.norm(a) + TINY) * (np.linalg.norm(b) + TINY)
    return float(np.dot(a, b)) / denom


def stoi_score(ref, est, rate):
    """Intelligibility of est against clean ref, both at sample rate `rate`.

    Returns a correlation-based score, 1.0 for identical inputs.
    """
    x = _resample_to_fs(ref, rate)
    y = _resample_to_fs(est, rate)
    if len(x) != len(y):
        raise ValueError("length mismatch")
    x, y = _remove_silent(x, y)
    ex = _band_envelopes(x)
    ey = _band_envelopes(y)
    num_frames = ex.shape[1]
    if num_frames < SEG:
        raise ValueError("too short after silence removal")
    clip_gain = 1.0 + 10.0 ** (-BETA_DB / 20.0)
    scores = []
    for m in range(SEG, num_frames + 1):
        xs = ex[:, m - SEG:m]
        ys = ey[:, m - SEG:m]
        for j in range(NUM_BANDS):
            alpha = float(np.linalg.norm(xs[j])) / (float(np.linalg.norm(ys[j])) + TINY)
            yn = np.minimum(alpha * ys[j], clip_gain * xs[j])
            scores.append(_correlation(xs[j], yn))
    return float(np.mean(scores))
