"""Enrollment-conditioned speech enhancement network.

Pipeline: STFT + magnitude compression of mixture and enrollment, a
cross-attention front end that aligns enrollment features to mixture
frames and fuses them in, a dense-convolutional encoder with global/local
gate modules, a dilated temporal-convolution bottleneck with pyramid
fusion, a mirrored decoder with skip connections, and a complex
spectrogram mapping head.  Synthesis back to the waveform happens inside
the forward pass so time-domain losses differentiate through it.

All computation is float64 on CPU; a forward pass is deterministic given
parameters and inputs (no stochastic layers anywhere).
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import asdict, dataclass, field, replace

import numpy as np
import torch
import torch.nn.functional as tf
from torch import nn

from .dsp import (ComplexSpectrogram, StftParams, Waveform, make_window,
                  validate_stft_params)
from .errors import (CheckpointError, InvalidInput, InvalidParams,
                     NumericalError, ShapeError)

_GROWTH = 8
_DENSE_LAYERS = 4
_DRC_EPS = 1e-8


@dataclass(frozen=True)
class ModelConfig:
    """Architecture hyperparameters.

    attn_channel_factor scales channels down before the cross-attention
    alignment; gate_channel_factor is the squeeze ratio inside the gate
    modules.  passthrough swaps the whole network for an identity in the
    compressed spectrogram domain (a parameter-free baseline).
    """

    sample_rate: int = 8000
    num_encoder_blocks: int = 7
    num_decoder_blocks: int = 7
    base_channels: int = 32
    attn_channel_factor: float = 1.0 / 32.0
    gate_channel_factor: float = 4.0
    tcn_layers: int = 2
    tcn_blocks_per_layer: int = 10
    fusion_iterations: int = 2
    stft: StftParams = field(default_factory=StftParams)
    drc_exponent: float = 0.5
    placeholder_seconds: float = 3.0
    passthrough: bool = False

    def validate(self) -> None:
        if self.num_encoder_blocks != self.num_decoder_blocks:
            raise InvalidParams("encoder and decoder block counts must match "
                                "for skip-connection pairing")
        if self.num_encoder_blocks < 1:
            raise InvalidParams("need at least one encoder block")
        if self.fusion_iterations < 1:
            raise InvalidParams("fusion_iterations must be >= 1")
        if self.tcn_layers < 1 or self.tcn_blocks_per_layer < 1:
            raise InvalidParams("bottleneck needs at least one block")
        if not 0.0 < self.drc_exponent <= 1.0:
            raise InvalidParams(f"drc_exponent must be in (0, 1], "
                                f"got {self.drc_exponent}")
        validate_stft_params(self.stft, self.sample_rate)

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ModelConfig":
        d = dict(d)
        d["stft"] = StftParams(**d["stft"])
        return cls(**d)


def _num_downsamples(num_blocks: int) -> int:
    return min(3, num_blocks - 1)


def freq_after_downsampling(fft_size: int, num_blocks: int) -> int:
    f = fft_size // 2 + 1
    for _ in range(_num_downsamples(num_blocks)):
        f = (f + 1) // 2
    return f


# ---------------------------------------------------------------------------
# torch twins of the analysis/synthesis chain (differentiable, float64)

def stft_tensor(x: torch.Tensor, params: StftParams, rate: int) -> torch.Tensor:
    """[L] float64 -> [frames, bins] complex128, same framing as dsp.stft."""
    w = params.window_samples(rate)
    h = params.hop_samples(rate)
    if x.numel() < w:
        raise InvalidInput(f"signal of {x.numel()} samples is shorter than "
                           f"the {w}-sample analysis window")
    window = torch.from_numpy(make_window(params, rate))
    num_frames = 1 + math.ceil(x.numel() / h)
    padded = tf.pad(x.view(1, 1, -1), (w // 2, w // 2), mode="reflect").view(-1)
    total = (num_frames - 1) * h + w
    if total > padded.numel():
        padded = tf.pad(padded, (0, total - padded.numel()))
    frames = padded.unfold(0, w, h)[:num_frames]
    return torch.fft.rfft(frames * window, n=params.fft_size, dim=1)


def istft_tensor(spec: torch.Tensor, params: StftParams, rate: int,
                 length: int) -> torch.Tensor:
    """[frames, bins] complex -> [length] float64, weighted overlap-add."""
    w = params.window_samples(rate)
    h = params.hop_samples(rate)
    window = torch.from_numpy(make_window(params, rate))
    frames = torch.fft.irfft(spec, n=params.fft_size, dim=1)[:, :w] * window
    num_frames = spec.shape[0]
    total = (num_frames - 1) * h + w
    cols = frames.transpose(0, 1).unsqueeze(0)
    out = tf.fold(cols, (1, total), (1, w), stride=(1, h)).view(-1)
    with torch.no_grad():
        wsq = (window ** 2).unsqueeze(1).expand(w, num_frames).unsqueeze(0)
        denom = tf.fold(wsq, (1, total), (1, w), stride=(1, h)).view(-1)
    start = w // 2
    # payload samples are always covered by enough window mass
    return out[start:start + length] / denom[start:start + length]


def compress_ri(spec: torch.Tensor, exponent: float) -> torch.Tensor:
    """Magnitude power law on a [2, frames, bins] real/imag stack.

    The epsilon inside the magnitude keeps the gradient finite at zero, at
    the cost of ~1e-8 absolute deviation from the exact power law.
    """
    power = (spec * spec).sum(dim=0, keepdim=True)
    return spec * (power + _DRC_EPS) ** ((exponent - 1.0) / 2.0)


def expand_ri(spec: torch.Tensor, exponent: float) -> torch.Tensor:
    power = (spec * spec).sum(dim=0, keepdim=True)
    return spec * (power + _DRC_EPS) ** ((1.0 / exponent - 1.0) / 2.0)


# ---------------------------------------------------------------------------
# building blocks

def _gn(channels: int) -> nn.GroupNorm:
    # per-channel normalization over (frames, bins): deterministic at
    # inference and independent of batch composition
    return nn.GroupNorm(channels, channels)


class CrossAttention(nn.Module):
    """Aligns enrollment features to mixture frames.

    Mixture frames are queries, enrollment frames are keys and values;
    channels are reduced before attention and restored after.  The output
    is enrollment content indexed by mixture time.
    """

    def __init__(self, channels: int, factor: float):
        super().__init__()
        reduced = max(1, round(channels * factor))
        self.query = nn.Conv2d(channels, reduced, 1)
        self.key = nn.Conv2d(channels, reduced, 1)
        self.value = nn.Conv2d(channels, reduced, 1)
        self.restore = nn.Conv2d(reduced, channels, 1)
        self.reduced = reduced

    def forward(self, mix: torch.Tensor, enroll: torch.Tensor) -> torch.Tensor:
        if mix.shape[1] != enroll.shape[1] or mix.shape[3] != enroll.shape[3]:
            raise ShapeError(f"mixture {tuple(mix.shape)} and enrollment "
                             f"{tuple(enroll.shape)} disagree in channels or bins")
        n, _, t, f = mix.shape
        te = enroll.shape[2]
        q = self.query(mix).permute(0, 2, 1, 3).reshape(n, t, -1)
        k = self.key(enroll).permute(0, 2, 1, 3).reshape(n, te, -1)
        v = self.value(enroll).permute(0, 2, 1, 3).reshape(n, te, -1)
        attn = torch.softmax(q @ k.transpose(1, 2) / math.sqrt(q.shape[-1]), dim=-1)
        out = (attn @ v).reshape(n, t, self.reduced, f).permute(0, 2, 1, 3)
        return self.restore(out)


class GatedFusion(nn.Module):
    """Iterative gated refinement of the enrollment representation.

    e <- e + sigmoid(gate(cat(e, ctx))) * value(cat(e, ctx)), repeated with
    shared weights; ctx is the cross-attention output.
    """

    def __init__(self, channels: int, iterations: int):
        super().__init__()
        self.gate = nn.Conv2d(2 * channels, channels, 1)
        self.value = nn.Conv2d(2 * channels, channels, 1)
        self.iterations = iterations

    def forward(self, e0: torch.Tensor, ctx: torch.Tensor,
                iterations: int | None = None) -> torch.Tensor:
        if e0.shape != ctx.shape:
            raise ShapeError(f"enrollment {tuple(e0.shape)} vs context "
                             f"{tuple(ctx.shape)}")
        e = e0
        for _ in range(self.iterations if iterations is None else iterations):
            z = torch.cat([e, ctx], dim=1)
            e = e + torch.sigmoid(self.gate(z)) * self.value(z)
        return e


class GlobalLocalGate(nn.Module):
    """Feature recalibration by averaged global and local sigmoid gates.

    The global branch squeezes channel statistics through a bottleneck; the
    local branch is a depthwise temporal convolution plus pointwise mixing.
    Output shape equals input shape.
    """

    def __init__(self, channels: int, factor: float):
        super().__init__()
        r = max(1, round(channels / factor))
        self.squeeze = nn.Conv2d(channels, r, 1)
        self.act = nn.PReLU(1)
        self.expand = nn.Conv2d(r, channels, 1)
        self.local_dw = nn.Conv2d(channels, channels, (7, 1), padding=(3, 0),
                                  groups=channels)
        self.local_pw = nn.Conv2d(channels, channels, 1)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        g = torch.sigmoid(self.expand(self.act(
            self.squeeze(x.mean(dim=(2, 3), keepdim=True)))))
        l = torch.sigmoid(self.local_pw(self.local_dw(x)))
        return x * ((g + l) / 2.0)

    @torch.no_grad()
    def set_unit_gates(self) -> None:
        """Force both gates to exactly 1.0 (sigmoid saturates at 40 in
        float64), making the module a bitwise identity."""
        self.expand.weight.zero_()
        self.expand.bias.fill_(40.0)
        self.local_pw.weight.zero_()
        self.local_pw.bias.fill_(40.0)


class DenseBlock(nn.Module):
    """Four densely connected 3x3 conv layers plus a 1x1 transition."""

    def __init__(self, cin: int, cout: int):
        super().__init__()
        self.layers = nn.ModuleList()
        for i in range(_DENSE_LAYERS):
            self.layers.append(nn.Sequential(
                nn.Conv2d(cin + i * _GROWTH, _GROWTH, 3, padding=1),
                _gn(_GROWTH), nn.PReLU(1)))
        self.transition = nn.Sequential(
            nn.Conv2d(cin + _DENSE_LAYERS * _GROWTH, cout, 1),
            _gn(cout), nn.PReLU(1))

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        feats = x
        for layer in self.layers:
            feats = torch.cat([feats, layer(feats)], dim=1)
        return self.transition(feats)


class DenseDown(nn.Module):
    """Dense block followed by a stride-2 frequency downsampling conv."""

    def __init__(self, cin: int, cout: int):
        super().__init__()
        self.dense = DenseBlock(cin, cout)
        self.down = nn.Sequential(
            nn.Conv2d(cout, cout, 3, stride=(1, 2), padding=1),
            _gn(cout), nn.PReLU(1))

    def forward(self, x):
        return self.down(self.dense(x))


class ConvBlock(nn.Sequential):
    def __init__(self, cin: int, cout: int):
        super().__init__(nn.Conv2d(cin, cout, 3, padding=1),
                         _gn(cout), nn.PReLU(1))


class DeconvBlock(nn.Sequential):
    def __init__(self, cin: int, cout: int):
        super().__init__(nn.ConvTranspose2d(cin, cout, 3, padding=1),
                         _gn(cout), nn.PReLU(1))


class DenseUp(nn.Module):
    """Dense block followed by a stride-2 frequency upsampling deconv.

    With odd bin counts (fft even, bins = fft/2 + 1) the transposed conv
    mirrors the downsampling path exactly: F -> 2F - 1.
    """

    def __init__(self, cin: int, cout: int):
        super().__init__()
        self.dense = DenseBlock(cin, cout)
        self.up = nn.Sequential(
            nn.ConvTranspose2d(cout, cout, 3, stride=(1, 2), padding=1),
            _gn(cout), nn.PReLU(1))

    def forward(self, x):
        return self.up(self.dense(x))


class TemporalBlock(nn.Module):
    """Residual depthwise-separable 1-D conv block with dilation."""

    def __init__(self, channels: int, hidden: int, dilation: int):
        super().__init__()
        self.net = nn.Sequential(
            nn.Conv1d(channels, hidden, 1),
            nn.GroupNorm(hidden, hidden), nn.PReLU(1),
            nn.Conv1d(hidden, hidden, 3, padding=dilation, dilation=dilation,
                      groups=hidden),
            nn.GroupNorm(hidden, hidden), nn.PReLU(1),
            nn.Conv1d(hidden, channels, 1))

    def forward(self, x):
        return x + self.net(x)


class TemporalBottleneck(nn.Module):
    """Stack of dilated temporal blocks over flattened (channel, bin) rows.

    Dilation runs 2^0 .. 2^(blocks-1) within each layer and restarts per
    layer.
    """

    def __init__(self, channels: int, freq_bins: int, layers: int,
                 blocks_per_layer: int):
        super().__init__()
        cin = channels * freq_bins
        ct = 2 * channels
        hidden = 2 * ct
        self.in_proj = nn.Conv1d(cin, ct, 1)
        self.blocks = nn.ModuleList(
            TemporalBlock(ct, hidden, 2 ** i)
            for _ in range(layers) for i in range(blocks_per_layer))
        self.out_proj = nn.Conv1d(ct, cin, 1)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        n, c, t, f = x.shape
        y = x.permute(0, 1, 3, 2).reshape(n, c * f, t)
        y = self.in_proj(y)
        for block in self.blocks:
            y = block(y)
        y = self.out_proj(y)
        return y.reshape(n, c, f, t).permute(0, 1, 3, 2)


class PyramidPool(nn.Module):
    """Multi-scale context fusion: a global branch and branches pooled at
    scales 1, 2, 4, 8, concatenated with the input and fused by 1x1 conv."""

    SCALES = (None, 1, 2, 4, 8)

    def __init__(self, channels: int):
        super().__init__()
        p = max(1, channels // 4)
        self.branches = nn.ModuleList(nn.Conv2d(channels, p, 1)
                                      for _ in self.SCALES)
        self.fuse = nn.Sequential(
            nn.Conv2d(channels + len(self.SCALES) * p, channels, 1),
            _gn(channels), nn.PReLU(1))

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        _, _, t, f = x.shape
        outs = [x]
        for conv, scale in zip(self.branches, self.SCALES):
            if scale is None:
                pooled = x.mean(dim=(2, 3), keepdim=True)
            elif scale == 1:
                pooled = x
            else:
                pooled = tf.adaptive_avg_pool2d(
                    x, (max(1, -(-t // scale)), max(1, -(-f // scale))))
            y = conv(pooled)
            if y.shape[2:] != (t, f):
                y = tf.interpolate(y, size=(t, f), mode="nearest")
            outs.append(y)
        return self.fuse(torch.cat(outs, dim=1))


class EnhancerNet(nn.Module):
    """The full network; see the module docstring for the dataflow."""

    def __init__(self, config: ModelConfig):
        super().__init__()
        config.validate()
        self.config = config
        if config.passthrough:
            return
        b = config.base_channels
        num_down = _num_downsamples(config.num_encoder_blocks)
        num_plain = config.num_encoder_blocks - 1 - num_down

        self.stem = nn.Sequential(nn.Conv2d(2, b, 1), _gn(b), nn.PReLU(1))
        self.align = CrossAttention(b, config.attn_channel_factor)
        self.fuse = GatedFusion(b, config.fusion_iterations)

        encoder = [DenseBlock(b + 2, b)]
        encoder += [DenseDown(b, b) for _ in range(num_down)]
        encoder += [ConvBlock(b, b) for _ in range(num_plain)]
        self.encoder = nn.ModuleList(encoder)
        self.gates = nn.ModuleList(
            GlobalLocalGate(b, config.gate_channel_factor)
            for _ in range(config.num_encoder_blocks))

        f_enc = freq_after_downsampling(config.stft.fft_size,
                                        config.num_encoder_blocks)
        self.bottleneck = TemporalBottleneck(b, f_enc, config.tcn_layers,
                                             config.tcn_blocks_per_layer)
        self.pyramid = PyramidPool(b)

        decoder = [DeconvBlock(2 * b, b) for _ in range(num_plain)]
        decoder += [DenseUp(2 * b, b) for _ in range(num_down)]
        decoder += [DenseBlock(2 * b, b)]
        self.decoder = nn.ModuleList(decoder)
        self.head = nn.Conv2d(b, 2, 1)
        self.double()

    @staticmethod
    def _check(name: str, tensor: torch.Tensor) -> torch.Tensor:
        if not bool(torch.isfinite(tensor).all()):
            raise NumericalError(f"non-finite values after {name}")
        return tensor

    def analyze(self, wave: torch.Tensor) -> torch.Tensor:
        """Waveform -> compressed real/imag feature stack [2, frames, bins]."""
        spec = stft_tensor(wave, self.config.stft, self.config.sample_rate)
        return compress_ri(torch.stack([spec.real, spec.imag]),
                           self.config.drc_exponent)

    def synthesize(self, spec_ri: torch.Tensor, length: int) -> torch.Tensor:
        """Compressed [2, frames, bins] prediction -> waveform of length."""
        expanded = expand_ri(spec_ri, self.config.drc_exponent)
        return istft_tensor(torch.complex(expanded[0], expanded[1]),
                            self.config.stft, self.config.sample_rate, length)

    def forward(self, mix_wave: torch.Tensor,
                enroll_wave: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        """Returns (estimated waveform [len(mix_wave)], compressed-domain
        output spectrogram [2, frames, bins])."""
        length = mix_wave.numel()
        mix_ri = self._check("analysis", self.analyze(mix_wave))
        if self.config.passthrough:
            return self.synthesize(mix_ri, length), mix_ri
        enr_ri = self._check("enrollment analysis", self.analyze(enroll_wave))

        xm = self._check("stem", self.stem(mix_ri.unsqueeze(0)))
        xe = self._check("enrollment stem", self.stem(enr_ri.unsqueeze(0)))
        ctx = self._check("alignment", self.align(xm, xe))
        e0 = xe.mean(dim=2, keepdim=True).expand_as(ctx)
        fused = self._check("fusion", self.fuse(e0, ctx))

        x = torch.cat([fused, mix_ri.unsqueeze(0)], dim=1)
        skips = []
        for i, (block, gate) in enumerate(zip(self.encoder, self.gates)):
            x = self._check(f"encoder block {i}", gate(block(x)))
            skips.append(x)
        x = self._check("bottleneck", self.bottleneck(x))
        x = self._check("pyramid", self.pyramid(x))
        for i, block in enumerate(self.decoder):
            x = self._check(f"decoder block {i}",
                            block(torch.cat([skips[-1 - i], x], dim=1)))
        spec_ri = self._check("head", self.head(x)).squeeze(0)
        est = self._check("synthesis", self.synthesize(spec_ri, length))
        return est, spec_ri


def init_parameters(net: EnhancerNet, seed: int) -> None:
    """Deterministic fan-in uniform init from an explicit generator.

    Conv weights uniform in +-1/sqrt(fan_in), conv biases zero, norm scales
    one, gate biases zero (gates start half-open, not forced to identity).
    """
    gen = torch.Generator().manual_seed(seed)
    conv_types = (nn.Conv1d, nn.Conv2d, nn.ConvTranspose1d, nn.ConvTranspose2d)
    for module in net.modules():
        if isinstance(module, conv_types):
            fan_in, _ = nn.init._calculate_fan_in_and_fan_out(module.weight)
            bound = 1.0 / math.sqrt(fan_in)
            with torch.no_grad():
                module.weight.uniform_(-bound, bound, generator=gen)
                if module.bias is not None:
                    module.bias.zero_()
        elif isinstance(module, nn.GroupNorm):
            with torch.no_grad():
                module.weight.fill_(1.0)
                module.bias.zero_()
        elif isinstance(module, nn.PReLU):
            with torch.no_grad():
                module.weight.fill_(0.25)


# ---------------------------------------------------------------------------
# parameter persistence

@dataclass
class ParameterStore:
    """Named parameter arrays plus the config they instantiate."""

    arrays: dict
    config: ModelConfig
    rng_seed: int = 0


def init_store(config: ModelConfig, seed: int) -> ParameterStore:
    """Fresh randomly initialized parameters for config."""
    config.validate()
    if config.passthrough:
        return ParameterStore({}, config, seed)
    net = EnhancerNet(config)
    init_parameters(net, seed)
    arrays = {k: v.detach().numpy().copy() for k, v in net.state_dict().items()}
    return ParameterStore(arrays, config, seed)


def make_passthrough_store(config: ModelConfig) -> ParameterStore:
    """Parameter-free identity baseline over the same analysis chain."""
    return ParameterStore({}, replace(config, passthrough=True), 0)


def build_net(store: ParameterStore) -> EnhancerNet:
    """Instantiate the network and load the store, validating every shape."""
    net = EnhancerNet(store.config)
    expected = net.state_dict()
    if set(expected) != set(store.arrays):
        missing = set(expected) - set(store.arrays)
        extra = set(store.arrays) - set(expected)
        raise CheckpointError(f"parameter names disagree with the config "
                              f"header (missing {sorted(missing)[:3]}, "
                              f"unexpected {sorted(extra)[:3]})")
    state = {}
    for name, tensor in expected.items():
        arr = store.arrays[name]
        if tuple(arr.shape) != tuple(tensor.shape):
            raise CheckpointError(f"{name}: stored shape {tuple(arr.shape)} vs "
                                  f"configured {tuple(tensor.shape)}")
        if not np.all(np.isfinite(arr)):
            raise CheckpointError(f"{name}: non-finite stored values")
        state[name] = torch.from_numpy(np.ascontiguousarray(arr, np.float64))
    net.load_state_dict(state)
    return net


def count_parameters(store: ParameterStore) -> int:
    """Total element count across all stored arrays."""
    return int(sum(np.asarray(a).size for a in store.arrays.values()))


def save_store(store: ParameterStore, path) -> None:
    """Single-file archive: arrays plus a JSON config header."""
    header = json.dumps({"config": store.config.to_dict(),
                         "rng_seed": store.rng_seed})
    payload = {f"param/{k}": v for k, v in store.arrays.items()}
    payload["__header__"] = np.frombuffer(header.encode(), np.uint8)
    with open(path, "wb") as f:
        np.savez(f, **payload)


def load_store(path) -> ParameterStore:
    """Inverse of save_store; raises CheckpointError on any inconsistency."""
    try:
        with np.load(path) as archive:
            if "__header__" not in archive:
                raise CheckpointError(f"{path}: missing config header")
            header = json.loads(bytes(archive["__header__"]).decode())
            arrays = {k[len("param/"):]: archive[k] for k in archive.files
                      if k.startswith("param/")}
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    try:
        config = ModelConfig.from_dict(header["config"])
        store = ParameterStore(arrays, config, int(header.get("rng_seed", 0)))
    except (TypeError, KeyError) as exc:
        raise CheckpointError(f"bad config header in {path}: {exc}") from exc
    build_net(store)  # shape validation against the config
    return store


# ---------------------------------------------------------------------------
# functional inference surface

def forward(mixture: Waveform, clue,
            store: ParameterStore) -> tuple[Waveform, ComplexSpectrogram]:
    """Run inference with stored parameters.

    clue may be an enrollment-clue object carrying .wave or a bare
    Waveform; output is (enhanced waveform of the mixture's length, the
    compressed-domain complex spectrogram prediction).
    """
    enroll = getattr(clue, "wave", clue)
    if not isinstance(enroll, Waveform):
        raise InvalidInput("clue must carry an enrollment waveform")
    if mixture.sample_rate != store.config.sample_rate:
        raise InvalidInput(f"mixture rate {mixture.sample_rate} != model rate "
                           f"{store.config.sample_rate}")
    if enroll.sample_rate != store.config.sample_rate:
        raise InvalidInput(f"enrollment rate {enroll.sample_rate} != model "
                           f"rate {store.config.sample_rate}")
    net = build_net(store)
    with torch.no_grad():
        est, spec_ri = net(torch.from_numpy(mixture.samples),
                           torch.from_numpy(enroll.samples))
    spec = ComplexSpectrogram(
        (spec_ri[0] + 1j * spec_ri[1]).numpy(), store.config.stft,
        store.config.sample_rate, compressed=True)
    return Waveform(est.numpy(), store.config.sample_rate), spec
