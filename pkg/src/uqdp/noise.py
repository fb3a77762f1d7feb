"""Seeded 1/f classical noise trajectories.

A trajectory is a finite cosine sum

    V(t) = sum_k a(w_k) * cos(w_k t + phi_k) * dw_k

over a frequency grid covering [omega_ir, omega_uv].  The amplitudes a(w_k)
are zero-mean Gaussians whose variance matches the target spectral density
S(w) (transverse S_x = A^2 cos^2(eta)/w, longitudinal S_z = A^2 sin^2(eta)/w),
and the phases are uniform on [0, 2pi).  All randomness comes from a
counter-based Philox generator keyed on (seed, channel), so ensembles can be
generated in any order with bitwise-identical results.

The grid is uniform with spacing delta_omega at the top and densified
logarithmically (equal power per decade) between omega_ir and the lowest
uniform cell, keeping the total component count bounded.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

MAX_COMPONENTS = 4096
LOG_POINTS_PER_DECADE = 48

_AXIS_CODE = {"x": 0, "y": 1, "z": 2}
_SEED_DOMAIN = 0x75716470  # disambiguates these draws from any other seeded use


@dataclass(frozen=True)
class NoiseChannel:
    """One noise line: coupling axis ('x', 'y' or 'z') on a 0-based qubit."""

    axis: str
    qubit: int

    def __post_init__(self):
        if self.axis not in _AXIS_CODE:
            raise ValueError(f"unknown noise axis {self.axis!r}")
        if self.qubit < 0:
            raise ValueError("qubit index must be non-negative")


@dataclass(frozen=True)
class NoiseSpectrum:
    """1/f spectrum parameters.

    amplitude is the total noise amplitude A in energy units (rad/s with
    hbar = 1); power_angle is eta, distributing A^2 between the transverse
    (cos^2 eta) and longitudinal (sin^2 eta) components.
    """

    amplitude: float
    power_angle: float
    omega_ir: float
    omega_uv: float
    delta_omega: float

    def __post_init__(self):
        if not 0 < self.omega_ir < self.omega_uv:
            raise ValueError("require 0 < omega_ir < omega_uv")
        if self.delta_omega <= 0:
            raise ValueError("delta_omega must be positive")
        if self.delta_omega > self.omega_uv - self.omega_ir:
            raise ValueError("empty noise grid: delta_omega exceeds omega_uv - omega_ir")
        if self.amplitude < 0:
            raise ValueError("amplitude must be non-negative")
        if not 0 <= self.power_angle <= np.pi / 2:
            raise ValueError("power_angle must lie in [0, pi/2]")

    def density(self, axis: str, omega):
        """One-sided spectral density of the given channel axis at omega."""
        omega = np.asarray(omega, dtype=float)
        if axis in ("x", "y"):
            power = self.amplitude**2 * np.cos(self.power_angle) ** 2
        elif axis == "z":
            power = self.amplitude**2 * np.sin(self.power_angle) ** 2
        else:
            raise ValueError(f"unknown noise axis {axis!r}")
        return power / omega


def frequency_grid(spec: NoiseSpectrum) -> tuple[np.ndarray, np.ndarray]:
    """Frequency nodes and cell widths (omega_k, dw_k) for a spectrum.

    Uniform nodes k * delta_omega down to the first node above omega_ir, then
    a geometric section (equal power per decade) from omega_ir up to the edge
    of the lowest uniform cell.
    """
    dw = spec.delta_omega
    k_min = max(1, int(np.ceil(spec.omega_ir / dw - 1e-12)))
    k_max = int(np.floor(spec.omega_uv / dw + 1e-12))
    if k_max < k_min:
        raise ValueError("empty noise grid")
    uniform = np.arange(k_min, k_max + 1) * dw

    low_edge = (k_min - 0.5) * dw
    if spec.omega_ir < low_edge:
        decades = np.log10(low_edge / spec.omega_ir)
        n_log = max(8, int(np.ceil(LOG_POINTS_PER_DECADE * decades)))
        bounds = np.geomspace(spec.omega_ir, low_edge, n_log + 1)
        log_nodes = np.sqrt(bounds[:-1] * bounds[1:])
        log_widths = np.diff(bounds)
    else:
        log_nodes = np.empty(0)
        log_widths = np.empty(0)

    omega = np.concatenate([log_nodes, uniform])
    widths = np.concatenate([log_widths, np.full(uniform.shape, dw)])
    if omega.size > MAX_COMPONENTS:
        raise ValueError(
            f"noise grid has {omega.size} components (max {MAX_COMPONENTS}); "
            "increase delta_omega or narrow the band"
        )
    return omega, widths


@dataclass(frozen=True)
class NoiseTrajectory:
    """One sampled realization V(t) of a noise channel."""

    channel: NoiseChannel
    omega: np.ndarray
    delta: np.ndarray
    amplitudes: np.ndarray  # a(w_k), energy units
    phases: np.ndarray
    weights: np.ndarray = field(init=False)  # a(w_k) * dw_k

    def __post_init__(self):
        object.__setattr__(self, "weights", self.amplitudes * self.delta)

    def evaluate(self, t) -> np.ndarray:
        """V(t) for scalar or array t."""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        phase = np.outer(t, self.omega) + self.phases
        return np.cos(phase) @ self.weights

    def quasistatic_value(self) -> float:
        return float(np.cos(self.phases) @ self.weights)


def _rng_for(seed, channel: NoiseChannel) -> np.random.Generator:
    parts = (int(seed),) if np.isscalar(seed) else tuple(int(s) for s in seed)
    entropy = parts + (channel.qubit, _AXIS_CODE[channel.axis], _SEED_DOMAIN)
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))


def sample_trajectory(spec: NoiseSpectrum, channel: NoiseChannel, seed) -> NoiseTrajectory:
    """Draw one trajectory; identical (seed, channel, spec) gives identical output.

    Var[a(w_k)] = 2 S(w_k) / dw_k, which makes the per-component power
    a(w_k)^2 dw_k^2 / 2 average to S(w_k) dw_k, the Riemann cell of the
    target spectrum.
    """
    omega, widths = frequency_grid(spec)
    rng = _rng_for(seed, channel)
    sigma = np.sqrt(2.0 * spec.density(channel.axis, omega) / widths)
    amplitudes = rng.standard_normal(omega.size) * sigma
    phases = rng.uniform(0.0, 2.0 * np.pi, omega.size)
    return NoiseTrajectory(channel, omega, widths, amplitudes, phases)


def grid_variance(spec: NoiseSpectrum, axis: str) -> float:
    """Variance of V(0) implied by the discretized spectrum: sum S(w_k) dw_k."""
    omega, widths = frequency_grid(spec)
    return float(np.sum(spec.density(axis, omega) * widths))


def evaluate_many(
    trajectories: list[NoiseTrajectory],
    times: np.ndarray,
    time_chunk: int = 4096,
) -> np.ndarray:
    """Evaluate several same-grid trajectories on a shared time grid.

    Returns an array of shape (len(times), len(trajectories)).  The cos/sin
    phase tables over the shared grid are computed once per time chunk, so
    the cost is two matrix products instead of len(trajectories) full
    cosine evaluations.
    """
    times = np.asarray(times, dtype=float)
    if not trajectories:
        return np.zeros((times.size, 0))
    omega = trajectories[0].omega
    for tr in trajectories[1:]:
        if tr.omega.shape != omega.shape or not np.array_equal(tr.omega, omega):
            raise ValueError("trajectories must share one frequency grid")
    p = np.column_stack([tr.weights * np.cos(tr.phases) for tr in trajectories])
    q = np.column_stack([tr.weights * np.sin(tr.phases) for tr in trajectories])
    out = np.empty((times.size, len(trajectories)))
    for start in range(0, times.size, time_chunk):
        block = times[start : start + time_chunk]
        theta = np.outer(block, omega)
        out[start : start + len(block)] = np.cos(theta) @ p - np.sin(theta) @ q
    return out


def empirical_spectrum(
    trajectories: list[NoiseTrajectory],
    time_grid: np.ndarray,
    bins_per_decade: int = 24,
    min_bin_width: float | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Ensemble-averaged one-sided periodogram on log-spaced frequency bins.

    The time grid must be uniform, span at least ten periods of the highest
    grid frequency, and sample above its Nyquist rate.  Returns (omega_bins,
    psd) with the same normalization as NoiseSpectrum.density, i.e. the psd
    integrates (over omega) to the signal variance.

    Binning is power conserving: the periodogram power falling inside a bin
    is divided by the bin width.  Bins narrower than the trajectory comb
    spacing would alias the discrete frequency grid, so adjacent log bins
    are merged up to min_bin_width (default: 1.5x the widest grid cell).
    """
    if len(trajectories) < 100:
        raise ValueError("need at least 100 trajectories for a spectrum estimate")
    t = np.asarray(time_grid, dtype=float)
    dt = t[1] - t[0]
    if not np.allclose(np.diff(t), dt, rtol=1e-9):
        raise ValueError("time grid must be uniform")
    omega_max = float(np.max(trajectories[0].omega))
    if t[-1] - t[0] < 10.0 * 2.0 * np.pi / omega_max:
        raise ValueError("time grid too short to resolve the spectrum")
    if dt > np.pi / omega_max:
        raise ValueError("time step violates the Nyquist limit for omega_uv")
    if min_bin_width is None:
        min_bin_width = 1.5 * float(np.max(trajectories[0].delta))

    values = evaluate_many(trajectories, t)
    window = np.hanning(values.shape[0])
    spec = np.fft.rfft(values * window[:, None], axis=0)
    # Welch normalization: one-sided density in angular frequency
    psd = (np.abs(spec) ** 2).mean(axis=1) * dt / (np.pi * np.sum(window**2))
    freqs = 2.0 * np.pi * np.fft.rfftfreq(values.shape[0], d=dt)
    d_fft = freqs[1] - freqs[0]

    lo, hi = freqs[1], freqs[-1]
    n_bins = max(4, int(np.log10(hi / lo) * bins_per_decade))
    raw_edges = np.geomspace(lo, hi, n_bins + 1)
    edges = [raw_edges[0]]
    for e in raw_edges[1:]:
        if e - edges[-1] >= min_bin_width or e == raw_edges[-1]:
            edges.append(e)
    edges = np.array(edges)

    idx = np.digitize(freqs, edges) - 1
    centers, density = [], []
    for b in range(edges.size - 1):
        mask = idx == b
        if mask.any():
            centers.append(np.sqrt(edges[b] * edges[b + 1]))
            density.append(np.sum(psd[mask]) * d_fft / (edges[b + 1] - edges[b]))
    return np.array(centers), np.array(density)


def loglog_slope(omega: np.ndarray, psd: np.ndarray, band: tuple[float, float]) -> float:
    """Least-squares slope of log(psd) vs log(omega) restricted to a band."""
    mask = (omega >= band[0]) & (omega <= band[1]) & (psd > 0)
    if np.count_nonzero(mask) < 3:
        raise ValueError("too few spectrum points in the requested band")
    coeffs = np.polyfit(np.log(omega[mask]), np.log(psd[mask]), 1)
    return float(coeffs[0])
