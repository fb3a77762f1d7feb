import numpy as np

from uqdp.noise import NoiseSpectrum

TWO_PI = 2.0 * np.pi

# paper operating point: E_z/(2 pi hbar) = 5 GHz, A = 2e-4 E_z,
# omega_ir/2pi = 1 Hz, omega_uv/2pi = 0.1 MHz, grid spacing 1e-4 MHz
E_Z = TWO_PI * 5e9
NOISE_AMPLITUDE = 2e-4 * E_Z


def paper_spectrum(eta, amplitude=NOISE_AMPLITUDE):
    return NoiseSpectrum(
        amplitude=amplitude,
        power_angle=eta,
        omega_ir=TWO_PI * 1.0,
        omega_uv=TWO_PI * 1e5,
        delta_omega=TWO_PI * 100.0,
    )
