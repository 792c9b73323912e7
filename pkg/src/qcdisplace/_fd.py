import numpy as np


def wirtinger(fn, z, h):
    """Central-difference estimates of (df/dz, df/dzbar) at ``z``."""
    z = np.asarray(z, dtype=complex)
    fx = (fn(z + h) - fn(z - h)) / (2.0 * h)
    fy = (fn(z + 1j * h) - fn(z - 1j * h)) / (2.0 * h)
    return 0.5 * (fx - 1j * fy), 0.5 * (fx + 1j * fy)
