"""Quaternionic Wiener algebras on the circle and on the line, with their Toeplitz and Wiener-Hopf operators."""

from .continuous import CElement, TGrid, cstar, invert_c, invert_plus_c, is_invertible_c, omega_c
from .discrete import (
    QSeries,
    classify_zeros,
    invert,
    invert_plus,
    is_invertible,
    is_invertible_plus,
    omega,
    spectral_factorize,
    star,
)
from .errors import *  # noqa: F401,F403
from .hardy import HardyElement, LineElement, hardy_norm, project_P, project_Q, wh_apply, wh_product_test
from .kernels import BACKEND
from .quat import SliceBasis, chi, qmul
from .toeplitz import ToeplitzSection, toeplitz_apply, toeplitz_product_test

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CElement",
    "HardyElement",
    "LineElement",
    "QSeries",
    "SliceBasis",
    "TGrid",
    "ToeplitzSection",
    "chi",
    "classify_zeros",
    "cstar",
    "hardy_norm",
    "invert",
    "invert_c",
    "invert_plus",
    "invert_plus_c",
    "is_invertible",
    "is_invertible_c",
    "is_invertible_plus",
    "omega",
    "omega_c",
    "project_P",
    "project_Q",
    "qmul",
    "spectral_factorize",
    "star",
    "toeplitz_apply",
    "toeplitz_product_test",
    "wh_apply",
    "wh_product_test",
]
