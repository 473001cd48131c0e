"""Static input data shipped with the package.

The resolution rows cannot be derived by this engine; they are inputs.  The
reference tables are kept only to diff computed rows against.
"""

from __future__ import annotations

from .graded import GradedDims

VARIETIES = ("M", "K")

# even Betti numbers b_0, b_2, ... of the symplectic resolutions
RESOLUTION_ROWS = {
    "M": GradedDims.even([1, 24, 300, 2899, 22150, 126156, 22150, 2899, 300, 24, 1]),
    "K": GradedDims.even([1, 8, 199, 1504, 199, 8, 1]),
}

RESOLUTION_SOURCES = {
    "M": "de Cataldo-Rapagnetta-Sacca 2021, Betti numbers of the OG10 resolution",
    "K": "Mongardi-Rapagnetta-Sacca 2018, Betti numbers of the OG6 resolution",
}

RESOLUTION_B2 = {"M": 24, "K": 8}

# even-degree reference rows, degrees 0, 2, ..., 2 dim Y
REFERENCE_TABLES = {
    "M": {
        "Omega": [1, 23, 276, 23, 1, 0, 0, 0, 0, 0, 0],
        "OmegaBar": [1, 24, 300, 323, 323, 300, 24, 1, 0, 0, 0],
        "OmegaTilde": [1, 24, 300, 323, 323, 300, 24, 1, 0, 0, 0],
        "OmegaHat": [1, 25, 324, 623, 646, 623, 324, 25, 1, 0, 0],
        "Sigma": [1, 23, 552, 6371, 38756, 6371, 552, 23, 1, 0, 0],
        "SigmaBar": [1, 24, 576, 6671, 39078, 6671, 576, 24, 1, 0, 0],
        "SigmaTilde": [1, 24, 576, 6947, 45426, 45426, 6947, 576, 24, 1, 0],
        "SigmaHat": [1, 25, 600, 7247, 45749, 45749, 7247, 600, 25, 1, 0],
        "Mtilde": [1, 24, 300, 2899, 22150, 126156, 22150, 2899, 300, 24, 1],
    },
    "K": {
        "Omega": [256, 0, 0, 0, 0, 0, 0],
        "OmegaBar": [256, 256, 256, 256, 0, 0, 0],
        "OmegaTilde": [256, 256, 256, 256, 0, 0, 0],
        "OmegaHat": [256, 512, 512, 512, 256, 0, 0],
        "Sigma": [1, 28, 70, 28, 1, 0, 0],
        "SigmaBar": [1, 284, 326, 284, 1, 0, 0],
        "SigmaTilde": [1, 29, 354, 354, 29, 1, 0],
        "SigmaHat": [1, 285, 610, 610, 285, 1, 0],
        "Ktilde": [1, 8, 199, 1504, 199, 8, 1],
    },
}

# Stated Betti bounds as (lower, upper); None marks an endpoint left unstated.
# The K "cor1" b2 entry is printed as 23 at its source, a slip for 7.
STATED_BOUNDS = {
    "M": {
        "cor1": {0: (1, 1), 1: (0, 0), 2: (23, 23), 3: (0, 0), 4: (276, 276), 5: (0, 0),
                 6: (2323, 2599), 7: (None, 276), 8: (15480, 21828), 9: (None, 6348),
                 10: (87101, 125856), 11: (None, 38755), 12: (15755, 22126), 13: (None, 6371),
                 14: (2346, 2898), 15: (None, 552), 16: (277, 300), 17: (None, 23),
                 18: (23, 24), 19: (None, 1), 20: (1, 1)},
        "cor2": {10: (None, 117877), 11: (None, 30776), 12: (None, 20426), 13: (None, 4671),
                 14: (None, 2623), 15: (None, 277), 16: (277, 277), 17: (0, 0), 18: (23, 23),
                 19: (0, 0)},
    },
    "K": {
        "cor1": {0: (1, 1), 1: (0, 0), 2: (7, 7), 3: (0, 0), 4: (28, 198), 5: (113, 283),
                 6: (1178, 1503), 7: (None, 325), 8: (171, 199), 9: (None, 28), 10: (7, 8),
                 11: (None, 1), 12: (1, 1)},
        "prop2": {4: (28, 191), 5: (113, 276), 6: (1178, 1502), 7: (None, 324), 10: (7, 7),
                  11: (0, 0)},
    },
}

STATED_EULER = {"M": 123606, "K": 1208}
