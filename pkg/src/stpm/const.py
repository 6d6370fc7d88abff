# -*- coding: utf-8 -*-
"""Consts for the seasonal temporal pattern mining package."""
import math

# Output schema of the patterns JSON document
SCHEMA_VERSION = 1

# CSV ingestion
TIMESTAMP_COLUMN = "timestamp"
DEFAULT_TIMEZONE = "UTC"

# Relation defaults (granule units)
DEFAULT_EPSILON = 0
DEFAULT_MIN_OVERLAP = 1

# Mining defaults
DEFAULT_MAX_PATTERN_SIZE = 3
DEFAULT_THREADS = 1

# Oracle limits
ORACLE_MAX_EVENTS = 16
ORACLE_MAX_PATTERN_SIZE = 3

# Numeric tolerances
PROBABILITY_TOLERANCE = 1e-9
LAMBERT_TOLERANCE = 1e-12
LAMBERT_MAX_ITERATIONS = 64
BRANCH_POINT = -1.0 / math.e

# Run modes
MODE_EXACT = "exact"
MODE_APPROX = "approx"
MODES = (MODE_EXACT, MODE_APPROX)

# Pruning variants reported by the benchmark: name -> (apriori, transitivity)
PRUNING_VARIANTS = {
    "none": (False, False),
    "apriori": (True, False),
    "transitivity": (False, True),
    "all": (True, True),
}

# Benchmark sweep axes: thresholds map to their season field, sizes regenerate data
SWEEP_THRESHOLDS = {
    "min-season": "min_season",
    "min-density": "min_density",
    "max-period": "max_period",
}
SWEEP_SIZES = ("granules", "series")
SWEEP_AXES = (*SWEEP_THRESHOLDS, *SWEEP_SIZES)
