"""Codes correcting one (t,s)-burst: t consecutive deletions plus s insertions at the same place."""
from . import applications, bounds, channel, codes, core, permutation, verify
from .bounds import ball_size_formula, sphere_packing_redundancy
from .channel import BurstEvent, apply_burst, ball
from .codes import DecodeFailure, UniquenessViolation, decode, member, param_search

__version__ = "0.1.0"
