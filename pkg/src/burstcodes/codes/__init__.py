"""Burst-correcting code families: membership, syndromes and decoders."""
from .bin_tt1 import ParamsBinTT1, bin_tt1_candidates, bin_tt1_syndrome, decode_bin_tt1, member_bin_tt1, params_bin_tt1_for
from .c22 import ParamsC22, c22_modulus, c22_syndrome, decode_c22, member_c22, params_c22_for, weighted_vt
from .common import DecodeFailure, UniquenessViolation, fit_window
from .families import (DEFAULT_CAP, FAMILIES, CapExceeded, Shape, all_words, check_cap, class_sizes, decode, family_of,
                       member, param_search, params_from_dict, params_from_json, params_to_dict, params_to_json,
                       pigeonhole_redundancy, shape_of)
from .lifted import (ParamsTS, ParamsTT, ctt_syndrome, cts_syndrome, decode_ctt, decode_cts, lifted_bound,
                     lifted_burst_length, member_ctt, member_cts, params_ctt_for, params_cts_for)
from .qary_tt1 import (ParamsQaryTT1, burst_positions, context_sums, decode_qary_tt1, member_qary_tt1,
                       params_qary_tt1_for, qary_tt1_syndrome, signature_bound)

__all__ = [name for name in dir() if not name.startswith("_")]
