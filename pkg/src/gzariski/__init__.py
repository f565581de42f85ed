"""Finite graded rings and modules, their (quasi-)prime spectra and topologies."""
from .checks import CATALOG, run_check_suite
from .corpus import builtin_corpus, corpus_instance
from .instance import build, load, parse_instance, serialize
from .maps import map_profile, module_profile, natural_maps
from .module import (classify_graded_submodule, colon_ideal, enumerate_graded_submodules,
                     validate_graded_module)
from .report import emit_report
from .ring import (classify_graded_ideal, enumerate_graded_ideals, graded_radical,
                   validate_graded_ring)
from .spectrum import (basic_open, build_spectrum, build_topology, closure,
                       intersection_of_points, topology_profile, variety, zqp_radical)

__version__ = "0.1.0"
