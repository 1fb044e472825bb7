# Import order matters: fraclap imports modulus.modulus, and modulus
# pulls in picard, heatkernel and evolve
from .fields import TorusGrid, TorusField, PairSample, PairBatch
from .modulus import Modulus, TimeModulus, TheoryConstants
from .modulus import BreakthroughReport, ModulusConstructionError
from .modulus import omega_base, fit_B, construct_constants
from .modulus import assemble_time_modulus, breakthrough_scan
from .fraclap import FracOrder, MarginReport, CheckGroup, QuadratureError
from .fraclap import apply_spectral, apply_lattice_sum, apply_pv_quadrature
from .heatkernel import HeatKernelParams, heat_propagate, duhamel_step
from .heatkernel import gronwall_bound
from .picard import PdeParams, PicardConstants, PicardSequence
from .picard import PicardBoundError, compute_constants, iterate
from .evolve import SolverConfig, RunReport, StopReason, SolverOverflowError
from .evolve import PseudoSpectralSolver, step, run
from .harness import ConfigError, ExperimentConfig, Harness, Suite
from .harness import SuiteResult, parse_config, run_suite, emit_report

__all__ = ["TorusGrid",
           "TorusField",
           "PairSample",
           "PairBatch",
           "Modulus",
           "TimeModulus",
           "TheoryConstants",
           "BreakthroughReport",
           "ModulusConstructionError",
           "omega_base",
           "fit_B",
           "construct_constants",
           "assemble_time_modulus",
           "breakthrough_scan",
           "FracOrder",
           "MarginReport",
           "CheckGroup",
           "QuadratureError",
           "apply_spectral",
           "apply_lattice_sum",
           "apply_pv_quadrature",
           "HeatKernelParams",
           "heat_propagate",
           "duhamel_step",
           "gronwall_bound",
           "PdeParams",
           "PicardConstants",
           "PicardSequence",
           "PicardBoundError",
           "compute_constants",
           "iterate",
           "SolverConfig",
           "RunReport",
           "StopReason",
           "SolverOverflowError",
           "PseudoSpectralSolver",
           "step",
           "run",
           "ConfigError",
           "ExperimentConfig",
           "Harness",
           "Suite",
           "SuiteResult",
           "parse_config",
           "run_suite",
           "emit_report"]
