"""Every check the harness knows, in the order results are committed

Each check carries exactly one reference: a slug naming the property it
verifies. audit_registry runs at Harness start up.
"""

from functools import partial
from typing import Callable, Dict, List, Sequence, Tuple

from .evolve_checks import check_linear_oracle, check_manufactured_order
from .evolve_checks import check_maximum_principle, check_smoothing
from .evolve_checks import check_sup_norm
from .experiment_config import ExperimentConfig
from .kernel_checks import check_gronwall, check_kernel_identities
from .kernel_checks import check_periodization
from .lemma_checks import Outcome
from .lemma_checks import check_dissipation, check_far_field_decay
from .lemma_checks import check_gradient_strict, check_interpolation_sweep
from .lemma_checks import check_modulus_transfer_sampled
from .lemma_checks import check_normalizing_constant
from .lemma_checks import check_operator_equivalence, check_pv_quadrature
from .lemma_checks import check_strict_modulus_fit, check_tail
from .lemma_checks import check_touching
from .picard_checks import check_contraction, check_continuous_dependence
from .picard_checks import check_fixed_point, check_linear_limit
from .picard_checks import check_uniform_bounds
from .presets import THEOREM_PRESETS
from .suite import Suite
from .suite_result import SuiteResult
from .theorem_checks import check_gradient_bound, check_no_breakthrough
from .theorem_checks import check_preset_dissipation


CheckFunc = Callable[[ExperimentConfig, SuiteResult], Outcome]

# Reference slug to the property it names, in summary order
REFERENCES: Dict[str, str] = {
    "normalizing-constant":
        "C_{d,a} by quadrature equals its closed form",
    "operator-equivalence":
        "lattice sum and Fourier multiplier give the same operator",
    "pv-quadrature":
        "whole space singular integral at a point",
    "far-field-decay":
        "(-Lap)^a of a decaying function decays like |x|^{-d-2a}",
    "interpolation-bound":
        "sup norm of (-Lap)^a by sup norms of theta and grad theta",
    "modulus-transfer":
        "(-Lap)^a theta inherits the transferred modulus",
    "strict-modulus-fit":
        "theta0 has strict modulus omega(B |x - y|)",
    "gradient-strict-bound":
        "strict modulus bounds the gradient by omega'(0)",
    "touching-derivatives":
        "derivatives at a touching pair",
    "dissipation-inequality":
        "the breakthrough inequality is strictly negative",
    "tail-bound":
        "closed bound on the transferred modulus beyond delta0",
    "heat-kernel-identities":
        "mass, gradient, time derivative and difference integrals",
    "heat-periodization":
        "spectral heat flow equals the periodized kernel",
    "gronwall-inequality":
        "Gronwall type inequality with a singular kernel",
    "picard-uniform-bounds":
        "Picard iterates stay in the M0 / M1 box",
    "picard-contraction":
        "successive Picard distances fall below 2^{-(k-1)}",
    "picard-fixed-point":
        "the Picard limit is a fixed point of the map",
    "picard-linear-limit":
        "lambda = 0 iterates converge to the multiplier solution",
    "continuous-dependence":
        "W^{1,inf} amplification below the Gronwall bound",
    "linear-oracle":
        "lambda = 0 runs match the exact multiplier solution",
    "manufactured-order":
        "second order in time on a manufactured solution",
    "gradient-maximum-principle":
        "mu = 0 keeps the gradient maximum nonincreasing",
    "parabolic-smoothing":
        "Holder seminorm of grad theta after rough data",
    "sup-norm-regularity":
        "sup norm below the explicit Gronwall solution",
    "gradient-bound":
        "|grad theta(t)|_inf < B e^{C0 t}",
    "no-breakthrough":
        "the time dependent modulus is never reached"}

LEMMAS = (Suite.LEMMAS,)
KERNEL = (Suite.KERNEL,)
PICARD = (Suite.PICARD,)
EVOLVE = (Suite.EVOLVE,)
THEOREM = (Suite.THEOREM12,)


class CheckEntry:
    """A registered check and the suites that run it"""

    __slots__ = ("check_id", "reference", "suites", "func")

    def __init__(self,
                 check_id: str,
                 reference: str,
                 suites: Tuple[Suite, ...],
                 func: CheckFunc):

        self.check_id: str = check_id
        self.reference: str = reference
        self.suites: Tuple[Suite, ...] = suites
        self.func: CheckFunc = func

    def __call__(self,
                 config: ExperimentConfig,
                 result: SuiteResult) -> Outcome:
        return self.func(config, result)

    def __repr__(self) -> str:
        return f"CheckEntry({self.check_id}, {self.reference})"


def _theorem_entries() -> List[CheckEntry]:
    entries = [
        CheckEntry("gradient_bound_configured", "gradient-bound", THEOREM,
                   check_gradient_bound),
        CheckEntry("no_breakthrough_configured", "no-breakthrough", THEOREM,
                   check_no_breakthrough)]
    for preset in THEOREM_PRESETS:
        entries.extend([
            CheckEntry(f"dissipation_{preset.name}",
                       "dissipation-inequality", THEOREM,
                       partial(check_preset_dissipation, preset=preset)),
            CheckEntry(f"gradient_bound_{preset.name}", "gradient-bound",
                       THEOREM, partial(check_gradient_bound, preset=preset)),
            CheckEntry(f"no_breakthrough_{preset.name}", "no-breakthrough",
                       THEOREM,
                       partial(check_no_breakthrough, preset=preset))])
    return entries


REGISTRY: Tuple[CheckEntry, ...] = tuple([
    CheckEntry("normalizing_constant", "normalizing-constant", LEMMAS,
               check_normalizing_constant),
    CheckEntry("operator_equivalence", "operator-equivalence", LEMMAS,
               check_operator_equivalence),
    CheckEntry("pv_quadrature", "pv-quadrature", LEMMAS,
               check_pv_quadrature),
    CheckEntry("far_field_decay", "far-field-decay", LEMMAS,
               check_far_field_decay),
    CheckEntry("interpolation_bound", "interpolation-bound", LEMMAS,
               check_interpolation_sweep),
    CheckEntry("strict_modulus_fit", "strict-modulus-fit", LEMMAS,
               check_strict_modulus_fit),
    CheckEntry("modulus_transfer", "modulus-transfer", LEMMAS,
               check_modulus_transfer_sampled),
    CheckEntry("gradient_strict_bound", "gradient-strict-bound", LEMMAS,
               check_gradient_strict),
    CheckEntry("touching_derivatives", "touching-derivatives", LEMMAS,
               check_touching),
    CheckEntry("dissipation_inequality", "dissipation-inequality",
               LEMMAS + THEOREM, check_dissipation),
    CheckEntry("tail_bound", "tail-bound", LEMMAS, check_tail),
    CheckEntry("heat_kernel_identities", "heat-kernel-identities", KERNEL,
               check_kernel_identities),
    CheckEntry("heat_periodization", "heat-periodization", KERNEL,
               check_periodization),
    CheckEntry("gronwall_inequality", "gronwall-inequality", KERNEL,
               check_gronwall),
    CheckEntry("picard_uniform_bounds", "picard-uniform-bounds", PICARD,
               check_uniform_bounds),
    CheckEntry("picard_contraction", "picard-contraction", PICARD,
               check_contraction),
    CheckEntry("picard_fixed_point", "picard-fixed-point", PICARD,
               check_fixed_point),
    CheckEntry("picard_linear_limit", "picard-linear-limit", PICARD,
               check_linear_limit),
    CheckEntry("continuous_dependence", "continuous-dependence", PICARD,
               check_continuous_dependence),
    CheckEntry("linear_oracle", "linear-oracle", EVOLVE,
               check_linear_oracle),
    CheckEntry("manufactured_order", "manufactured-order", EVOLVE,
               check_manufactured_order),
    CheckEntry("gradient_maximum_principle", "gradient-maximum-principle",
               EVOLVE, check_maximum_principle),
    CheckEntry("parabolic_smoothing", "parabolic-smoothing", EVOLVE,
               check_smoothing),
    CheckEntry("sup_norm_regularity", "sup-norm-regularity", EVOLVE,
               check_sup_norm)]
    + _theorem_entries())

# Checks of the single evolution subcommand
RUN_CHECK_IDS = ("gradient_bound_configured", "no_breakthrough_configured",
                 "sup_norm_regularity")


def entries_for(suite: Suite,
                registry: Sequence[CheckEntry] = REGISTRY
                ) -> List[CheckEntry]:
    """Entries run by suite, in registry order. ALL runs every entry"""

    if suite == Suite.ALL:
        return list(registry)
    return [entry for entry in registry if suite in entry.suites]


def entries_by_id(check_ids: Sequence[str],
                  registry: Sequence[CheckEntry] = REGISTRY
                  ) -> List[CheckEntry]:
    wanted = set(check_ids)
    entries = [entry for entry in registry if entry.check_id in wanted]
    missing = wanted - {entry.check_id for entry in entries}
    if missing:
        raise KeyError(f"unregistered checks: {sorted(missing)}")
    return entries


def audit_registry(registry: Sequence[CheckEntry] = REGISTRY,
                   references: Sequence[str] = tuple(REFERENCES)):
    """Unique ids, known references, and every reference covered"""

    ids = [entry.check_id for entry in registry]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    assert not duplicates, f"duplicate check ids {duplicates}"
    unknown = sorted({entry.reference for entry in registry
                      if entry.reference not in references})
    assert not unknown, f"checks cite unknown references {unknown}"
    uncovered = [ref for ref in references
                 if not any(entry.reference == ref for entry in registry)]
    assert not uncovered, f"references without a check {uncovered}"
    for entry in registry:
        assert entry.suites, f"{entry.check_id} belongs to no suite"


__all__ = ["CheckFunc",
           "REFERENCES",
           "CheckEntry",
           "REGISTRY",
           "RUN_CHECK_IDS",
           "entries_for",
           "entries_by_id",
           "audit_registry"]
