"""hardyweight: the optimal discrete p-Hardy weight and its function theory.

The package evaluates the optimal weight appearing in the sharpened discrete
p-Hardy inequality, the Herglotz-Nevanlinna function it generates, the
boundary density of that function's representing measure, and the even
moments of the density (by several independent backends).  Every analytic
claim the library relies on ships with a numerical verification suite,
reachable both from Python and from the ``hardyweight`` CLI.

>>> import hardyweight as hw
>>> pair = hw.HolderPair(2.0)
>>> hw.optimal_weight(pair, 1)          # 2 - sqrt(2)
0.585786437626905
>>> hw.density(pair, 0.5)               # 1 / (2 pi)
0.15915494309189537
"""

from .backend import kernel_backend
from .complex_core import (
    HolderPair,
    Region,
    generalized_binomial,
    pochhammer,
    principal_pow,
    region,
)
from .density import (
    DensityGrid,
    density,
    density_binomial,
    density_grid,
    density_near_one,
    density_values,
    positivity_scan,
)
from .errors import (
    BranchCutError,
    DomainError,
    HardyWeightError,
    QuadratureConvergenceError,
)
from .expansion import (
    SeriesEvaluation,
    absolute_monotonicity_check,
    derivative_differences,
    derivative_integral,
    herglotz_series,
    weight_series,
)
from .hardy_verify import (
    CompactSequence,
    classical_averaged_check,
    dirichlet_sum,
    random_corpus,
    tapered_linear,
    verify_inequality,
    weighted_sum,
)
from .herglotz import (
    BranchRoute,
    HerglotzEval,
    boundary_value,
    evaluate,
    evaluate_detailed,
    herglotz_scan,
    product_form,
    stieltjes_transform,
)
from .moments import (
    CompositionWeights,
    MomentVector,
    composition_table,
    even_moments,
    moment_closed_form,
    moment_combinatorial,
    moment_integer,
    moment_quadrature,
    sum_rule_check,
)
from .quadrature import QuadratureResult, integrate
from .report import VerificationReport
from .weight import (
    WeightSample,
    classical_weight,
    improvement_margin,
    optimal_weight,
    optimal_weight_values,
    weight_samples,
)

__version__ = "0.1.0"

__all__ = [
    "HolderPair", "Region", "region", "principal_pow", "pochhammer",
    "generalized_binomial",
    "DensityGrid", "density", "density_values", "density_binomial",
    "density_grid", "density_near_one", "positivity_scan",
    "WeightSample", "classical_weight", "optimal_weight",
    "optimal_weight_values", "weight_samples", "improvement_margin",
    "BranchRoute", "HerglotzEval", "evaluate", "evaluate_detailed",
    "product_form", "boundary_value", "stieltjes_transform", "herglotz_scan",
    "QuadratureResult", "integrate",
    "MomentVector", "CompositionWeights", "composition_table",
    "moment_quadrature", "moment_combinatorial", "moment_integer",
    "moment_closed_form", "even_moments", "sum_rule_check",
    "SeriesEvaluation", "weight_series", "herglotz_series",
    "derivative_integral", "derivative_differences",
    "absolute_monotonicity_check",
    "CompactSequence", "dirichlet_sum", "weighted_sum", "verify_inequality",
    "classical_averaged_check", "random_corpus", "tapered_linear",
    "VerificationReport",
    "HardyWeightError", "DomainError", "BranchCutError",
    "QuadratureConvergenceError",
    "kernel_backend",
    "__version__",
]
