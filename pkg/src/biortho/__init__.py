"""2-orthogonal polynomials, their weight pairs and a verification harness.

Modules:

* :mod:`biortho.specfun` - special functions (Airy, Tricomi U, Kummer M,
  incomplete gamma, 2F1, scaled Bessel functions)
* :mod:`biortho.polyseq` - exact recurrence coefficients and polynomials
* :mod:`biortho.functional` - system classification and exact moments
* :mod:`biortho.weights` - weight pairs for every case
* :mod:`biortho.quad` - adaptive quadrature with Dirac atoms
* :mod:`biortho.verify` - verification reports
* :mod:`biortho.cli` - command-line interface
"""
from .errors import BiorthoError, BudgetExceeded, DomainError, RegularityError, SingularSystemError
from .polyseq import ModelParams, Poly, coeffs, genP, genQ, derivative_Q
from .functional import FunctionalSystem, MomentTable, classify, momentsU0, momentsU1, derivedFunctionals
from .weights import CASES, CaseId, Measure, buildMeasure, evalMeasure, tricomiConstants
from .quad import QuadResult, integrate, moments, pair
from .verify import (VerificationReport, verifyCase, verifyOrthogonalityExact, verifyMeasureAgainstOracle,
                     verifyODEandLinkage, verifyBoundary, verifyStructure)

__version__ = "0.1.0"

__all__ = [
    "BiorthoError", "BudgetExceeded", "DomainError", "RegularityError", "SingularSystemError",
    "ModelParams", "Poly", "coeffs", "genP", "genQ", "derivative_Q",
    "FunctionalSystem", "MomentTable", "classify", "momentsU0", "momentsU1", "derivedFunctionals",
    "CASES", "CaseId", "Measure", "buildMeasure", "evalMeasure", "tricomiConstants",
    "QuadResult", "integrate", "moments", "pair",
    "VerificationReport", "verifyCase", "verifyOrthogonalityExact", "verifyMeasureAgainstOracle",
    "verifyODEandLinkage", "verifyBoundary", "verifyStructure",
]
