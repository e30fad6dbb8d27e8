from .cartan import AffineCartanDatum, LatticeCorrespondence, LatticeVector, WeightVector
from .coeffs import LaurentCoefficient
from .daha import DahaElement
from .reports import CheckResult, LemmaReport, Report
from .weyl import AffineWeylElement, DoubleAffineWeylElement, FiniteWeylElement
from .words import Token, WordSum

__all__ = [
    'AffineCartanDatum',
    'AffineWeylElement',
    'CheckResult',
    'DahaElement',
    'DoubleAffineWeylElement',
    'FiniteWeylElement',
    'LatticeCorrespondence',
    'LatticeVector',
    'LaurentCoefficient',
    'LemmaReport',
    'Report',
    'Token',
    'WeightVector',
    'WordSum'
]
