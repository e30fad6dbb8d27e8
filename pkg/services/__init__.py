from .algebra_check_service import AlgebraCheckService
from .bernstein_service import BernsteinPresentation
from .cartan_service import affinize, iota_datum, load_cartan_datum
from .hecke_service import HeckeAlgebra
from .involution_service import InvolutionService, PhiMap
from .lemma_service import LemmaService
from .weyl_service import WeylGroup

__all__ = [
    'AlgebraCheckService',
    'BernsteinPresentation',
    'HeckeAlgebra',
    'InvolutionService',
    'LemmaService',
    'PhiMap',
    'WeylGroup',
    'affinize',
    'iota_datum',
    'load_cartan_datum'
]
