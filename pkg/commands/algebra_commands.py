import logging
from typing import Dict, List

from services.bernstein_service import BernsteinPresentation
from utils.expressions import parse_expression

logger = logging.getLogger(__name__)


class AlgebraCommands:
    def __init__(self, kernel):
        self.kernel = kernel

    def eval(self, label: str, text: str) -> List[Dict]:
        algebra = self.kernel.get_type_data(label)["algebra"]
        element = algebra.evaluate(parse_expression(text))
        logger.debug(f"{label}: {text!r} has {len(element.terms)} terms; caches {algebra.cache_sizes()}")
        return element.to_terms()

    def bernstein(self, label: str, text: str) -> List[Dict]:
        algebra = self.kernel.get_type_data(label)["algebra"]
        presentation = BernsteinPresentation(algebra)
        return presentation.render(presentation.to_bernstein(algebra.evaluate(parse_expression(text))))
