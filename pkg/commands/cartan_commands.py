import logging
from typing import Dict

from models.cartan import WeightVector
from models.weyl import AffineWeylElement
from services.cartan_service import positive_roots
from services.weyl_service import WeylGroup
from utils.errors import ExpressionError
from utils.expressions import parse_weyl_expression

logger = logging.getLogger(__name__)


class CartanCommands:
    def __init__(self, kernel):
        self.kernel = kernel

    def info(self, label: str) -> Dict:
        type_data = self.kernel.get_type_data(label)
        datum = type_data["datum"]
        data = datum.to_dict()
        data["iota_type"] = type_data["iota"].label
        data["theta_in_m"] = all(c % e == 0 for c, e in zip(datum.theta_finite, datum.e_int[1:]))
        data["positive_roots"] = [str(r) for r in positive_roots(datum)]
        return data

    @staticmethod
    def build_element(weyl: WeylGroup, text: str) -> AffineWeylElement:
        element = weyl.identity
        for kind, payload in parse_weyl_expression(text):
            if kind == "s":
                if not 0 <= payload <= weyl.n:
                    raise ExpressionError(f"s{payload} is not a simple reflection of {weyl.datum.label}")
                factor = weyl.simple_affine(payload)
            elif kind == "L":
                if len(payload) != weyl.n:
                    raise ExpressionError(f"L{list(payload)} needs {weyl.n} M coordinates")
                factor = weyl.translation(payload)
            else:
                if payload not in weyl.datum.roots and tuple(-c for c in payload) not in weyl.datum.roots:
                    raise ExpressionError(f"r{list(payload)} is not a root of {weyl.datum.label}")
                factor = weyl.finite_element(weyl.reflection(payload))
            element = weyl.multiply(element, factor)
        return element

    def word(self, label: str, text: str) -> Dict:
        weyl = self.kernel.get_type_data(label)["weyl"]
        element = self.build_element(weyl, text)
        word = weyl.reduced_word(element)
        finite_word = weyl.reduced_word(weyl.finite_element(element.finite))
        return {
            "type": weyl.datum.label,
            "expression": text,
            "finite_word": list(finite_word),
            "translation": list(element.trans),
            "reduced_word": list(word),
            "length": len(word),
            "length_formula": weyl.length_formula(element.finite, element.trans),
            "inversion_set": sorted(str(r) for r in weyl.inversion_set(element)),
            "level_one_image_of_zero": str(weyl.act_level1(element, WeightVector.from_finite([0] * weyl.n))),
        }
