import logging
from itertools import product
from typing import Dict, List, NamedTuple, Tuple

from models.cartan import AffineCartanDatum
from models.coeffs import LaurentCoefficient
from models.words import WordSum, t_inverse_token, t_token, x_token, y_token
from utils.helpers import unit_vector

logger = logging.getLogger(__name__)

# a_ij * a_ji -> order of s_i s_j; products of 4 or more give no braid relation
COXETER_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}
SAMPLES_PER_CONDITION = 2


class Relation(NamedTuple):
    name: str
    lhs: WordSum
    rhs: WordSum


def coxeter_order(datum: AffineCartanDatum, i: int, j: int):
    return COXETER_ORDERS.get(datum.a[i][j] * datum.a[j][i])


def _small_vectors(n: int) -> List[Tuple[int, ...]]:
    vectors = [v for v in product((-1, 0, 1), repeat=n) if any(v)]
    return sorted(vectors, key=lambda v: (sum(abs(c) for c in v), v))


def braid_relations(datum: AffineCartanDatum) -> List[Relation]:
    relations = []
    for i in range(datum.n + 1):
        for j in range(i + 1, datum.n + 1):
            order = coxeter_order(datum, i, j)
            if order is None:
                continue
            left = [t_token(i if k % 2 == 0 else j) for k in range(order)]
            right = [t_token(j if k % 2 == 0 else i) for k in range(order)]
            relations.append(Relation(f"braid T{i},T{j} (m={order})", WordSum.of(*left), WordSum.of(*right)))
    return relations


def hecke_relations(datum: AffineCartanDatum) -> List[Relation]:
    """Quadratic relations for T0..Tn and the T-Y relation Y_-A_j T_j^-1 - T_j Y_A_j = c_j."""
    relations = []
    for j in range(datum.n + 1):
        unit = WordSum.scalar(LaurentCoefficient.hecke_unit(datum.length_class[j]))
        relations.append(Relation(f"quadratic T{j}", WordSum.of(t_token(j)) - WordSum.of(t_inverse_token(j)), unit))
    for j in range(1, datum.n + 1):
        unit = WordSum.scalar(LaurentCoefficient.hecke_unit(datum.length_class[j]))
        a_j = unit_vector(datum.n, j - 1)
        minus = tuple(-c for c in a_j)
        lhs = WordSum.of(y_token(minus), t_inverse_token(j)) - WordSum.of(t_token(j), y_token(a_j))
        relations.append(Relation(f"Y_-A{j} T{j}^-1 - T{j} Y_A{j}", lhs, unit))
    return relations


def cross_relations(datum: AffineCartanDatum) -> List[Relation]:
    """T_j^-1 X_alpha_j - X_-alpha_j T_j = c_j for every node, alpha_0 = delta - theta included."""
    relations = []
    for j in range(datum.n + 1):
        unit = WordSum.scalar(LaurentCoefficient.hecke_unit(datum.length_class[j]))
        coords, delta = datum.simple_root(j)
        minus = tuple(-c for c in coords)
        lhs = (WordSum.of(t_inverse_token(j), x_token(coords, delta))
               - WordSum.of(x_token(minus, -delta), t_token(j)))
        relations.append(Relation(f"T{j}^-1 X_alpha{j} - X_-alpha{j} T{j}", lhs, unit))
    return relations


def y_lattice_relations(datum: AffineCartanDatum) -> List[Relation]:
    """(mu, A_j^v) = 0: T_j Y_mu = Y_mu T_j; (mu, A_j^v) = 1: T_j Y_mu T_j = Y_{s_j mu}."""
    relations = []
    candidates = _small_vectors(datum.n)
    for j in range(1, datum.n + 1):
        found: Dict[int, int] = {0: 0, 1: 0}
        for mu in candidates:
            k = datum.lattice_coroot_pairing(mu, j)
            if k not in found or found[k] >= SAMPLES_PER_CONDITION:
                continue
            found[k] += 1
            if k == 0:
                relations.append(Relation(
                    f"T{j} Y{list(mu)} = Y{list(mu)} T{j}",
                    WordSum.of(t_token(j), y_token(mu)), WordSum.of(y_token(mu), t_token(j)),
                ))
            else:
                reflected = tuple(c - 1 if i == j - 1 else c for i, c in enumerate(mu))
                relations.append(Relation(
                    f"T{j} Y{list(mu)} T{j} = Y{list(reflected)}",
                    WordSum.of(t_token(j), y_token(mu), t_token(j)), WordSum.of(y_token(reflected)),
                ))
    return relations


def x_relations(datum: AffineCartanDatum) -> List[Relation]:
    """X_delta central, and for finite beta: (beta, alpha_j^v) = 0 commutes, = -1 gives T_j X_beta T_j = X_{s_j beta}."""
    relations = []
    central = x_token((0,) * datum.n, 1)
    for j in range(datum.n + 1):
        relations.append(Relation(
            f"X_delta central (T{j})", WordSum.of(central, t_token(j)), WordSum.of(t_token(j), central),
        ))
    candidates = _small_vectors(datum.n)
    for j in range(datum.n + 1):
        root, root_delta = datum.simple_root(j)
        found: Dict[int, int] = {0: 0, -1: 0}
        for beta in candidates:
            k = datum.coroot_pairing(beta, j)
            if k not in found or found[k] >= SAMPLES_PER_CONDITION:
                continue
            found[k] += 1
            if k == 0:
                relations.append(Relation(
                    f"T{j} X{list(beta)} = X{list(beta)} T{j}",
                    WordSum.of(t_token(j), x_token(beta)), WordSum.of(x_token(beta), t_token(j)),
                ))
            else:
                reflected = tuple(b - k * r for b, r in zip(beta, root))
                relations.append(Relation(
                    f"T{j} X{list(beta)} T{j} = X_s{j}{list(beta)}",
                    WordSum.of(t_token(j), x_token(beta), t_token(j)),
                    WordSum.of(x_token(reflected, -k * root_delta)),
                ))
    return relations


def commutation_relations(datum: AffineCartanDatum) -> List[Relation]:
    relations = []
    for i in range(datum.n):
        for j in range(i + 1, datum.n):
            a_i, a_j = unit_vector(datum.n, i), unit_vector(datum.n, j)
            relations.append(Relation(
                f"X_alpha{i + 1} X_alpha{j + 1} commute",
                WordSum.of(x_token(a_i), x_token(a_j)), WordSum.of(x_token(a_j), x_token(a_i)),
            ))
            relations.append(Relation(
                f"Y_A{i + 1} Y_A{j + 1} commute",
                WordSum.of(y_token(a_i), y_token(a_j)), WordSum.of(y_token(a_j), y_token(a_i)),
            ))
    return relations


def defining_relations(datum: AffineCartanDatum) -> List[Relation]:
    relations = (
        braid_relations(datum)
        + hecke_relations(datum)
        + cross_relations(datum)
        + y_lattice_relations(datum)
        + x_relations(datum)
        + commutation_relations(datum)
    )
    logger.debug(f"{datum.label}: {len(relations)} defining relations")
    return relations
