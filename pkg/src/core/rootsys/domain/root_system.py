from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Literal, Self

import sympy
from funcy import lmap

from core.rootsys.domain.cartan import CartanType, gram_matrix, positive_root_count
from core.rootsys.domain.exceptions import CoweightError, RootError, RootSystemMismatchError
from core.rootsys.domain.types import IntMatrix, IntVector, NodeLabel, QVector
from generic.domain.exceptions import VerificationError

type CoweightBasis = Literal["coroot", "fundamental"]


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Неизменяемые данные неприводимой системы корней.

    Корни хранятся в базисе простых корней, кокорни и кохарактеры в базисе простых кокорней.
    Внутри модуля узлы нумеруются с нуля, снаружи используется нумерация Бурбаки 1..n.
    Сравнение систем только по идентичности: экземпляры кэшируются в build_root_system.
    """

    cartan_type: CartanType
    gram: IntMatrix
    cartan_matrix: IntMatrix
    positive_roots: tuple[IntVector, ...]
    positive_coroots: tuple[IntVector, ...]
    theta: int
    rho: QVector
    fundamental_coweights: tuple[QVector, ...]
    cartan_inverse: tuple[QVector, ...] = field(repr=False)
    # simple_perms[i][r]: индекс s_i(beta_r); значение >= N означает отрицательный корень.
    simple_perms: tuple[tuple[int, ...], ...] = field(repr=False)
    root_index: dict[IntVector, int] = field(repr=False)

    def __str__(self) -> str:
        return str(self.cartan_type)

    @property
    def rank(self) -> int:
        return self.cartan_type.rank

    @property
    def n_positive(self) -> int:
        return len(self.positive_roots)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        return tuple(sum(root) for root in self.positive_roots)

    @cached_property
    def coroot_heights(self) -> tuple[int, ...]:
        """Высоты кокорней; <2rho, alpha^vee> = 2 * высота alpha^vee."""
        return tuple(sum(coroot) for coroot in self.positive_coroots)

    @cached_property
    def norms(self) -> tuple[int, ...]:
        return tuple(self.norm(root) for root in self.positive_roots)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        n = self.rank
        return tuple(frozenset(j for j in range(n) if j != i and self.gram[i][j]) for i in range(n))

    def norm(self, coords: Sequence[int]) -> int:
        n = self.rank
        return sum(coords[i] * self.gram[i][j] * coords[j] for i in range(n) for j in range(n))

    def reflect_root(self, i: int, coords: Sequence[int]) -> IntVector:
        """s_i(beta) = beta - <beta, alpha_i^vee> alpha_i."""
        return _reflect(self.cartan_matrix, i, coords)

    def signed_index(self, coords: Sequence[int]) -> int:
        """Индекс корня в кодировке знаковой перестановки (r или r + N для -beta_r)."""
        key = tuple(coords)
        if key in self.root_index:
            return self.root_index[key]
        negative = tuple(-c for c in key)
        if negative in self.root_index:
            return self.root_index[negative] + self.n_positive
        raise RootError(f"Вектор {key} не является корнем системы {self}", field="root", id=str(key))

    def signed_root(self, signed: int) -> IntVector:
        n_pos = self.n_positive
        if signed < n_pos:
            return self.positive_roots[signed]
        return tuple(-c for c in self.positive_roots[signed - n_pos])

    def to_fundamental(self, coroot_coords: Sequence[Fraction | int]) -> QVector:
        """Координаты <alpha_i, lambda> по координатам lambda в базисе простых кокорней."""
        n = self.rank
        return tuple(Fraction(sum(self.cartan_matrix[i][j] * coroot_coords[j] for j in range(n))) for i in range(n))

    def to_coroot(self, fundamental: Sequence[Fraction | int]) -> QVector:
        n = self.rank
        return tuple(sum((self.cartan_inverse[i][j] * fundamental[j] for j in range(n)), Fraction(0)) for i in range(n))

    def pair_fundamental(self, root_coords: Sequence[int], fundamental: Sequence[Fraction | int]) -> Fraction | int:
        return sum(c * p for c, p in zip(root_coords, fundamental, strict=True))

    def reflect_fundamental(self, i: int, fundamental: Sequence[int]) -> tuple[int, ...]:
        """s_i(lambda) в координатах <alpha_k, lambda>: p_k - <alpha_k, alpha_i^vee> p_i."""
        p_i = fundamental[i]
        return tuple(p - self.cartan_matrix[k][i] * p_i for k, p in enumerate(fundamental))

    def simple_root(self, label: NodeLabel) -> "Root":
        return Root(self, self.positive_roots[self._node(label)])

    def root(self, coords: Sequence[int]) -> "Root":
        root = Root(self, tuple(coords))
        self.signed_index(root.coords)
        return root

    @property
    def highest_root(self) -> "Root":
        return Root(self, self.positive_roots[self.theta])

    def fundamental_coweight(self, label: NodeLabel) -> "CoweightQ":
        return CoweightQ(self, self.fundamental_coweights[self._node(label)])

    @property
    def rho_check(self) -> "CoweightQ":
        """rho^vee = сумма фундаментальных кохарактеров."""
        return CoweightQ.from_fundamental(self, [1] * self.rank)

    @property
    def zero(self) -> "CoweightQ":
        return CoweightQ(self, tuple(Fraction(0) for _ in range(self.rank)))

    def _node(self, label: NodeLabel) -> int:
        if not 1 <= label <= self.rank:
            raise RootError(f"Узел {label} вне диапазона 1..{self.rank}", field="node", id=label)
        return label - 1


@dataclass(frozen=True)
class Root:
    """Корень в базисе простых корней."""

    system: RootSystem = field(repr=False)
    coords: IntVector

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def index(self) -> int:
        """Знаковый индекс корня (r или r + N)."""
        return self.system.signed_index(self.coords)

    @property
    def coroot(self) -> IntVector:
        return coroot_coords(self.system, self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)

    def __neg__(self) -> "Root":
        return Root(self.system, tuple(-c for c in self.coords))

    def __str__(self) -> str:
        return format_vector(self.coords)


@dataclass(frozen=True)
class CoweightQ:
    """Рациональный кохарактер в базисе простых кокорней."""

    system: RootSystem = field(repr=False)
    coords: QVector

    @classmethod
    def from_fundamental(cls, system: RootSystem, fundamental: Sequence[Fraction | int]) -> Self:
        return cls(system, system.to_coroot(fundamental))

    @classmethod
    def parse(cls, system: RootSystem, text: str, basis: CoweightBasis = "coroot") -> Self:
        """Разбирает строку вида "1,1/2,0" в базисе простых кокорней или фундаментальных кохарактеров."""
        try:
            values = lmap(Fraction, (part.strip() for part in text.strip().strip("[]()").split(",")))
        except (ValueError, ZeroDivisionError) as exc:
            raise CoweightError(f"Не удалось разобрать кохарактер {text!r}", field="coweight", id=text) from exc
        if len(values) != system.rank:
            raise CoweightError(
                f"Ожидалось {system.rank} координат, получено {len(values)}", field="coweight", id=text
            )
        return cls.from_fundamental(system, values) if basis == "fundamental" else cls(system, tuple(values))

    @cached_property
    def fundamental(self) -> QVector:
        """Координаты <alpha_i, lambda>."""
        return self.system.to_fundamental(self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(p >= 0 for p in self.fundamental)

    def is_integral(self, lattice: str = "adjoint") -> bool:
        """Принадлежность P^vee (adjoint) или Q^vee (sc)."""
        values = self.fundamental if lattice == "adjoint" else self.coords
        return all(v.denominator == 1 for v in values)

    def __add__(self, other: "CoweightQ") -> "CoweightQ":
        _check_same(self.system, other.system)
        return CoweightQ(self.system, tuple(a + b for a, b in zip(self.coords, other.coords, strict=True)))

    def __sub__(self, other: "CoweightQ") -> "CoweightQ":
        return self + (-other)

    def __neg__(self) -> "CoweightQ":
        return CoweightQ(self.system, tuple(-c for c in self.coords))

    def __mul__(self, scalar: Fraction | int) -> "CoweightQ":
        return CoweightQ(self.system, tuple(c * scalar for c in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_vector(self.coords)


def format_vector(values: Iterable[Fraction | int]) -> str:
    return "[" + ",".join(str(v) for v in values) + "]"


def coroot_coords(system: RootSystem, coords: Sequence[int]) -> IntVector:
    """alpha^vee = 2 alpha / (alpha, alpha) в базисе простых кокорней."""
    return _coroot(system.gram, coords)


def _check_same(left: RootSystem, right: RootSystem) -> None:
    if left is not right:
        raise RootSystemMismatchError(f"Разные системы корней: {left} и {right}", field="type")


def pairing(alpha: Root, coweight: CoweightQ) -> Fraction:
    """<alpha, lambda>."""
    _check_same(alpha.system, coweight.system)
    return Fraction(alpha.system.pair_fundamental(alpha.coords, coweight.fundamental))


def rho_pairing(coweight: CoweightQ) -> Fraction:
    """<rho, lambda> = сумма координат lambda в базисе простых кокорней."""
    return sum(coweight.coords, Fraction(0))


def depth(coweight: CoweightQ) -> Fraction:
    """depth(lambda) = min <alpha, lambda> по простым корням; определено для доминантных lambda."""
    if not coweight.is_dominant:
        raise CoweightError(f"Кохарактер {coweight} не доминантный", field="mu", id=str(coweight))
    return min(coweight.fundamental)


def is_k_regular(coweight: CoweightQ, k: int) -> bool:
    return depth(coweight) >= k + 1


def dominance_le(left: CoweightQ, right: CoweightQ) -> bool:
    """left <= right: right - left неотрицательная рациональная комбинация простых кокорней."""
    _check_same(left.system, right.system)
    return all(r >= l for l, r in zip(left.coords, right.coords, strict=True))


def _reflect(cartan: IntMatrix, i: int, beta: Sequence[int]) -> IntVector:
    coefficient = sum(beta[k] * cartan[k][i] for k in range(len(beta)))
    return tuple(c - coefficient if k == i else c for k, c in enumerate(beta))


def _closure(n: int, cartan: IntMatrix) -> list[IntVector]:
    simple = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(simple)
    frontier = list(simple)
    while frontier:
        beta = frontier.pop()
        for i in range(n):
            image = _reflect(cartan, i, beta)
            if all(c >= 0 for c in image) and image not in found:
                found.add(image)
                frontier.append(image)
    return sorted(found, key=lambda root: (sum(root), tuple(-c for c in root)))


def _coroot(gram: IntMatrix, coords: Sequence[int]) -> IntVector:
    n = len(coords)
    norm = sum(coords[i] * gram[i][j] * coords[j] for i in range(n) for j in range(n))
    result = []
    for k, c in enumerate(coords):
        numerator = c * gram[k][k]
        if numerator % norm:
            raise RootError(f"Вектор {tuple(coords)} не является корнем", field="root", id=str(tuple(coords)))
        result.append(numerator // norm)
    return tuple(result)


@lru_cache(maxsize=32)
def build_root_system(cartan_type: CartanType) -> RootSystem:
    """Строит данные системы корней типа cartan_type."""
    n = cartan_type.rank
    gram = gram_matrix(cartan_type)
    cartan = tuple(tuple(2 * gram[i][j] // gram[j][j] for j in range(n)) for i in range(n))
    roots = _closure(n, cartan)
    if len(roots) != positive_root_count(cartan_type):
        raise VerificationError(
            f"Число положительных корней {cartan_type}: {len(roots)}, ожидалось {positive_root_count(cartan_type)}",
            entity="RootSystem",
            id=str(cartan_type),
        )

    inverse = sympy.Matrix(cartan).inv()
    cartan_inverse = tuple(
        tuple(Fraction(int(inverse[i, j].p), int(inverse[i, j].q)) for j in range(n)) for i in range(n)
    )
    root_index = {root: index for index, root in enumerate(roots)}
    n_pos = len(roots)
    perms = []
    for i in range(n):
        perm = []
        for root in roots:
            image = _reflect(cartan, i, root)
            perm.append(root_index[image] if image in root_index else root_index[tuple(-c for c in image)] + n_pos)
        perms.append(tuple(perm))

    return RootSystem(
        cartan_type=cartan_type,
        gram=gram,
        cartan_matrix=cartan,
        positive_roots=tuple(roots),
        positive_coroots=tuple(_coroot(gram, root) for root in roots),
        theta=n_pos - 1,
        rho=tuple(Fraction(sum(root[k] for root in roots), 2) for k in range(n)),
        fundamental_coweights=tuple(tuple(cartan_inverse[i][j] for i in range(n)) for j in range(n)),
        cartan_inverse=cartan_inverse,
        simple_perms=tuple(perms),
        root_index=root_index,
    )
