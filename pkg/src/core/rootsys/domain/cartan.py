import math
import re
from dataclasses import dataclass
from typing import Self

from core.rootsys.domain.exceptions import CartanTypeError

type Gram = tuple[tuple[int, ...], ...]

_TYPE_RE = re.compile(r"^([A-G])\s*(\d+)$")

_RANK_RULES = {
    "A": (lambda n: n >= 1, "n >= 1"),
    "B": (lambda n: n >= 2, "n >= 2"),
    "C": (lambda n: n >= 2, "n >= 2"),
    "D": (lambda n: n >= 4, "n >= 4"),
    "E": (lambda n: n in {6, 7, 8}, "n in {6, 7, 8}"),
    "F": (lambda n: n == 4, "n = 4"),
    "G": (lambda n: n == 2, "n = 2"),
}

# Рёбра диаграмм E_n в нумерации Бурбаки.
_E_EDGES = ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4))


@dataclass(frozen=True, slots=True)
class CartanType:
    """Тип Картана неприводимой системы корней (нумерация Бурбаки)."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        rule = _RANK_RULES.get(self.family)
        if rule is None:
            raise CartanTypeError(f"Неизвестное семейство {self.family!r}", field="type", id=self.family)
        check, description = rule
        if not check(self.rank):
            raise CartanTypeError(
                f"Недопустимый ранг для семейства {self.family}: {self.rank} (требуется {description})",
                field="type",
                id=f"{self.family}{self.rank}",
            )

    @classmethod
    def parse(cls, text: str) -> Self:
        """Разбирает строки вида "A2", "d4", "C2aff" (суффикс aff допускается)."""
        raw = text.strip().upper().removesuffix("AFF").removesuffix("~").strip()
        match = _TYPE_RE.match(raw)
        if not match:
            raise CartanTypeError(f"Не удалось разобрать тип Картана {text!r}", field="type", id=text)
        return cls(match.group(1), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_simply_laced(self) -> bool:
        return self.family in "ADE"

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"


def gram_matrix(t: CartanType) -> Gram:
    """Матрица Грама простых корней (целочисленная нормировка).

    Короткие корни имеют квадрат длины 2, длинные 4 (6 для G2). В B_n короткий корень
    alpha_n, в C_n длинный alpha_n, в F4 длинные alpha_1 и alpha_2, в G2 длинный alpha_2.
    """
    n = t.rank
    g = [[0] * n for _ in range(n)]

    def link(a: int, b: int, value: int) -> None:
        g[a - 1][b - 1] = g[b - 1][a - 1] = value

    match t.family:
        case "A":
            for i in range(1, n + 1):
                g[i - 1][i - 1] = 2
            for i in range(1, n):
                link(i, i + 1, -1)
        case "B":
            for i in range(1, n):
                g[i - 1][i - 1] = 4
            g[n - 1][n - 1] = 2
            for i in range(1, n):
                link(i, i + 1, -2)
        case "C":
            for i in range(1, n):
                g[i - 1][i - 1] = 2
            g[n - 1][n - 1] = 4
            for i in range(1, n - 1):
                link(i, i + 1, -1)
            link(n - 1, n, -2)
        case "D":
            for i in range(1, n + 1):
                g[i - 1][i - 1] = 2
            for i in range(1, n - 1):
                link(i, i + 1, -1)
            link(n - 2, n, -1)
        case "E":
            for i in range(1, n + 1):
                g[i - 1][i - 1] = 2
            for a, b in _E_EDGES:
                if b <= n:
                    link(a, b, -1)
        case "F":
            for i, square in enumerate((4, 4, 2, 2), start=1):
                g[i - 1][i - 1] = square
            link(1, 2, -2)
            link(2, 3, -2)
            link(3, 4, -1)
        case "G":
            g[0][0], g[1][1] = 2, 6
            link(1, 2, -3)
    return tuple(tuple(row) for row in g)


def positive_root_count(t: CartanType) -> int:
    """Стандартное число положительных корней, оно же l(w_0)."""
    n = t.rank
    match t.family:
        case "A":
            return n * (n + 1) // 2
        case "B" | "C":
            return n * n
        case "D":
            return n * (n - 1)
        case "E":
            return {6: 36, 7: 63, 8: 120}[n]
        case "F":
            return 24
        case _:
            return 6


def group_order(t: CartanType) -> int:
    """Порядок группы Вейля, без перечисления элементов."""
    n = t.rank
    match t.family:
        case "A":
            return math.factorial(n + 1)
        case "B" | "C":
            return 2**n * math.factorial(n)
        case "D":
            return 2 ** (n - 1) * math.factorial(n)
        case "E":
            return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[n]
        case "F":
            return 1152
        case _:
            return 12
