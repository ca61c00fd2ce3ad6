from fractions import Fraction
from typing import Literal

type IntVector = tuple[int, ...]
type QVector = tuple[Fraction, ...]
type IntMatrix = tuple[IntVector, ...]

# Номер узла диаграммы Дынкина во внешней нумерации Бурбаки (0 - аффинный узел).
type NodeLabel = int

# Решётка кохарактеров: P^vee (присоединённая группа) или Q^vee (односвязная).
type Lattice = Literal["adjoint", "sc"]
