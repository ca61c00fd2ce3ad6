import math
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from funcy import chunks, lcat

T = TypeVar("T")
R = TypeVar("R")


def partitioned_map(func: Callable[[Sequence[T]], list[R]], items: Sequence[T], threads: int = 1) -> list[R]:
    """Применяет func к непрерывным частям items в пуле потоков.

    Результаты склеиваются в исходном порядке частей, поэтому вывод не зависит от числа потоков.
    """
    if threads <= 1 or len(items) < 2:
        return list(func(items))
    size = math.ceil(len(items) / threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return lcat(pool.map(func, chunks(size, items)))
