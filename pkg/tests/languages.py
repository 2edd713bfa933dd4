"""
Membership predicates for the fixture languages
"""

from itertools import product
from typing import Iterator, List, Sequence


def strings(alphabet: Sequence[str], max_length: int) -> Iterator[List[str]]:
    for length in range(max_length + 1):
        for word in product(sorted(alphabet), repeat=length):
            yield list(word)


def balanced(word) -> bool:
    depth = 0
    for symbol in word:
        depth += 1 if symbol == "a" else -1
        if depth < 0:
            return False
    return depth == 0


def anbn(word) -> bool:
    n = len(word) // 2
    return len(word) % 2 == 0 and list(word) == ["a"] * n + ["b"] * n


def anbn_nonempty(word) -> bool:
    return len(word) > 0 and anbn(word)


def equal_ab(word) -> bool:
    return word.count("a") == word.count("b")


def a_n_b_2n(word) -> bool:
    n = len(word) // 3
    return len(word) % 3 == 0 and list(word) == ["a"] * n + ["b"] * (2 * n)


def ab_plus(word) -> bool:
    return len(word) > 0 and "".join(word) == "ab" * (len(word) // 2)


DPDA_LANGUAGES = {
    "balanced-ab": balanced,
    "anbn": anbn,
    "anbn-empty": anbn_nonempty,
    "equal-ab": equal_ab,
    "a-n-b-2n": a_n_b_2n,
    "ab-plus": ab_plus,
}

FSM_LANGUAGES = {
    "parity": lambda w: w.count("1") % 2 == 0,
    "ends-with-ab": lambda w: w[-2:] == ["a", "b"],
    "a-mod-3": lambda w: w.count("a") % 3 == 0,
    "no-bb": lambda w: "bb" not in "".join(w),
    "single-state": lambda w: True,
}
