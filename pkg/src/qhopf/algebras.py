"""The fixed set of presentations shipped with the toolkit.

Letters whose adjoint is a separate letter carry a ``*`` suffix internally
(``z*``, ``B*``, ``S*``, ``v*``) and are spelled with a postfix apostrophe in
text (``z'``).

========== ==================== =========================================
selector   letters              normal words
========== ==================== =========================================
suq2       a d b c              a^i b^j c^k,  d^l b^j c^k
sphere     A B B*               A^i B^j,  A^i B*^k
disc       z z*                 z^i z*^j
discext    s z z*               s^a z^b,  s^a z*^c
isometry   S S*                 S^i S*^j
circle     v v*                 v^k,  v*^k
========== ==================== =========================================
"""
from __future__ import annotations

from .ncpoly import NCPoly, Presentation
from .qrat import QRat

q = QRat.q(1)
qi = QRat.q(-1)


def _suq2() -> Presentation:
    rules = {
        ("b", "a"): {("a", "b"): qi},
        ("c", "a"): {("a", "c"): qi},
        ("b", "d"): {("d", "b"): q},
        ("c", "d"): {("d", "c"): q},
        ("c", "b"): {("b", "c"): 1},
        ("d", "a"): {(): 1, ("b", "c"): qi},
        ("a", "d"): {(): 1, ("b", "c"): q},
    }
    star = {
        "a": {("d",): 1},
        "b": {("c",): -q},
        "c": {("b",): -qi},
        "d": {("a",): 1},
    }
    relations = [
        ("a b = q b a", {("a", "b"): 1, ("b", "a"): -q}),
        ("a c = q c a", {("a", "c"): 1, ("c", "a"): -q}),
        ("b d = q d b", {("b", "d"): 1, ("d", "b"): -q}),
        ("c d = q d c", {("c", "d"): 1, ("d", "c"): -q}),
        ("b c = c b", {("b", "c"): 1, ("c", "b"): -1}),
        ("a d - q b c = 1", {("a", "d"): 1, ("b", "c"): -q, (): -1}),
        ("d a - q^-1 b c = 1", {("d", "a"): 1, ("b", "c"): -qi, (): -1}),
    ]
    return Presentation(
        "suq2", "adbc", rules, star,
        weights={"a": 1, "b": -1, "c": 1, "d": -1},
        # a and d count double so that a d -> 1 + q b c decreases the order
        degrees={"a": 2, "b": 1, "c": 1, "d": 2},
        relations=relations,
    )


def _sphere() -> Presentation:
    q2, q4 = q ** 2, q ** 4
    rules = {
        ("B", "A"): {("A", "B"): q2},
        ("B*", "A"): {("A", "B*"): q ** -2},
        ("B*", "B"): {("A",): 1, ("A", "A"): -1},
        ("B", "B*"): {("A",): q2, ("A", "A"): -q4},
    }
    star = {"A": {("A",): 1}, "B": {("B*",): 1}, "B*": {("B",): 1}}
    relations = [
        ("B A = q^2 A B", {("B", "A"): 1, ("A", "B"): -q2}),
        ("B' B = A - A^2", {("B*", "B"): 1, ("A",): -1, ("A", "A"): 1}),
        ("B B' = q^2 A - q^4 A^2", {("B", "B*"): 1, ("A",): -q2, ("A", "A"): q4}),
    ]
    return Presentation(
        "sphere", ["A", "B", "B*"], rules, star,
        weights={"A": 0, "B": 0, "B*": 0},
        names={"A": "A", "B": "B", "B*": "B'"},
        relations=relations,
    )


def _disc() -> Presentation:
    q2 = q ** 2
    rules = {("z*", "z"): {("z", "z*"): q2, (): 1 - q2}}
    star = {"z": {("z*",): 1}, "z*": {("z",): 1}}
    relations = [
        ("z' z - q^2 z z' = 1 - q^2",
         {("z*", "z"): 1, ("z", "z*"): -q2, (): q2 - 1}),
    ]
    return Presentation(
        "disc", ["z", "z*"], rules, star,
        weights={"z": 1, "z*": -1},
        names={"z": "z", "z*": "z'"},
        relations=relations,
    )


def _discext() -> Presentation:
    q2 = q ** 2
    rules = {
        ("z", "s"): {("s", "z"): qi},
        ("z*", "s"): {("s", "z*"): q},
        ("z", "z*"): {(): 1, ("s", "s"): -1},
        ("z*", "z"): {(): 1, ("s", "s"): -q2},
    }
    star = {"z": {("z*",): 1}, "z*": {("z",): 1}, "s": {("s",): 1}}
    relations = [
        ("z' z - q^2 z z' = 1 - q^2",
         {("z*", "z"): 1, ("z", "z*"): -q2, (): q2 - 1}),
        ("s z = q z s", {("s", "z"): 1, ("z", "s"): -q}),
        ("1 - z z' = s^2", {(): 1, ("z", "z*"): -1, ("s", "s"): -1}),
    ]
    return Presentation(
        "discext", ["s", "z", "z*"], rules, star,
        weights={"s": 0, "z": 1, "z*": -1},
        names={"s": "s", "z": "z", "z*": "z'"},
        relations=relations,
    )


def _isometry() -> Presentation:
    return Presentation(
        "isometry", ["S", "S*"], {("S*", "S"): {(): 1}},
        {"S": {("S*",): 1}, "S*": {("S",): 1}},
        weights={"S": 1, "S*": -1},
        names={"S": "S", "S*": "S'"},
        relations=[("S' S = 1", {("S*", "S"): 1, (): -1})],
    )


def circle(letter: str = "v", name: str = "circle") -> Presentation:
    """Laurent polynomials in one unitary letter."""
    inv = letter + "*"
    return Presentation(
        name, [letter, inv],
        {(letter, inv): {(): 1}, (inv, letter): {(): 1}},
        {letter: {(inv,): 1}, inv: {(letter,): 1}},
        weights={letter: 1, inv: -1},
        names={letter: letter, inv: letter + "'"},
        relations=[(f"{letter} {letter}' = 1", {(letter, inv): 1, (): -1})],
    )


SUQ2 = _suq2()
SPHERE = _sphere()
DISC = _disc()
DISCEXT = _discext()
ISOMETRY = _isometry()
CIRCLE = circle("v", "circle")
SYMBOL_CIRCLE = circle("u", "circle_u")

REGISTRY = {p.name: p for p in (SUQ2, SPHERE, DISC, DISCEXT, ISOMETRY, CIRCLE, SYMBOL_CIRCLE)}


def get(name: str) -> Presentation:
    try:
        return REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown algebra {name!r}; choose from {sorted(REGISTRY)}") from None


def gens(pres: Presentation) -> dict:
    """Generators of ``pres`` as NCPolys, keyed by letter."""
    return {x: NCPoly.gen(pres, x) for x in pres.letters}


def laurent(pres: Presentation, k: int, coeff=1) -> NCPoly:
    """``coeff * x^k`` in a circle presentation (negative k uses the inverse)."""
    x, inv = pres.letters
    letter = x if k >= 0 else inv
    return NCPoly(pres, {(letter,) * abs(k): coeff})


def power_word(pres: Presentation, letter: str, k: int) -> NCPoly:
    return NCPoly(pres, {(letter,) * k: 1})
