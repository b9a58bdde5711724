"""Hypothesis strategies for random algebra elements."""
from hypothesis import strategies as st

from qhopf.ncpoly import NCPoly
from qhopf.qrat import QRat

coeffs = st.builds(lambda c, k: QRat(c) * QRat.q(k),
                   st.integers(-3, 3).filter(bool), st.integers(-2, 2))


def words(pres, max_len=4):
    return st.lists(st.sampled_from(pres.letters), max_size=max_len).map(tuple)


def polys(pres, max_terms=3, max_len=4):
    return st.dictionaries(words(pres, max_len), coeffs, max_size=max_terms).map(
        lambda d: NCPoly.raw(pres, d))


def homogeneous(pres, max_len=4):
    return st.tuples(words(pres, max_len), coeffs).map(lambda t: NCPoly.raw(pres, {t[0]: t[1]}))
