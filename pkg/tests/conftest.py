from hypothesis import settings, strategies as st

from gghecke.cyclo import field

settings.register_profile("default", deadline=None)
settings.load_profile("default")

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def cyclo_nums(r: int):
    phi = field(r).phi
    return st.lists(small_fracs, min_size=phi, max_size=phi).map(lambda c: field(r).from_coeffs(c))


def nonzero_cyclo(r: int):
    return cyclo_nums(r).filter(bool)
