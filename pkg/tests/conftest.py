from hypothesis import strategies as st

from permclass import Perm


def perms(min_size=0, max_size=6):
    return st.permutations(range(1, max_size + 1)).flatmap(
        lambda vals: st.integers(min_size, max_size).map(
            lambda k: Perm(tuple(__rank(vals[:k])))
        )
    )


def __rank(seq):
    order = {v: r for r, v in enumerate(sorted(seq), 1)}
    return [order[v] for v in seq]


def perms_of(n):
    return st.permutations(range(1, n + 1)).map(lambda v: Perm(tuple(v)))
