import random

import pytest

from leafspan import gen_random_rooted_dag


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_dag_corpus(count, n_lo, n_hi, seed=1, probabilities=(0.0, 0.1, 0.3, 0.6)):
    """Deterministic list of random rooted DAGs for property tests."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(n_lo, n_hi)
        p = rng.choice(probabilities)
        out.append(gen_random_rooted_dag(n, p, seed * 100003 + i))
    return out
