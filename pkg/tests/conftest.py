from types import SimpleNamespace

import pytest

from sepfam import Bipartition, BipartitionFamily


@pytest.fixture
def ex():
    """The worked 4-element example used throughout the tests.

    fp: two crossing even splits; fq: the chain 1 | 12 | 123 against the rest.
    """
    p1 = Bipartition.from_blocks(4, [[1, 2], [3, 4]])
    p2 = Bipartition.from_blocks(4, [[1, 3], [2, 4]])
    q1 = Bipartition.from_blocks(4, [[1], [2, 3, 4]])
    q3 = Bipartition.from_blocks(4, [[1, 2, 3], [4]])
    return SimpleNamespace(
        p1=p1,
        p2=p2,
        q1=q1,
        q2=p1,
        q3=q3,
        fp=BipartitionFamily(4, (p1, p2)),
        fq=BipartitionFamily(4, (q1, p1, q3)),
    )
