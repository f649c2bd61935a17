import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so timed tests measure algorithms, not numba."""
    from orient_turan.count import count_kst, count_profile, count_tt
    from orient_turan.graphs import transitive_tournament

    g = transitive_tournament(5)
    count_profile(g, 5)
    count_tt(g, 3)
    count_kst(g, 2, 2)
