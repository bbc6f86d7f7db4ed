import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mawdist import Alphabet, load_beta_globin  # noqa: E402

X_EX = "cbaabdcb"
Y_EX = "abcba"
ABCD = Alphabet.from_string("abcd")


@pytest.fixture(scope="session")
def globin():
    return load_beta_globin()


@pytest.fixture
def rng():
    return random.Random(20201)


def random_word(rng, alphabet: str, max_len: int, min_len: int = 0) -> str:
    n = rng.randint(min_len, max_len)
    return "".join(rng.choice(alphabet) for _ in range(n))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
