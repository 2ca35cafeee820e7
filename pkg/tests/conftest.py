"""Brute-force oracles shared by the tests.

These are written straight from the definitions and share no code with the
package under test.
"""

import itertools

import pytest


def rp_by_definition(w):
    """Empty, or a palindrome whose left and right halves are both RP."""
    w = tuple(w)
    if not w:
        return True
    k = len(w) // 2
    return w == w[::-1] and rp_by_definition(w[:k]) and rp_by_definition(w[len(w) - k:])


def compositions_by_recursion(n):
    """All compositions of n, first part chosen first."""
    if n == 0:
        return [()]
    return [(p,) + rest for p in range(1, n + 1) for rest in compositions_by_recursion(n - p)]


def binary_partitions_by_search(n, largest=None):
    """Multisets of powers of two summing to n, as descending tuples."""
    if largest is None:
        largest = 1
        while largest * 2 <= n:
            largest *= 2
    if n == 0:
        return [()]
    out = []
    p = largest
    while p >= 1:
        if p <= n:
            out += [(p,) + rest for rest in binary_partitions_by_search(n - p, p)]
        p //= 2
    return out


def all_words(alphabet, n):
    return ["".join(w) for w in itertools.product(alphabet, repeat=n)]


def catalan_by_recurrence(n):
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


@pytest.fixture(scope="session")
def binary_words_upto_14():
    return {n: all_words("01", n) for n in range(15)}


ACCEPTANCE_LINES = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE_LINES, [])


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_LINES, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
