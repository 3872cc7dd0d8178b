import pytest

from interlace import kernels
from interlace.polygon import Parameters

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def valid_params(max_n, max_k=None, r=None, min_n=2):
    """Every valid (n, k, r) with n <= max_n (and k <= max_k, fixed r if given)."""
    for n in range(min_n, max_n + 1):
        for k in range(1, n // 2 + 1 if r is None else n // r + 1):
            if max_k is not None and k > max_k:
                continue
            rs = [r] if r is not None else range(2, n // k + 1)
            for rr in rs:
                if n >= rr * k:
                    yield Parameters(n, k, rr)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    return kernels.available_backends()[request.param]


@pytest.fixture
def record_criterion():
    def record(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE[name] = (ok, detail)

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[0])):
        ok, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
