"""Shared sink for acceptance outcomes, echoed by the conftest summary hook."""

RESULTS: dict[int, str] = {}


def record(n: int, label: str, ok: bool, seconds: float) -> None:
    status = "PASS" if ok else "FAIL"
    RESULTS[n] = f"ACCEPTANCE {n}: {status} ({label}, {seconds:.2f}s)"
