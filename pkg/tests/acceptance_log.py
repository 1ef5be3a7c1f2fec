"""Collects one line per acceptance criterion for the terminal summary."""
RESULTS: list[tuple[str, str, str]] = []


def record(criterion: str, status: str, detail: str = "") -> None:
    RESULTS.append((criterion, status, detail))
