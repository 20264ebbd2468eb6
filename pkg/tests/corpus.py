"""Groups of order <= 64 exercised by the property suites."""

CORPUS = [
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12",
    "C2xC2", "C4xC2", "C2xC2xC2", "C3xC3", "C6xC2", "C4xC4", "C8xC2",
    "D3", "D4", "D5", "D6", "D8", "Q8", "Q16", "Dic3", "Dic5",
    "heisenberg(3)", "extraspecial(3,exponent-l2)", "2T", "2O",
    "C2xQ8", "C2xD4", "C3xQ8", "C4xD4", "Q8xQ8", "C2xC2xC2xC2",
]
