from planeauto.exceptions import InvalidInput


def theorem_a_bound(df: int, dg: int) -> int:
    """2⁵⁷·(df·dg)²⁹: every polynomial conjugacy between loxodromic maps of
    degrees df and dg is realised by some ψ of at most this degree."""
    if df < 2 or dg < 2:
        raise InvalidInput(f"loxodromic maps have degree ≥ 2, got ({df}, {dg})")
    return 2**57 * (df * dg) ** 29
