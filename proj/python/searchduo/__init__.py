"""Consumer-search duopoly pricing."""

from searchduo._core import (
    ConfigError,
    DemandBreakdown,
    Distribution,
    EquilibriumResult,
    FirmParams,
    MarketParams,
    PriceProfile,
    Variant,
    check_lemma1,
    demand,
    foc,
    hotelling_prices,
    monopoly_price,
    oligopoly_solve,
    profit,
    simulate,
    solve,
    solve_highest,
    surplus,
    sweep,
)

__all__ = [
    "ConfigError",
    "DemandBreakdown",
    "Distribution",
    "EquilibriumResult",
    "FirmParams",
    "MarketParams",
    "PriceProfile",
    "Variant",
    "check_lemma1",
    "demand",
    "foc",
    "hotelling_prices",
    "monopoly_price",
    "oligopoly_solve",
    "profit",
    "simulate",
    "solve",
    "solve_highest",
    "surplus",
    "sweep",
]
