import json
import math

import pytest

import searchduo as sd


def uniform_market(s=0.1):
    return sd.MarketParams.symmetric(sd.Distribution.uniform(), 0.0, s)


def test_figure1_demand():
    m = uniform_market()
    p = sd.PriceProfile(0.6, 0.45)
    assert sd.demand("X", p, m).total == pytest.approx(0.24, abs=1e-9)
    assert sd.demand("Y", p, m).total == pytest.approx(0.4375, abs=1e-9)
    assert sd.profit("X", p, m) == pytest.approx(0.6 * 0.24, abs=1e-9)


def test_large_s_reduces_to_monopoly():
    r = sd.solve_highest(uniform_market(1.2))
    assert r.p_x == pytest.approx(0.5, abs=1e-8)
    assert r.multiplicity == "unique-found"
    assert sd.monopoly_price(sd.Distribution.uniform()) == pytest.approx(0.5)


def test_full_information():
    m = uniform_market(0.0)
    m.variant = sd.Variant.FULL_INFORMATION
    (r,) = sd.solve(m)
    assert r.p_x == pytest.approx(math.sqrt(2) - 1, abs=1e-9)


def test_sweep_and_hotelling():
    rows = sd.sweep(uniform_market(), "s", [0.05, 0.1, 0.2], threads=2)
    prices = [r["p_x"] for r in rows]
    assert prices == sorted(prices, reverse=True)
    h = sd.hotelling_prices(0.75, 0.25, 0.2, 0.2, 0.1)
    assert h["weighted_avg"] == pytest.approx(0.2, abs=1e-12)


def test_simulation_matches_quadrature():
    m = uniform_market()
    p = sd.PriceProfile(0.6, 0.45)
    rep = sd.simulate(m, p, n=200000, seed=3)
    assert abs(rep["demand_X"]["total"] - 0.24) < 4 * math.sqrt(0.24 * 0.76 / 2e5)


def test_config_errors():
    text = json.dumps({"firms": [{"mu": 0.5, "dist": {"type": "uniform"}},
                                 {"mu": 0.4, "dist": {"type": "uniform"}}]})
    with pytest.raises(sd.ConfigError):
        sd.MarketParams.from_json(text)
    with pytest.raises(ValueError):
        sd.Distribution.step([0.5], [1.0, 0.5])


def test_shipped_configs_match_schema():
    jsonschema = pytest.importorskip("jsonschema")
    from pathlib import Path

    root = Path(__file__).resolve().parents[2] / "config"
    schema = json.loads((root / "market.schema.json").read_text())
    for name in ("uniform.json", "step_unknown.json"):
        text = (root / name).read_text()
        jsonschema.validate(json.loads(text), schema)
        sd.MarketParams.from_json(text)
    bad = json.loads((root / "uniform.json").read_text())
    bad["colour"] = "red"
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(bad, schema)
