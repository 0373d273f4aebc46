import json

import pytest

from abpair.config import CheckConfig, QuotientBounds


def test_defaults_are_acceptance_bounds():
    cfg = CheckConfig()
    assert cfg.quotients == QuotientBounds(16, 8, 512, 64, 0, 60.0)
    assert cfg.counts.targets == tuple(range(2, 13))
    assert cfg.nondeg.budget == 120.0


def test_overrides_and_roundtrip():
    cfg = CheckConfig.from_dict({"quotients": {"max_order": 6}, "counts": {"targets": [2, 3]}})
    assert cfg.quotients.max_order == 6 and cfg.quotients.max_target == 8
    assert cfg.counts.targets == (2, 3)
    again = CheckConfig.from_dict(json.loads(json.dumps(cfg.to_dict())))
    assert again == cfg


def test_unknown_keys_rejected():
    with pytest.raises(KeyError):
        CheckConfig.from_dict({"nope": {}})
    with pytest.raises(KeyError):
        CheckConfig.from_dict({"duality": {"max_target": 3}})


def test_run_small():
    cfg = CheckConfig.from_dict({"duality": {"max_order": 20, "budget": 30},
                                 "pairings": {"a_max": 8}})
    r = cfg.run("duality")
    assert r.ok and "budget 30s" in r.notes and cfg.within_budget("duality", r)
    assert cfg.run("pairings").instances_checked == 8
