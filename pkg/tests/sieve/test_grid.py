import math

import pytest
from pydantic import ValidationError

from latticestream.guarantees import AUTO_T
from latticestream.sieve import AlgoConfig, grid_exponents, grid_taus, grid_window, live_bound
from latticestream.types import LevelSearch, Mode


class TestAlgoConfig:
    def test_defaults(self):
        cfg = AlgoConfig()
        assert cfg.mode is Mode.SUBMODULAR
        assert cfg.t == "auto"
        assert cfg.resolved_t == pytest.approx(2.6180339887)
        assert cfg.scale == AUTO_T
        assert cfg.epsilon == 0.1
        assert cfg.level_search is LevelSearch.BINARY
        assert cfg.workers == 1

    def test_alpha_mode_defaults(self):
        """alpha mode scans linearly and scales the cost by 1 + alpha"""
        cfg = AlgoConfig(mode="alpha-weak", alpha=0.5)
        assert cfg.mode is Mode.ALPHA
        assert cfg.level_search is LevelSearch.LINEAR
        assert cfg.scale == 1.5
        assert cfg.mode_param == 0.5

    def test_explicit_level_search(self):
        cfg = AlgoConfig(mode="alpha", level_search="binary")
        assert cfg.level_search is LevelSearch.BINARY

    @pytest.mark.parametrize("t", ["auto", "AUTO", 1.0, "2.5", 3])
    def test_valid_t(self, t):
        AlgoConfig(t=t)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"t": 0.5},
            {"t": "fast"},
            {"alpha": 0.0},
            {"alpha": 1.5},
            {"epsilon": 0.0},
            {"epsilon": 1.0},
            {"workers": 0},
            {"mode": "matroid"},
            {"level_search": "ternary"},
        ]
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            AlgoConfig(**kwargs)

    def test_immutable(self):
        cfg = AlgoConfig()
        with pytest.raises(TypeError):
            cfg.epsilon = 0.2


class TestGridWindow:
    def test_submodular(self):
        assert grid_window(1.0, 8, AlgoConfig()) == (0.125, 1.0)

    def test_alpha(self):
        assert grid_window(1.0, 8, AlgoConfig(mode="alpha", alpha=0.5)) == (0.125, 2.0)

    @pytest.mark.parametrize("m,k", [(0.0, 8), (-1.0, 8), (1.0, 0)])
    def test_empty(self, m, k):
        assert grid_window(m, k, AlgoConfig()) is None
        assert grid_exponents(grid_window(m, k, AlgoConfig()), 1.5) == []

    def test_exponents(self):
        """Powers of 1.5 inside [1/8, 1]"""
        window = grid_window(1.0, 8, AlgoConfig(epsilon=0.5))
        assert grid_exponents(window, 1.5) == [-5, -4, -3, -2, -1, 0]
        expected = [0.1317, 0.1975, 0.2963, 0.4444, 0.6667, 1.0]
        assert grid_taus(window, 1.5) == pytest.approx(expected, abs=1e-4)

    def test_closed_edges(self):
        """Grid points on either edge of the window are kept"""
        assert grid_exponents((0.25, 4.0), 2.0) == [-2, -1, 0, 1, 2]


class TestLiveBound:
    @pytest.mark.parametrize(
        "k,cfg,expected",
        [
            (8, AlgoConfig(epsilon=0.5), math.ceil(math.log(8) / math.log(1.5)) + 2),
            (6, AlgoConfig(epsilon=0.05), math.ceil(math.log(6) / math.log(1.05)) + 2),
            (10, AlgoConfig(mode="alpha", alpha=0.5, epsilon=0.2), math.ceil(math.log(20) / math.log(1.2)) + 2),
            (1, AlgoConfig(), 2),
            (0, AlgoConfig(), 0),
        ]
    )
    def test_formula(self, k, cfg, expected):
        assert live_bound(k, cfg) == expected

