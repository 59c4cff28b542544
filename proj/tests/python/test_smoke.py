import math

import pytest

import fractalts as ft


def test_version_string():
    assert isinstance(ft.__version__, str)
    assert ft.__version__.count(".") == 2


def test_white_noise_hurst_near_half():
    series = ft.white_noise(8192, 7)
    spectrum = ft.analyze(series)
    assert spectrum.hurst == pytest.approx(0.5, abs=0.07)
    assert spectrum.delta_h < 0.2


def test_analyze_with_explicit_config():
    series = ft.white_noise(2048, 3)
    config = ft.AnalysisConfig.defaults(len(series))
    assert config.detrend_order == 1
    assert config.q_grid[0] == -5.0
    config.validate(len(series))
    spectrum = ft.analyze(series, config)
    assert len(spectrum.h) == len(config.q_grid)
    table = ft.fluctuation_function(ft.build_profile(series), config)
    refit = ft.fit_scaling(table)
    assert refit.h == spectrum.h


def test_cascade_matches_closed_form_oracle():
    assert ft.cascade_exact_hq(0.3, 5.0) == pytest.approx(0.7104312711275831, abs=1e-13)
    values = ft.cascade(0.5, 4, 1).values
    assert len(values) == 16
    assert all(v == 1.0 / 16.0 for v in values)
    assert math.fsum(ft.cascade(0.3, 10, 2).values) == pytest.approx(1.0, abs=1e-12)


def test_cross_correlation_recovers_shift():
    base = ft.white_noise(1024, 11).values
    delayed = base[-3:] + base[:-3]
    result = ft.cross_correlation(
        ft.TimeSeries(base, "a"), ft.TimeSeries(delayed, "b"), 10
    )
    assert result.peak_lag == 3
    assert result.peak_value > 0.9
    assert len(result.lags) == 21


def test_csv_round_trip(tmp_path):
    series = ft.TimeSeries(
        [1.5, -2.25, 3.125], "demo", dates=["2020-01-01", "2020-01-02", "2020-01-03"]
    )
    path = tmp_path / "demo.csv"
    ft.save_csv(series, str(path))
    loaded = ft.load_csv(str(path), "demo", date_column="date")
    assert loaded.values == series.values
    assert loaded.dates == series.dates


def test_align_by_date():
    a = ft.TimeSeries([1.0, 2.0, 3.0], "a", dates=["2020-01-01", "2020-01-02", "2020-01-03"])
    b = ft.TimeSeries([5.0, 6.0, 7.0], "b", dates=["2020-01-02", "2020-01-03", "2020-01-04"])
    aligned_a, aligned_b = ft.align_by_date(a, b)
    assert aligned_a.values == [2.0, 3.0]
    assert aligned_b.values == [5.0, 6.0]


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ft.Error, match="0 < H < 1"):
        ft.fgn(1.3, 64, 1)
    with pytest.raises(ft.Error):
        ft.load_csv("/nonexistent/path.csv", "value")
    config = ft.AnalysisConfig()
    config.q_grid = [2.0]
    config.tau_grid = [4, 5, 6]
    with pytest.raises(ft.Error):
        config.validate(1024)
