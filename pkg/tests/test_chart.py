import re
import xml.etree.ElementTree as ET

import pytest

from ahpcompare.chart import ChartSpec, render_chart
from ahpcompare.corpus import get_dataset
from ahpcompare.trend import ComparisonSeries, SeriesTooShort

NS = {"s": "http://www.w3.org/2000/svg"}


def _points(svg, cls):
    root = ET.fromstring(svg)
    line = root.find(f".//s:polyline[@class='{cls}']", NS)
    return [tuple(map(float, p.split(","))) for p in line.get("points").split()], line


def test_customer_chart_structure():
    svg = render_chart(ChartSpec.from_series(get_dataset("Customer").published_series()))
    root = ET.fromstring(svg)
    ticks = [t.text for t in root.iter("{http://www.w3.org/2000/svg}text") if t.get("class") == "x-tick"]
    assert ticks == ["ENG", "PIS", "RMG", "STF", "SRT"]
    fuzzy, fuzzy_el = _points(svg, "fuzzy")
    ahp, ahp_el = _points(svg, "ahp")
    assert len(fuzzy) == len(ahp) == 5
    assert ahp_el.get("stroke-dasharray") and not fuzzy_el.get("stroke-dasharray")
    assert "Comparison of AHP and fuzzy MCDM for Customer" in svg
    assert "Fuzzy MCDM" in svg and ">AHP<" in svg


def test_deterministic():
    spec = ChartSpec.from_series(get_dataset("Tools").published_series())
    assert render_chart(spec) == render_chart(spec)


def test_flat_series_overlap():
    svg = render_chart(ChartSpec.from_series(ComparisonSeries("flat", "ab", [0.5, 0.5], [0.5, 0.5])))
    fuzzy, _ = _points(svg, "fuzzy")
    ahp, _ = _points(svg, "ahp")
    assert fuzzy == ahp
    assert fuzzy[0][1] == fuzzy[1][1]


def test_risk_peak_at_umtg():
    series = get_dataset("Risk").computed_series()
    spec = ChartSpec.from_series(series)
    svg = render_chart(spec)
    fuzzy, _ = _points(svg, "fuzzy")
    assert len(re.findall('class="x-tick"', svg)) == 15
    top = min(range(15), key=lambda i: fuzzy[i][1])  # SVG y grows downward
    assert series.labels[top] == "UMTG"


def test_y_range():
    spec = ChartSpec("x", ("a", "b"), (0.1, 0.2), (0.3, 0.5))
    assert spec.y_max == pytest.approx(0.55)
    svg = render_chart(spec)
    # gridlines at 0.0 .. 0.5
    grid = ET.fromstring(svg).find(".//s:g[@class='grid']", NS)
    assert len(grid) == 6


def test_escaping_and_short_series():
    svg = render_chart(ChartSpec("a<b", ("x&y", "z"), (0.1, 0.2), (0.3, 0.4)))
    ET.fromstring(svg)
    with pytest.raises(SeriesTooShort):
        render_chart(ChartSpec("x", ("a",), (0.1,), (0.2,)))
