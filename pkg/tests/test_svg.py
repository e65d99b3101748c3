import xml.etree.ElementTree as ET

import numpy as np

from rxkit.modulation import ModulationScheme, ideal_points
from rxkit.svg import constellation_svg

SVG_NS = "{http://www.w3.org/2000/svg}"


def render_and_parse(ideal, samples, **kwargs):
    text = constellation_svg(ideal, samples, **kwargs)
    return text, ET.fromstring(text)


def test_marker_counts_match_inputs():
    spec = ideal_points(ModulationScheme.QAM16)
    rng = np.random.default_rng(0)
    samples = rng.standard_normal(137) + 1j * rng.standard_normal(137)
    _, root = render_and_parse(spec.points, samples)
    circles = [e for e in root.iter(f"{SVG_NS}circle") if e.get("class") == "sample"]
    crosses = [e for e in root.iter(f"{SVG_NS}path") if e.get("class") == "ideal"]
    assert len(circles) == 137
    assert len(crosses) == 16


def test_empty_samples_renders_ideal_only():
    spec = ideal_points(ModulationScheme.QPSK)
    _, root = render_and_parse(spec.points, [])
    assert not [e for e in root.iter(f"{SVG_NS}circle") if e.get("class") == "sample"]
    assert len([e for e in root.iter(f"{SVG_NS}path") if e.get("class") == "ideal"]) == 4


def test_title_and_declaration_present():
    spec = ideal_points(ModulationScheme.QPSK)
    text, root = render_and_parse(spec.points, [], title="QPSK at 12 dB")
    assert text.startswith("<?xml")
    assert root.find(f"{SVG_NS}title").text == "QPSK at 12 dB"


def test_output_is_deterministic():
    spec = ideal_points(ModulationScheme.QAM64)
    samples = spec.points + 0.01
    assert constellation_svg(spec.points, samples) == constellation_svg(spec.points, samples)
