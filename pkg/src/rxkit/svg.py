"""Static SVG scatter rendering of constellations.

Ideal points are drawn as crosses (one ``path`` element each, class
"ideal"), received samples as dots (one ``circle`` element each, class
"sample"), so element counts in the XML mirror the input sizes exactly.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET

import numpy as np

from .units import as_symbol_frame

_SVG_NS = "http://www.w3.org/2000/svg"


def constellation_svg(ideal, samples, *, title: str | None = None, size: int = 480) -> str:
    """Render ideal points and noisy samples to an SVG document string."""
    ideal = as_symbol_frame(ideal)
    samples = as_symbol_frame(samples)

    margin = 24.0
    span = size - 2 * margin
    amplitudes = [1.0]
    if ideal.size:
        amplitudes.append(float(np.max(np.abs([ideal.real, ideal.imag]))))
    if samples.size:
        amplitudes.append(float(np.max(np.abs([samples.real, samples.imag]))))
    limit = 1.15 * max(amplitudes)

    def px(value: float) -> float:
        return margin + (value + limit) / (2 * limit) * span

    def py(value: float) -> float:
        return margin + (limit - value) / (2 * limit) * span

    svg = ET.Element(
        "svg",
        {
            "xmlns": _SVG_NS,
            "width": str(size),
            "height": str(size),
            "viewBox": f"0 0 {size} {size}",
        },
    )
    if title:
        ET.SubElement(svg, "title").text = title
    ET.SubElement(
        svg, "rect", {"x": "0", "y": "0", "width": str(size), "height": str(size), "fill": "white"}
    )
    axis_style = {"stroke": "#bbbbbb", "stroke-width": "1"}
    ET.SubElement(
        svg,
        "line",
        {"x1": _f(px(-limit)), "y1": _f(py(0)), "x2": _f(px(limit)), "y2": _f(py(0)), **axis_style},
    )
    ET.SubElement(
        svg,
        "line",
        {"x1": _f(px(0)), "y1": _f(py(-limit)), "x2": _f(px(0)), "y2": _f(py(limit)), **axis_style},
    )

    for point in samples:
        ET.SubElement(
            svg,
            "circle",
            {
                "class": "sample",
                "cx": _f(px(point.real)),
                "cy": _f(py(point.imag)),
                "r": "1.5",
                "fill": "#1f6fb2",
                "fill-opacity": "0.55",
            },
        )
    arm = 5.0
    for point in ideal:
        x, y = px(point.real), py(point.imag)
        ET.SubElement(
            svg,
            "path",
            {
                "class": "ideal",
                "d": (
                    f"M {_f(x - arm)} {_f(y)} L {_f(x + arm)} {_f(y)} "
                    f"M {_f(x)} {_f(y - arm)} L {_f(x)} {_f(y + arm)}"
                ),
                "stroke": "#c43333",
                "stroke-width": "2",
                "fill": "none",
            },
        )
    return ET.tostring(svg, encoding="unicode", xml_declaration=True) + "\n"


def _f(value: float) -> str:
    return f"{value:.2f}"
