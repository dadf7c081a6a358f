"""SVG renderer for rhombic diagrams and their tilings.

Tiles are drawn as exact integer rhombi from the tiling's anchor points,
scaled to pixels; classes get distinct fills and symbols are drawn as
text labels.
"""

from __future__ import annotations

from .rhombic import Filling
from .tilings import Tiling, tile_class
from .words import D, E

_FILLS = {"de": "#cfe2f3", "da": "#d9ead3", "ae": "#fff2cc", "aa": "#ead1dc"}
_SYMBOL_TEXT = {"alpha": "α", "beta": "β", "q": "q"}


def _class_code(cls) -> str:
    a = "d" if cls[0] == D else "a"
    b = "e" if cls[1] == E else "a"
    return a + b


def tiling_svg(tiling: Tiling, filling: Filling | None = None,
               scale: int = 28) -> str:
    """An SVG drawing of a tiling, optionally with a filling's symbols."""
    corners = {pair: tiling.tile_corners(pair) for pair in tiling.tiles()}
    pts = [p for cs in corners.values() for p in cs] or [(0, 0)]
    xs = [x for x, _ in pts]
    ys = [y for _, y in pts]
    minx, maxx = min(xs + [0]), max(xs + [0])
    miny, maxy = min(ys + [0]), max(ys + [0])
    pad = 1

    def to_px(pt):
        x, y = pt
        return ((x - minx + pad) * scale, (maxy - y + pad) * scale)

    width = (maxx - minx + 2 * pad) * scale
    height = (maxy - miny + 2 * pad) * scale
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    statuses = filling.statuses() if filling is not None else {}
    for pair in sorted(corners):
        cls = tile_class(tiling.word, pair)
        quad = [to_px(c) for c in corners[pair]]
        d = " ".join(f"{x:.1f},{y:.1f}" for x, y in quad)
        fill = _FILLS[_class_code(cls)]
        parts.append(f'<polygon points="{d}" fill="{fill}" '
                     f'stroke="#333" stroke-width="1"/>')
        status = statuses.get(pair)
        if status in _SYMBOL_TEXT:
            cx = sum(x for x, _ in quad) / 4
            cy = sum(y for _, y in quad) / 4
            parts.append(f'<text x="{cx:.1f}" y="{cy + 4:.1f}" '
                         f'font-size="{scale // 2}" text-anchor="middle" '
                         f'font-family="serif">{_SYMBOL_TEXT[status]}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_word(word_text: str, out_path: str, k: int | None = None) -> None:
    from .tilings import maximal_tiling
    from .words import parse_word
    word = parse_word(word_text, k)
    tiling = maximal_tiling(word, k)
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(tiling_svg(tiling))
