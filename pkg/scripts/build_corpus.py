"""Regenerate the bundled polygon corpus and its manifest of expected exit codes."""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from polyradon import gen_hexagon, gen_regular, polygon_from_half, serialize

CORPUS = Path(__file__).resolve().parents[1] / "src" / "polyradon" / "corpus"

ALPHAS = ["1/4", "1/3", "1/2", "1", "3/2", "2", "3"]
SCALES = ["3/2", "2", "5/2"]


def slug(text: str) -> str:
    return text.replace("/", "_")


def main() -> None:
    CORPUS.mkdir(parents=True, exist_ok=True)
    for old in CORPUS.glob("*.json"):
        old.unlink()
    manifest: dict[str, int] = {}

    def put(name: str, text: str, code: int) -> None:
        (CORPUS / f"{name}.json").write_text(text, encoding="utf-8")
        manifest[f"{name}.json"] = code

    put("square", serialize(polygon_from_half([(1, 1), (-1, 1)])), 1)
    put("diamond", serialize(polygon_from_half([(1, 0), (0, 1)])), 1)
    for a in ALPHAS:
        for apex in ("vertical", "horizontal"):
            for s in SCALES:
                p = gen_hexagon(Fraction(a), apex, Fraction(s))
                put(f"hexagon_a{slug(a)}_{apex[0]}{slug(s)}", serialize(p), 0 if s == "2" else 1)
    for m in range(6, 21, 2):
        put(f"regular_{m}", serialize(gen_regular(m)), 0 if m % 4 == 2 else 1)
    five = {"schema": 1, "mode": "exact", "vertices": [[1, 0], [0, 1], [-1, 0], [0, -1], [1, 1]]}
    put("invalid_five", json.dumps(five, indent=2) + "\n", 2)
    (CORPUS / "manifest.json").write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"{len(manifest)} documents in {CORPUS}")


if __name__ == "__main__":
    main()
