#!/usr/bin/env python3
"""Regenerate the frontend test fixture from the real blend pipeline.

Writes frontend/test/fixtures/blend_presets.json: the exact /v1/blend
response for the two presets with all nine questions enabled.
"""

import json
from pathlib import Path

from chordblend.idioms import IdiomRegistry
from chordblend.service import compute_blend_response


def main():
    registry = IdiomRegistry.with_presets()
    response = compute_blend_response(
        registry, "c-major-artificial", "fsharp-major-artificial",
        {f"Q{i}": True for i in range(1, 10)}, capacity=100, bridge_mass=0.2)
    out = Path(__file__).resolve().parents[1] / "frontend" / "test" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)
    path = out / "blend_presets.json"
    path.write_text(json.dumps(response, indent=2, ensure_ascii=False) + "\n",
                    encoding="utf-8")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
