#!/usr/bin/env python3
"""Blend the two artificial presets and print the resulting harmonic space.

Walks the full workbench loop once: pick the C major and F# major presets,
enable all nine questions, rank the blended transitions, assemble the
extended matrix, list the bridge paths, and audition a sampled progression
that crosses between the idioms.
"""

import argparse

from chordblend.arguments import ArgumentSet
from chordblend.blending import blend_idioms
from chordblend.extension import bridge_paths, build_extended
from chordblend.idioms import c_major_preset, fsharp_major_preset
from chordblend.sampling import WalkConfig, sample_walk


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--questions", default="",
                        help="comma list like q1,q6,q9 (default: all nine)")
    parser.add_argument("--capacity", type=int, default=100)
    parser.add_argument("--bridge-mass", type=float, default=0.2)
    parser.add_argument("--walk-length", type=int, default=16)
    parser.add_argument("--seed", type=int, default=2016)
    args = parser.parse_args()

    if args.questions:
        arguments = ArgumentSet.from_questions(args.questions.split(","))
    else:
        arguments = ArgumentSet.all_questions()

    i1, i2 = c_major_preset(), fsharp_major_preset()
    pool = blend_idioms(i1, i2, arguments, args.capacity)
    extended = build_extended(i1, i2, pool, args.bridge_mass)

    print(f"idioms: {i1.name} x {i2.name}")
    print(f"questions: {', '.join(a.question.name for a in arguments)}")
    print(f"\ntop blends (of {len(pool)} pooled):")
    print(f"  {'transition':28} {'rate':>7} {'assoc':>7} {'signed asym':>12}")
    for entry in pool.entries[:10]:
        s = entry.score
        print(f"  {str(entry.transition):28} {s.rate:7.4f} "
              f"{s.total_assoc:7.3f} {s.signed_asym:12.4f}")

    print(f"\nextended space: {len(extended.chords)} chords "
          f"(from {len(i1.chords)} + {len(i2.chords)})")
    for direction, label in (("1to2", f"{i1.name} -> {i2.name}"),
                             ("2to1", f"{i2.name} -> {i1.name}")):
        paths = bridge_paths(extended, direction)
        print(f"\nbridge paths {label}: {len(paths)}")
        for p in paths[:6]:
            via = f" via {p.intermediate}" if p.intermediate is not None else ""
            print(f"  {p.kind:8} {p.from_chord} -> {p.to_chord}{via}"
                  f"  (rate {p.combined_rate:.4f})")

    walk = sample_walk(extended.matrix,
                       WalkConfig(start=0, length=args.walk_length, seed=args.seed))
    print("\nsampled progression:")
    print("  " + " ".join(str(extended.chords[i]) for i in walk))


if __name__ == "__main__":
    main()
