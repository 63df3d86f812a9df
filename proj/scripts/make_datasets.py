#!/usr/bin/env python3
"""Regenerates the shipped process-inventory datasets.

The step counts and the per-wafer energy totals are calibrated anchors;
the per-step energy split and the material flows are synthetic
placeholders with a fixed RNG seed. Rerunning this script reproduces the
checked-in files byte for byte.
"""

import random
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "data"

# (file, technology, step count, total kWh per wafer)
DATASETS = [
    ("cmos_process_inventory.csv", "cmos", 206, 937.4),
    ("aqfp_process_inventory.csv", "aqfp", 216, 90.5),
]

# step name stems per category, cycled deterministically
STEPS = {
    "deposition": ["PECVD oxide deposition", "LPCVD nitride deposition", "sputter metal deposition",
                   "ALD barrier deposition", "epitaxial layer growth", "spin-on dielectric coat"],
    "lithography": ["photoresist spin coat", "soft bake", "stepper exposure", "post-exposure bake",
                    "develop", "hard bake"],
    "etch": ["RIE oxide etch", "deep trench etch", "metal wet etch", "resist ash strip",
             "nitride plasma etch"],
    "implant_or_anneal": ["well implant", "source/drain implant", "rapid thermal anneal",
                          "furnace anneal", "dopant activation"],
    "clean": ["RCA-1 clean", "RCA-2 clean", "HF dip", "DI water rinse", "megasonic clean",
              "spin rinse dry"],
    "metrology": ["film thickness measurement", "overlay metrology", "CD-SEM inspection",
                  "particle scan", "sheet resistance probe"],
    "other": ["wafer sort", "laser marking", "backside grind", "edge bead removal"],
}

MATERIALS = {
    "deposition": [("silane", "gas"), ("nitrogen", "gas"), ("argon", "gas"), ("tungsten", "metal"),
                   ("niobium", "metal"), ("aluminum", "metal")],
    "lithography": [("photoresist", "chemical"), ("developer", "chemical"), ("hmds", "chemical")],
    "etch": [("cf4", "gas"), ("chlorine", "gas"), ("oxygen", "gas")],
    "implant_or_anneal": [("arsine", "gas"), ("phosphine", "gas"), ("boron", "chemical")],
    "clean": [("ultrapure water", "water"), ("hydrogen peroxide", "chemical"),
              ("ammonium hydroxide", "chemical"), ("hydrofluoric acid", "chemical"),
              ("isopropanol", "chemical")],
    "metrology": [],
    "other": [("ultrapure water", "water"), ("slurry", "chemical")],
}

# rough share of steps per category in a full flow
MIX = [("deposition", 0.17), ("lithography", 0.26), ("etch", 0.19),
       ("implant_or_anneal", 0.10), ("clean", 0.16), ("metrology", 0.09), ("other", 0.03)]


def build(name: str, technology: str, count: int, total_kwh: float) -> None:
    rng = random.Random(f"{technology}-{count}")
    categories = []
    for cat, share in MIX:
        categories += [cat] * round(share * count)
    while len(categories) < count:
        categories.append("clean")
    categories = categories[:count]
    rng.shuffle(categories)

    raw = [rng.lognormvariate(0.0, 0.8) for _ in range(count)]
    scale = total_kwh / sum(raw)
    energies = [round(e * scale, 4) for e in raw]
    # absorb rounding drift in the largest step so the file sums to the anchor
    drift = round(total_kwh - sum(energies), 4)
    energies[energies.index(max(energies))] += drift

    used = {}
    lines = [
        "# PROVENANCE: the step count and the per-wafer energy total of this",
        "# dataset are calibrated anchors; the per-step energy split and the",
        "# material flows are synthetic placeholders (see scripts/make_datasets.py).",
        f"# technology: {technology}   steps: {count}   total: {total_kwh} kWh/wafer",
        "index,name,category,energy_kwh,materials",
    ]
    for i, (cat, energy) in enumerate(zip(categories, energies), start=1):
        stems = STEPS[cat]
        stem = stems[used.setdefault(cat, 0) % len(stems)]
        used[cat] += 1
        suffix = used[cat] // len(stems) + 1
        step_name = f"{stem} {suffix}" if used[cat] > len(stems) else stem
        flows = []
        for mat, cls in rng.sample(MATERIALS[cat], k=min(len(MATERIALS[cat]), rng.randint(0, 2))):
            grams = round(rng.lognormvariate(3.0, 1.2), 2)
            flows.append(f"{mat}:{cls}:{grams}")
        lines.append(f"{i},{step_name},{cat},{energy:.4f},{';'.join(flows)}")

    out = DATA / name
    out.write_text("\n".join(lines) + "\n")
    check = sum(float(l.split(",")[3]) for l in lines[5:])
    print(f"{name}: {len(lines) - 5} steps, total {check:.4f} kWh")


def main() -> None:
    DATA.mkdir(exist_ok=True)
    for name, technology, count, total in DATASETS:
        build(name, technology, count, total)


if __name__ == "__main__":
    main()
