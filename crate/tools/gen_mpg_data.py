#!/usr/bin/env python3
"""Generate data/auto_mpg.csv, the bundled MPG benchmark table.

Produces a deterministic 398-row table in the classic auto-MPG layout
(cylinders, displacement, horsepower, weight, acceleration, model_year -> mpg)
with 6 records carrying a missing horsepower marker '?', so 392 complete
records survive cleaning. Regenerate with:

    python3 tools/gen_mpg_data.py > data/auto_mpg.csv

If you have the genuine UCI auto-MPG export, convert it to the same header
and drop it in place of the bundled file; the pipeline does not care which
one it reads.
"""

import numpy as np

SEED = 20240817
N = 398
# 0-based row positions that get a '?' horsepower, mirroring the spread of
# the classic file's six incomplete records.
MISSING_ROWS = {32, 126, 330, 336, 354, 374}


def main() -> None:
    rng = np.random.default_rng(SEED)

    cyl_values = np.array([3, 4, 5, 6, 8])
    cyl_probs = np.array([4, 204, 3, 84, 103], dtype=float)
    cyl_probs /= cyl_probs.sum()
    cylinders = rng.choice(cyl_values, size=N, p=cyl_probs)

    disp_band = {3: (70, 80), 4: (68, 156), 5: (121, 183), 6: (145, 262), 8: (260, 455)}
    displacement = np.array(
        [rng.uniform(*disp_band[int(c)]) for c in cylinders]
    )

    horsepower = 18.0 + 0.38 * displacement + rng.normal(0.0, 9.0, size=N)
    horsepower = np.clip(horsepower, 46, 230)

    weight = 1250.0 + 5.5 * displacement + 5.5 * horsepower + rng.normal(0.0, 150.0, size=N)
    weight = np.clip(weight, 1613, 5140)

    acceleration = 25.5 - 0.065 * horsepower + rng.normal(0.0, 1.2, size=N)
    acceleration = np.clip(acceleration, 8.0, 24.8)

    model_year = rng.integers(70, 83, size=N)

    wn = (weight - 1613.0) / (5140.0 - 1613.0)
    hn = (horsepower - 46.0) / (230.0 - 46.0)
    dn = (displacement - 68.0) / (455.0 - 68.0)
    yn = (model_year - 70.0) / 12.0

    score = -21.0 * wn + 6.0 * wn**2 - 7.5 * hn - 2.5 * dn + 6.5 * yn + 3.0 * yn * (1.0 - wn)
    lo, hi = score.min(), score.max()
    mpg = 9.5 + (score - lo) / (hi - lo) * (45.5 - 9.5)
    mpg = mpg + rng.normal(0.0, 0.30, size=N)
    mpg = np.clip(mpg, 9.0, 46.6)

    print("cylinders,displacement,horsepower,weight,acceleration,model_year,mpg")
    for i in range(N):
        hp = "?" if i in MISSING_ROWS else f"{horsepower[i]:.1f}"
        print(
            f"{cylinders[i]},{displacement[i]:.1f},{hp},{weight[i]:.0f},"
            f"{acceleration[i]:.1f},{model_year[i]},{mpg[i]:.1f}"
        )


if __name__ == "__main__":
    main()
