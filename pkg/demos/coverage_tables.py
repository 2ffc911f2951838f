"""Export the four coverage datasets as CSV and count the pairs in each."""

import sys
from pathlib import Path

from fatpoints.figures import figure_dataset, figure_pairs, format_csv

out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("coverage")
out.mkdir(exist_ok=True)
for k in (1, 2, 3, 4):
    runs = figure_dataset(k, 220, 220)
    (out / f"figure{k}.csv").write_text(format_csv(runs))
    print(f"figure {k}: {len(runs)} runs, {len(figure_pairs(runs))} (n, m) pairs")
