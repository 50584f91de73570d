"""Print the desk-scale report tables from a finished experiment.

    python3 -m advforensics.cli run --config configs/desk.toml
    python3 gallery/desk_reports.py [--config configs/desk.toml]
"""

import argparse
import json

import numpy as np

from advforensics.config import load_config
from advforensics.evaluation import confusion_from_report, load_report, render_table


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--config", default="configs/desk.toml")
    args = parser.parse_args()
    reports = load_config(args.config).out / "reports"

    for name in ("detection_grid", "unseen_attacks"):
        print(f"\n{name} (balanced accuracy, %)")
        print(render_table(load_report(reports / f"{name}.json")))

    print("\nrecovery (victim accuracy, %)")
    for c in load_report(reports / "recovery_table.json").cells:
        print(f"  {c['test_victim']}/{c['test_attack']}: original {100 * c['original']:.2f}  "
              f"adversarial {100 * c['adversarial']:.2f}  recovered {100 * c['recovered']:.2f}")

    attribution = load_report(reports / "attribution.json")
    labels = attribution.metadata["labels"]
    for victim in sorted({c["test_victim"] for c in attribution.cells}):
        cm = confusion_from_report(attribution, victim, labels)
        print(f"\nattribution on {victim} (rows true, columns predicted)")
        print("".join(label.rjust(10) for label in [""] + labels))
        for label, row in zip(labels, cm):
            print(label.rjust(10) + "".join(str(v).rjust(10) for v in row))
        print("recall " + "  ".join(f"{l} {r:.3f}" for l, r in zip(labels, np.diag(cm) / cm.sum(1))))

    print("\nsalt-and-pepper sweep on normals")
    for c in load_report(reports / "robustness.json").cells:
        print(f"  density {c['density']:.1f}: accuracy {100 * c['accuracy']:.2f}")

    print("\nperturbation histogram distances (L1)")
    for d in json.loads((reports / "histograms" / "distances.json").read_text())["distances"]:
        print(f"  {d['a_victim']}/{d['a_attack']} vs {d['b_victim']}/{d['b_attack']}: {d['l1']:.4f}")


if __name__ == "__main__":
    main()
