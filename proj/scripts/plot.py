#!/usr/bin/env python3
"""Plot it2fls outputs.

  plot.py surface surface.csv [--out surface.png]   one 3-D panel per engine column
  plot.py trace run1.csv [run2.csv ...] [--out trace.png]   angle vs time
"""

import argparse

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import pandas as pd


def plot_surface(path, out):
    df = pd.read_csv(path)
    x1 = np.sort(df["x1"].unique())
    x2 = np.sort(df["x2"].unique())
    engines = [c for c in df.columns if c not in ("x1", "x2")]
    fig = plt.figure(figsize=(5 * len(engines), 4.5))
    X1, X2 = np.meshgrid(x1, x2, indexing="ij")
    for i, name in enumerate(engines):
        ax = fig.add_subplot(1, len(engines), i + 1, projection="3d")
        Z = df[name].to_numpy().reshape(len(x1), len(x2))
        ax.plot_surface(X1, X2, Z, cmap="viridis")
        ax.set_xlabel("x1")
        ax.set_ylabel("x2")
        ax.set_title(name)
    fig.tight_layout()
    fig.savefig(out, dpi=120)


def plot_traces(paths, out):
    fig, ax = plt.subplots(figsize=(7, 4))
    for p in paths:
        df = pd.read_csv(p)
        ax.plot(df["t"], df["angle"], label=p)
    ax.set_xlabel("t (s)")
    ax.set_ylabel("angle (rad)")
    ax.grid(True)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out, dpi=120)


def main():
    ap = argparse.ArgumentParser()
    sub = ap.add_subparsers(dest="kind", required=True)
    s = sub.add_parser("surface")
    s.add_argument("csv")
    s.add_argument("--out", default="surface.png")
    t = sub.add_parser("trace")
    t.add_argument("csv", nargs="+")
    t.add_argument("--out", default="trace.png")
    args = ap.parse_args()
    if args.kind == "surface":
        plot_surface(args.csv, args.out)
    else:
        plot_traces(args.csv, args.out)


if __name__ == "__main__":
    main()
