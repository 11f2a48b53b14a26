#!/usr/bin/env python3
"""Sweep the SNR target (10-30 dB) at the default BS-relay distance.

Averages total consumed power per scheme over random user positions and
writes one CSV row per (SNR target, scheme).
"""

import argparse

from pinchrelay import SweepSpec, SystemConfig, export_csv, run_sweep, write_gnuplot_script


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=1000, help="user positions per sweep value")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", default="fig1.csv")
    ap.add_argument("--gnuplot", action="store_true", help="also write a companion gnuplot script")
    args = ap.parse_args()

    config = SystemConfig()
    spec = SweepSpec(
        variable="snr_target_db",
        values=tuple(float(v) for v in range(10, 31, 2)),
        ue_samples=args.samples,
        seed=args.seed,
    )
    records = run_sweep(config, spec)
    export_csv(records, args.out)
    if args.gnuplot:
        write_gnuplot_script(args.out, args.out.rsplit(".", 1)[0] + ".gp", "SNR target [dB]")

    print(f"{'gamma0_db':>10} " + " ".join(f"{s:>14}" for s in spec.schemes))
    for rec in records:
        means = " ".join(f"{rec.mean_total_power_w[s]:14.6g}" for s in spec.schemes)
        print(f"{rec.variable_value:>10g} {means}")
    print(f"\nwrote {args.out} ({len(records)} sweep values, {args.samples} users each)")


if __name__ == "__main__":
    main()
