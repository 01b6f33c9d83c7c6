#!/usr/bin/env python3
"""Tabulate exact partial sums of the diagonal subgroup count vs the main term.

Computes the series constants H3 and H3' once by both routes (accelerated
Euler product with proved tails, direct summation with an empirical tail),
then prints one comparison row per checkpoint.
"""

import argparse

from abelian3.asymptotics import average_order_reports, h3_and_h3prime


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--x-values",
        default="1000,10000,100000",
        help="comma-separated checkpoints (default 1000,10000,100000)",
    )
    parser.add_argument(
        "--prime-limit",
        type=int,
        default=100_000,
        help="Euler-product truncation (default 100000)",
    )
    parser.add_argument(
        "--tail-terms",
        type=int,
        default=200_000,
        help="direct-summation truncation (default 200000)",
    )
    args = parser.parse_args()
    xs = [int(piece) for piece in args.x_values.split(",") if piece.strip()]
    if not xs or min(xs) < 2:
        parser.error("--x-values needs integers >= 2")

    est = h3_and_h3prime(prime_limit=args.prime_limit, tail_terms=args.tail_terms)
    print(
        f"H3  = {est.h3!r} (+- {est.h3_bound:.3e}); "
        f"direct {est.direct_h3!r} (+- {est.direct_h3_bound:.3e})"
    )
    print(
        f"H3' = {est.h3prime!r} (+- {est.h3prime_bound:.3e}); "
        f"direct {est.direct_h3prime!r} (+- {est.direct_h3prime_bound:.3e})"
    )
    print(f"{'x':>10} {'exact sum':>20} {'main term':>16} {'rel err':>11} {'exponent':>9}")
    for rep in average_order_reports(xs, estimate=est):
        print(
            f"{rep.x:>10} {rep.exact_sum:>20} {rep.main_term:>16.6e} "
            f"{rep.relative_error:>11.3e} {rep.error_exponent_estimate:>9.4f}"
        )


if __name__ == "__main__":
    main()
