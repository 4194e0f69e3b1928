"""How much does the a-absorption order matter?

The normal-ordering rule absorbs every non-final ``a`` into its right
neighbour, and the implementation picks the leftmost one first. This script
contracts random words under other absorption orders (rightmost first,
uniformly random) and reports how often the totally contracted value agrees
with the leftmost-first reference.

    python scripts/rule0_confluence.py --words 20000 --max-len 8 --seed 0
"""

import argparse
import random
from collections import Counter

from gja.algebra import A
from gja.words import Word, contract, _signed_entry

A_IDX = A.index("a")


def absorb(w: Word, pick) -> Word:
    coeff, letters = w.coeff, list(w.letters)
    while True:
        spots = [i for i in range(len(letters) - 1) if letters[i] == A_IDX]
        if not spots:
            return Word(coeff, tuple(letters))
        i = pick(spots)
        sign, k = _signed_entry(letters[i], letters[i + 1])
        coeff *= sign
        letters[i : i + 2] = [k]


def main():
    ap = argparse.ArgumentParser(description="a-absorption order study")
    ap.add_argument("--words", type=int, default=20000)
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    orders = {"rightmost": lambda s: s[-1], "random": lambda s: rng.choice(s)}
    agree = Counter()
    with_a = 0
    examples = {}
    for _ in range(args.words):
        n = rng.randint(2, args.max_len)
        w = Word(1, tuple(rng.randrange(4) for _ in range(n)))
        if A_IDX not in w.letters[:-1]:
            continue
        with_a += 1
        ref = contract(w)
        for name, pick in orders.items():
            alt = contract(absorb(w, pick))
            if alt == ref:
                agree[name] += 1
            else:
                examples.setdefault(name, (w.text, str(ref), str(alt)))
    print(f"{with_a} random words with a non-final a (length 2..{args.max_len}, seed {args.seed})")
    for name in orders:
        rate = agree[name] / with_a if with_a else float("nan")
        print(f"  {name:<10} agrees with leftmost-first on {agree[name]}/{with_a} ({rate:.2%})")
        if name in examples:
            text, ref, alt = examples[name]
            print(f"             e.g. {text}: leftmost {ref}, {name} {alt}")


if __name__ == "__main__":
    main()
