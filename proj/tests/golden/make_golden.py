#!/usr/bin/env python3
"""Regenerates rng_golden.json from the documented stream-derivation scheme.

Derivation (all arithmetic mod 2^64):
  seed     = mix64(master_seed XOR (stream_index * 0x9E3779B97F4A7C15))
  state[i] = SplitMix64(seed).next(), i = 0..3   (xoshiro256** state)
where mix64 is the SplitMix64 finalizer and SplitMix64.next() advances the
counter by 0x9E3779B97F4A7C15 before finalizing. Outputs are xoshiro256**.
"""

import json
import os

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z):
    z &= MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return (z ^ (z >> 31)) & MASK


def rotl(x, k):
    return ((x << k) | (x >> (64 - k))) & MASK


class Xoshiro256StarStar:
    def __init__(self, seed):
        s = seed & MASK
        self.state = []
        for _ in range(4):
            s = (s + GAMMA) & MASK
            self.state.append(mix64(s))

    def next(self):
        s = self.state
        result = (rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = rotl(s[3], 45)
        return result


def derive(master_seed, stream_index):
    return Xoshiro256StarStar(mix64(master_seed ^ ((stream_index * GAMMA) & MASK)))


def main():
    cases = []
    for master, index in [(0, 0), (0, 1), (7, 0), (7, 9999), (0xDEADBEEF, 42), (MASK, MASK)]:
        rng = derive(master, index)
        cases.append({
            "master_seed": master,
            "stream_index": index,
            "first_outputs": [rng.next() for _ in range(4)],
        })
    out = os.path.join(os.path.dirname(__file__), "rng_golden.json")
    with open(out, "w") as fh:
        json.dump({"scheme": "splitmix64-derive/xoshiro256** v1", "cases": cases}, fh, indent=2)
        fh.write("\n")
    print("wrote", out)


if __name__ == "__main__":
    main()
