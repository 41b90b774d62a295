import hashlib
import random


def child_seed(seed: int, name: str, index: int = 0) -> int:
    """Derive a 64-bit seed for the `index`-th use of a named stochastic operation."""
    digest = hashlib.blake2b(f"{seed}:{name}:{index}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def child_rng(seed: int, name: str, index: int = 0) -> random.Random:
    return random.Random(child_seed(seed, name, index))
