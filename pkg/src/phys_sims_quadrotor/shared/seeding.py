"""Deterministic seed derivation and config hashing."""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(seed: int, *path: int) -> int:
    """Derive an independent 64-bit child seed from ``seed`` and an index path."""
    if seed < 0 or any(index < 0 for index in path):
        msg = "seeds and derivation indices must be non-negative"
        raise ValueError(msg)
    sequence = np.random.SeedSequence([seed, *path])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def hash_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


__all__ = ["derive_seed", "hash_text"]
