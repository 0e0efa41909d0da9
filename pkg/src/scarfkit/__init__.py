"""Combinatorial fixed-point machinery: dominant sets, chain-simplices,
oriented-matroid colorings, Freudenthal triangulations, and mod-2
intersection numbers, with exhaustive checkers for every construction."""

__version__ = "0.1.0"
