"""Combinatorics of normed symmetric monoidal categories over a finite group.

All structured values use the same text formats as the batch CLI (group /
gset / tree / nsmc); verification entry points return ``(ok, report)``.
"""

from ._core import *  # noqa: F401,F403
