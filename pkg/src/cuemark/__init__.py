"""Cue-gated green/red-list watermarking for generated code.

Subpackages cover the full pipeline: a lossless lexer, cue-list
construction from successor-entropy statistics, a smoothed n-gram token
model (plus a stdio adapter protocol for external models), the watermark
schemes themselves, semantics-preserving attacks, and a TPR/FPR/AUROC
evaluation harness.
"""

__version__ = "0.1.0"
