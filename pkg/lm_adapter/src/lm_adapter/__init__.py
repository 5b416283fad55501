"""Reference backend for the newline-delimited JSON distribution protocol.

A watermarking toolkit queries this process for next-token distributions:
one request line in, one response line out, over stdio.  The package stays
dependency-free and model-agnostic: any callable mapping a context to
(tokens, probs) can be served, and a small corpus-backed toy model is
bundled for demos and tests.
"""

from .backend import toy_backend
from .protocol import PROTOCOL_VERSION, AdapterSession, serve

__all__ = ["AdapterSession", "PROTOCOL_VERSION", "serve", "toy_backend"]
__version__ = "0.1.0"
