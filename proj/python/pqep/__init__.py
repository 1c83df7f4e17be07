"""Energy cost model and algorithm selection for post-quantum key
establishment and signatures, driven by benchmarked cycle/power data.

The heavy lifting lives in the native ``_pqep`` extension; this package
re-exports it and adds small file-handling conveniences.
"""

from pathlib import Path

from ._pqep import *  # noqa: F401,F403
from . import _pqep as _native

__all__ = [name for name in dir(_native) if not name.startswith("_")] + ["load_dataset"]
__version__ = "0.1.0"


def load_dataset(path):
    """Load a dataset file, picking CSV/JSON from the extension or content."""
    text = Path(path).read_text()
    fmt = "json" if str(path).endswith(".json") or text.lstrip().startswith("{") else "csv"
    return _native.parse_dataset(text, fmt)
