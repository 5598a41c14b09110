import pathlib
import sys

# allow running the suite from a fresh checkout without installing
_src = str(pathlib.Path(__file__).resolve().parents[1] / "src")
if _src not in sys.path:
    sys.path.insert(0, _src)
