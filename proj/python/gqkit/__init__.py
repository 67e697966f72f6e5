"""Finite generalized quadrangles: constructions, spectra and ring classes.

Thin re-export of the compiled extension. The build tree layout (ctest) puts
the module on sys.path directly; the installed wheel nests it in the package.
"""

try:
    from ._gqkit import *  # noqa: F401,F403
    from ._gqkit import __doc__ as _doc
except ImportError:  # build-tree layout
    from _gqkit import *  # noqa: F401,F403
    from _gqkit import __doc__ as _doc

__doc__ = _doc
__version__ = "0.1.0"
