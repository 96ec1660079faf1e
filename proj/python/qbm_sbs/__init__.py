"""Python bindings for the qbm_sbs C++ library."""

try:
    from ._qbm_sbs import *  # noqa: F401,F403  installed wheel layout
    from . import _qbm_sbs as _core
except ImportError:  # build tree: the extension sits next to the package on PYTHONPATH
    from _qbm_sbs import *  # noqa: F401,F403
    import _qbm_sbs as _core

__all__ = [name for name in dir(_core) if not name.startswith("_")]
