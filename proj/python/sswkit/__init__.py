try:
    from ._sswkit import *  # noqa: F401,F403
    from ._sswkit import __doc__  # noqa: F401
except ImportError:  # in-tree builds leave the extension next to the package
    from _sswkit import *  # noqa: F401,F403
    from _sswkit import __doc__  # noqa: F401
