from ._revsim import *  # noqa: F401,F403
