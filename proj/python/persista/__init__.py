from ._persista import *  # noqa: F401,F403
