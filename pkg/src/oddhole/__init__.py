"""Structure detectors and validators for graphs with odd girth and no long
odd holes."""

__version__ = "0.1.0"
