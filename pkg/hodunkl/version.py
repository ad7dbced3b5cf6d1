"""Version number of hodunkl."""

__version__: str = "0.1.0"
