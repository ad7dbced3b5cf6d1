"""Allow running hodunkl as "python -m hodunkl"."""

import sys

from hodunkl.interfaces.cli import main

sys.exit(main())
