"""Run the command line front end as ``python -m nsympeak``."""

import sys

from .cli import main

sys.exit(main())
