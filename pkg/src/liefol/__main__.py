import sys

from liefol.cli import main

sys.exit(main())
