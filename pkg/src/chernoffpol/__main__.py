import sys

from chernoffpol.cli import main

sys.exit(main())
