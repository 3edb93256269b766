import sys

from finspace.cli import main

sys.exit(main())
