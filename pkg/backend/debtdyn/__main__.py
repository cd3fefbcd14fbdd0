import sys

from debtdyn.cli import main

sys.exit(main())
