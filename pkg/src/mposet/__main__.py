import sys

from mposet.cli import main

sys.exit(main())
