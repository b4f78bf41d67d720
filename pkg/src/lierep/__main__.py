import sys

from lierep.cli import main

sys.exit(main())
