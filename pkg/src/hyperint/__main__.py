import sys

from hyperint.cli import main

sys.exit(main())
