import sys

from lamplight.cli import main

sys.exit(main())
