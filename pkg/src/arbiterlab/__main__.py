import sys

from arbiterlab.cli import main

sys.exit(main())
