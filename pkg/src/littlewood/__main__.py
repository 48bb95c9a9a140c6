import sys

from littlewood.cli import main

sys.exit(main())
