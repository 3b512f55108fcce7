from specfloor.cli import main
import sys

sys.exit(main())
