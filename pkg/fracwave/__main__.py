import sys

from fracwave.cli import main


sys.exit(main())
