import sys

from mazur.cli import main

sys.exit(main())
