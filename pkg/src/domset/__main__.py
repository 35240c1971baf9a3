import sys

from domset.cli import main

sys.exit(main())
