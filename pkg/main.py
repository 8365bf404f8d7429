import sys

from toric_mori.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
